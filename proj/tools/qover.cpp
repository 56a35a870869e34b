// Command-line front door: exact expansions, reference-table checks, crank
// multisection/certification, asymptotic ratio reports, congruence scans, and
// inequality suites, emitted as deterministic CSV or JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qover/asymptotics.hpp"
#include "qover/crank.hpp"
#include "qover/inequalities.hpp"
#include "qover/io.hpp"
#include "qover/partitions.hpp"
#include "qover/reference_table.hpp"

using namespace qover;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct EmitConfig {
    std::string format = "csv";
    std::string out;
};

void add_emit_options(CLI::App* cmd, EmitConfig& emit) {
    cmd->add_option("--format", emit.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", emit.out, "Output path (default: stdout)");
}

void emit(const OutputTable& table, const EmitConfig& config) {
    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out);
        if (!file) throw std::runtime_error("cannot open output path '" + config.out + "'");
    }
    std::ostream& os = config.out.empty() ? std::cout : file;
    if (config.format == "json")
        write_json(os, table);
    else
        write_csv(os, table);
}

int clamp_precision(int requested) {
    if (requested > kWorkingDigits)
        throw std::runtime_error("precision " + std::to_string(requested) +
                                 " exceeds the working precision of " +
                                 std::to_string(kWorkingDigits) + " digits");
    if (requested < kMinWorkingDigits) {
        std::cerr << "warning: precision " << requested << " is below the enforced minimum of "
                  << kMinWorkingDigits << " digits; raised to " << kMinWorkingDigits << "\n";
        return kMinWorkingDigits;
    }
    return requested;
}

std::string real_string(const PrecReal& v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

std::string milli_string(int milli) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0.%03d", milli);
    return buf;
}

CoeffSequence sequence_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open source file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("source file is empty");
    CoeffSequence seq{{}, path};
    long expected_n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("source row without a comma: '" + line + "'");
        if (std::stol(line.substr(0, comma)) != expected_n)
            throw std::runtime_error("source rows must be consecutive from n = 0");
        seq.values.emplace_back(BigInt(line.substr(comma + 1)));
        ++expected_n;
    }
    return seq;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact coloured-overpartition counts, crank multisection, and asymptotics"};
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "Exact counts as n,count rows");
    long ek = 1, ej = 1, eN = 0;
    EmitConfig expand_emit;
    expand->add_option("--k", ek, "Number of colours");
    expand->add_option("--j", ej, "Number of overlinable colours");
    expand->add_option("--N", eN, "Truncation order")->required();
    add_emit_options(expand, expand_emit);

    // table1
    auto* table1 = app.add_subcommand("table1", "Compare computed ratios to the embedded table");
    std::vector<long> table_ns;
    int table_precision = kWorkingDigits;
    EmitConfig table_emit;
    table1->add_option("--n", table_ns, "Restrict to these n values")->delimiter(',');
    table1->add_option("--precision", table_precision, "Display digits for ratios");
    add_emit_options(table1, table_emit);

    // multisect
    auto* multisect = app.add_subcommand("multisect", "Per-residue counts, one row per class");
    std::string ms_spec, ms_method = "bucket";
    long ms_b = 0, ms_N = 0;
    EmitConfig ms_emit;
    multisect->add_option("--spec", ms_spec, "Crank spec file")->required();
    multisect->add_option("--b", ms_b, "Modulus")->required();
    multisect->add_option("--N", ms_N, "Truncation order")->required();
    multisect->add_option("--method", ms_method, "bucket or roots")
        ->check(CLI::IsMember({"bucket", "roots"}));
    add_emit_options(multisect, ms_emit);

    // equidist
    auto* equidist = app.add_subcommand("equidist", "Equidistribution deviations");
    std::string eq_spec;
    long eq_b = 0;
    std::vector<long> eq_ns;
    EmitConfig eq_emit;
    equidist->add_option("--spec", eq_spec, "Crank spec file")->required();
    equidist->add_option("--b", eq_b, "Modulus")->required();
    equidist->add_option("--n", eq_ns, "Indices to report")->required()->delimiter(',');
    add_emit_options(equidist, eq_emit);

    // certify
    auto* certify = app.add_subcommand("certify", "Cyclotomic divisibility certification");
    std::string ct_spec;
    long ct_ell = 0, ct_delta = 0, ct_N = 0;
    EmitConfig ct_emit;
    certify->add_option("--spec", ct_spec, "Crank spec file")->required();
    certify->add_option("--ell", ct_ell, "Prime modulus")->required();
    certify->add_option("--delta", ct_delta, "Residue class")->required();
    certify->add_option("--N", ct_N, "Certification bound")->required();
    add_emit_options(certify, ct_emit);

    // asympt
    auto* asympt = app.add_subcommand("asympt", "Exact-to-asymptotic ratio report");
    long ak = 1, aj = 1;
    std::vector<long> a_ns;
    int a_precision = kWorkingDigits;
    EmitConfig a_emit;
    asympt->add_option("--k", ak, "Number of colours");
    asympt->add_option("--j", aj, "Number of overlinable colours");
    asympt->add_option("--n", a_ns, "Indices to report")->required()->delimiter(',');
    asympt->add_option("--precision", a_precision, "Display digits for ratios");
    add_emit_options(asympt, a_emit);

    // inequalities
    auto* ineq = app.add_subcommand("inequalities", "Threshold and scan reports");
    std::string in_source, in_which;
    long in_k = 1, in_j = 1, in_N = -1, in_order = 2, in_cap = 60, in_trunc = 200;
    std::vector<std::string> in_grid{"0", "0.25", "0.5", "0.75", "1"};
    EmitConfig in_emit;
    ineq->add_option("--source", in_source, "CSV file of n,count rows (from expand)");
    ineq->add_option("--k", in_k, "Number of colours");
    ineq->add_option("--j", in_j, "Number of overlinable colours");
    ineq->add_option("--N", in_N, "Truncation order when expanding directly");
    ineq->add_option("--which", in_which, "logconcavity, turan, bo, or laguerre")
        ->required()
        ->check(CLI::IsMember({"logconcavity", "turan", "bo", "laguerre"}));
    ineq->add_option("--order", in_order, "Jensen/Laguerre order");
    ineq->add_option("--cap", in_cap, "Scan cap on n1 + n2");
    ineq->add_option("--grid", in_grid, "Evaluation grid")->delimiter(',');
    ineq->add_option("--trunc", in_trunc, "Truncation index for the entire function");
    add_emit_options(ineq, in_emit);

    // scan-congruences
    auto* scan = app.add_subcommand("scan-congruences", "Residue classes with full divisibility");
    long sk = 1, sj = 1, s_ell = 0, sN = 0;
    EmitConfig s_emit;
    scan->add_option("--k", sk, "Number of colours");
    scan->add_option("--j", sj, "Number of overlinable colours");
    scan->add_option("--ell", s_ell, "Prime modulus")->required();
    scan->add_option("--N", sN, "Scan bound")->required();
    add_emit_options(scan, s_emit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (expand->parsed()) {
        const BigSeries series = coloured_overpartition_series(ColourParams(ek, ej), eN);
        OutputTable table;
        table.meta_command = "expand";
        table.meta = {{"k", std::to_string(ek)}, {"j", std::to_string(ej)},
                      {"N", std::to_string(eN)}};
        table.columns = {"n", "count"};
        for (long n = 0; n <= eN; ++n)
            table.rows.push_back({std::to_string(n), decimal_string(series[n])});
        emit(table, expand_emit);
        return 0;
    }

    if (table1->parsed()) {
        const int digits = clamp_precision(table_precision);
        const auto rows = table_check(table_ns);
        OutputTable table;
        table.meta_command = "table1";
        table.meta = {{"table_version", std::to_string(kReferenceTableVersion)},
                      {"precision", std::to_string(digits)}};
        table.columns = {"k", "j", "n", "printed", "ratio", "floor_milli", "shifted_round_milli",
                         "status"};
        bool any_fail = false;
        for (const TableCheckRow& row : rows) {
            any_fail = any_fail || !row.pass;
            table.rows.push_back({std::to_string(row.cell.k), std::to_string(row.cell.j),
                                  std::to_string(row.cell.n), milli_string(row.cell.milli),
                                  real_string(row.ratio, digits), std::to_string(row.floor_milli),
                                  std::to_string(row.shifted_round_milli),
                                  row.pass ? "PASS" : "FAIL"});
        }
        emit(table, table_emit);
        return any_fail ? kExitCheckFailed : 0;
    }

    if (multisect->parsed()) {
        const CrankSpec spec = load_crank_spec(ms_spec);
        const auto rows = ms_method == "roots" ? multisect_roots(spec, ms_b, ms_N)
                                               : multisect_bucket(spec, ms_b, ms_N);
        OutputTable table;
        table.meta_command = "multisect";
        table.meta = {{"spec", ms_spec}, {"b", std::to_string(ms_b)},
                      {"N", std::to_string(ms_N)}, {"method", ms_method}};
        for (long n = 0; n <= ms_N; ++n) table.columns.push_back("n" + std::to_string(n));
        for (const MultisectionRow& row : rows) {
            std::vector<std::string> cells;
            cells.reserve(static_cast<size_t>(ms_N) + 1);
            for (long n = 0; n <= ms_N; ++n) cells.push_back(decimal_string(row.counts[n]));
            table.rows.push_back(std::move(cells));
        }
        emit(table, ms_emit);
        return 0;
    }

    if (equidist->parsed()) {
        const CrankSpec spec = load_crank_spec(eq_spec);
        const auto devs = equidistribution_deviations(spec, eq_b, eq_ns);
        OutputTable table;
        table.meta_command = "equidist";
        table.meta = {{"spec", eq_spec}, {"b", std::to_string(eq_b)}};
        table.columns = {"n", "deviation"};
        for (size_t i = 0; i < eq_ns.size(); ++i)
            table.rows.push_back({std::to_string(eq_ns[i]), real_string(devs[i], 15)});
        emit(table, eq_emit);
        return 0;
    }

    if (certify->parsed()) {
        const CrankSpec spec = load_crank_spec(ct_spec);
        const CertifyResult result = certify_phi_divisibility(spec, ct_ell, ct_delta, ct_N);
        OutputTable table;
        table.meta_command = "certify";
        table.meta = {{"spec", ct_spec}};
        table.columns = {"ell", "delta", "N", "status", "first_failure"};
        table.rows.push_back({std::to_string(ct_ell), std::to_string(ct_delta),
                              std::to_string(ct_N), result.ok ? "PASS" : "FAIL",
                              result.ok ? "" : std::to_string(result.first_failure)});
        emit(table, ct_emit);
        return result.ok ? 0 : kExitCheckFailed;
    }

    if (asympt->parsed()) {
        const int digits = clamp_precision(a_precision);
        const auto rows = ratio_report(ColourParams(ak, aj), a_ns);
        OutputTable table;
        table.meta_command = "asympt";
        table.meta = {{"k", std::to_string(ak)}, {"j", std::to_string(aj)},
                      {"precision", std::to_string(digits)}};
        table.columns = {"n", "ratio"};
        for (const RatioRow& row : rows)
            table.rows.push_back({std::to_string(row.n), real_string(row.ratio, digits)});
        emit(table, a_emit);
        return 0;
    }

    if (ineq->parsed()) {
        CoeffSequence seq = in_source.empty()
                                ? sequence_from_series(
                                      coloured_overpartition_series(ColourParams(in_k, in_j),
                                                                    in_N < 0 ? 200 : in_N),
                                      "pbar")
                                : sequence_from_csv(in_source);
        OutputTable table;
        table.meta_command = "inequalities";
        table.meta = {{"which", in_which}, {"length", std::to_string(seq.size())}};
        if (in_which == "logconcavity") {
            const auto front = log_concavity_front(seq);
            table.columns = {"quantity", "value"};
            table.rows.push_back(
                {"log_concavity_front", front ? std::to_string(*front) : "none"});
        } else if (in_which == "turan") {
            const auto threshold = turan_threshold(seq, in_order);
            table.columns = {"order", "threshold"};
            table.rows.push_back(
                {std::to_string(in_order), threshold ? std::to_string(*threshold) : "none"});
        } else if (in_which == "bo") {
            const BOScanResult r = bessenrodt_ono_scan(seq, in_cap);
            table.meta.emplace_back("cap", std::to_string(in_cap));
            table.columns = {"kind", "n1", "n2"};
            for (const auto& [n1, n2] : r.strict_violations)
                table.rows.push_back({"strict", std::to_string(n1), std::to_string(n2)});
            for (const auto& [n1, n2] : r.equalities)
                table.rows.push_back({"equal", std::to_string(n1), std::to_string(n2)});
        } else {
            std::vector<PrecReal> grid;
            grid.reserve(in_grid.size());
            for (const std::string& g : in_grid) grid.emplace_back(g.c_str());
            const LaguerreResult r = laguerre_check(seq, in_order, grid, in_trunc);
            table.columns = {"order", "trunc", "status", "first_failure_x"};
            table.rows.push_back({std::to_string(in_order), std::to_string(in_trunc),
                                  r.ok ? "PASS" : "FAIL",
                                  r.ok ? "" : real_string(r.first_failure_x, 15)});
            emit(table, in_emit);
            return r.ok ? 0 : kExitCheckFailed;
        }
        emit(table, in_emit);
        return 0;
    }

    if (scan->parsed()) {
        const auto claims = scan_congruences(ColourParams(sk, sj), s_ell, sN);
        OutputTable table;
        table.meta_command = "scan-congruences";
        table.meta = {{"k", std::to_string(sk)}, {"j", std::to_string(sj)},
                      {"ell", std::to_string(s_ell)}};
        table.columns = {"delta", "verified_up_to"};
        for (const CongruenceClaim& claim : claims)
            table.rows.push_back(
                {std::to_string(claim.delta), std::to_string(claim.verified_up_to)});
        emit(table, s_emit);
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
