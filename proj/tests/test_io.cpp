#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "qover/crank.hpp"
#include "qover/io.hpp"
#include "qover/partitions.hpp"

using namespace qover;

TEST_CASE("decimal strings are exact") {
    CHECK(decimal_string(BigInt("123456789012345678901234567890")) ==
          "123456789012345678901234567890");
    CHECK(decimal_string(BigInt(-7)) == "-7");
    CHECK(decimal_string(Rational(22, 7)) == "22/7");
    CHECK(decimal_string(Rational(4, 2)) == "2");
}

TEST_CASE("CSV output is header-first, comma-separated, newline-terminated") {
    OutputTable table;
    table.columns = {"n", "count"};
    table.rows = {{"0", "1"}, {"1", "2"}};
    std::ostringstream os;
    write_csv(os, table);
    CHECK(os.str() == "n,count\n0,1\n1,2\n");
}

TEST_CASE("JSON output carries meta and rows") {
    OutputTable table;
    table.columns = {"n", "count"};
    table.rows = {{"0", "1"}, {"1", "2"}};
    table.meta_command = "expand";
    table.meta = {{"k", "1"}, {"j", "1"}};
    std::ostringstream os;
    write_json(os, table);
    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc.at("meta").at("command") == "expand");
    CHECK(doc.at("meta").at("k") == "1");
    CHECK(doc.at("rows").size() == 2);
    CHECK(doc.at("rows")[1].at("count") == "2");
    CHECK(os.str().find("\"meta\"") < os.str().find("\"rows\""));
}

TEST_CASE("identical inputs produce byte-identical output") {
    OutputTable table;
    table.columns = {"a"};
    table.rows = {{"42"}};
    table.meta_command = "x";
    std::ostringstream first, second;
    write_json(first, table);
    write_json(second, table);
    CHECK(first.str() == second.str());
}

TEST_CASE("crank spec JSON round-trips through serialization") {
    const CrankSpec spec =
        load_crank_spec(std::string(QOVER_SOURCE_DIR) + "/cranks/wagner_3_2_mod7");
    nlohmann::json doc;
    doc["k"] = spec.params.k;
    doc["j"] = spec.params.j;
    doc["numerators"] = nlohmann::json::array();
    for (const auto& [b, c] : spec.numerators) doc["numerators"].push_back({b, c});
    doc["denominators"] = nlohmann::json::array();
    for (const auto& [d, f] : spec.denominators) doc["denominators"].push_back({d, f});
    const CrankSpec again = parse_crank_spec(doc);
    CHECK(again.params.k == spec.params.k);
    CHECK(again.params.j == spec.params.j);
    CHECK(again.numerators == spec.numerators);
    CHECK(again.denominators == spec.denominators);
}

TEST_CASE("expanded counts survive a CSV write/read round-trip exactly") {
    const BigSeries series = coloured_overpartition_series(ColourParams(3, 2), 40);
    OutputTable table;
    table.columns = {"n", "count"};
    for (long n = 0; n <= 40; ++n)
        table.rows.push_back({std::to_string(n), decimal_string(series[n])});
    std::ostringstream os;
    write_csv(os, table);

    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "n,count");
    long expected_n = 0;
    while (std::getline(is, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stol(line.substr(0, comma)) == expected_n);
        CHECK(BigInt(line.substr(comma + 1)) == series[expected_n]);
        ++expected_n;
    }
    CHECK(expected_n == 41);
}
