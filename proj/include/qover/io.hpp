#pragma once

// Deterministic CSV and JSON emission for CLI results. Counts are written as
// exact decimal strings; no timestamps or environment data appear in output.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qover/numeric.hpp"

namespace qover {

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::string meta_command;                              // e.g. "expand"
    std::vector<std::pair<std::string, std::string>> meta; // ordered key/value pairs
};

inline std::string decimal_string(const BigInt& v) { return v.str(); }

inline std::string decimal_string(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::string decimal_string(const PrecReal& v) {
    std::ostringstream os;
    os.precision(kWorkingDigits - 10);
    os << v;
    return os.str();
}

inline void write_csv(std::ostream& os, const OutputTable& table) {
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const OutputTable& table) {
    nlohmann::ordered_json doc;
    doc["meta"]["command"] = table.meta_command;
    for (const auto& [key, value] : table.meta) doc["meta"][key] = value;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
            obj[table.columns[i]] = row[i];
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

}  // namespace qover
