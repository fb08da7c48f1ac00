#include "pss/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pss {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string render_value(const ReportValue& value) {
    if (const auto* count = std::get_if<BigCount>(&value)) return count->str();
    std::string out = "{";
    bool first = true;
    for (const auto& p : std::get<PermutationSet>(value)) {
        if (!first) out += " | ";
        out += format(p);
        first = false;
    }
    return out + "}";
}

nlohmann::json to_json(const ReportValue& value) {
    if (const auto* count = std::get_if<BigCount>(&value)) return count->str();
    auto arr = nlohmann::json::array();
    for (const auto& p : std::get<PermutationSet>(value)) arr.push_back(format(p));
    return arr;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["claim"] = std::string(to_string(report.claim));
    doc["params"] = {{"n_min", report.n_min}, {"n_max", report.n_max}};
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        doc["rows"].push_back({{"n", row.n},
                               {"param", row.param},
                               {"expected", to_json(row.expected)},
                               {"observed", to_json(row.observed)},
                               {"pass", row.pass}});
    }
    doc["overall_pass"] = report.overall_pass;
    return doc;
}

nlohmann::json to_json(std::span<const VerificationReport> reports) {
    nlohmann::json doc;
    doc["reports"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
        doc["reports"].push_back(to_json(r));
        all = all && r.overall_pass;
    }
    doc["overall_pass"] = all;
    return doc;
}

std::string to_csv(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    out << "claim,n,param,expected,observed,pass\n";
    for (const auto& r : reports) {
        for (const auto& row : r.rows) {
            out << to_string(r.claim) << ',' << row.n << ',' << csv_field(row.param) << ','
                << csv_field(render_value(row.expected)) << ','
                << csv_field(render_value(row.observed)) << ',' << (row.pass ? "true" : "false")
                << '\n';
        }
    }
    return out.str();
}

std::string to_table(std::span<const VerificationReport> reports) {
    std::vector<std::array<std::string, 6>> cells{{"claim", "n", "param", "expected", "observed", "pass"}};
    for (const auto& r : reports) {
        for (const auto& row : r.rows) {
            cells.push_back({std::string(to_string(r.claim)), std::to_string(row.n), row.param,
                             render_value(row.expected), render_value(row.observed),
                             row.pass ? "PASS" : "FAIL"});
        }
    }
    std::array<std::size_t, 6> width{};
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], line[c].size());
    }
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 6; ++c) {
            out << line[c];
            if (c + 1 < 6) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << '\n';
    }
    for (const auto& r : reports) {
        out << to_string(r.claim) << ": " << (r.overall_pass ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

}  // namespace pss
