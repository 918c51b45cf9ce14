#include "qhowe/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qhowe {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << check_name << ": " << status();
    if (!parameters.empty()) {
        os << " (";
        bool first = true;
        for (const auto& [k, v] : parameters) {
            if (!first) os << ", ";
            os << k << "=" << v;
            first = false;
        }
        os << ")";
    }
    os << "\n";
    if (!dimension_table.empty()) {
        os << "  lambda        dim_left  dim_right  2^-delta  contribution\n";
        long total = 0;
        for (const auto& row : dimension_table) {
            std::string lam = row.lambda.to_string();
            os << "  " << lam << std::string(lam.size() < 14 ? 14 - lam.size() : 1, ' ')
               << row.dim_left << "  " << row.dim_right << "  "
               << (row.delta_exponent ? "1/2" : "1") << "  " << row.contribution << "\n";
            total += row.contribution;
        }
        os << "  total contribution: " << total << "\n";
    }
    if (!detail.empty()) os << "  detail: " << detail << "\n";
    os << "  elapsed_ms: " << elapsed_ms << "\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check_name;
    j["params"] = parameters;
    j["status"] = status();
    j["dims"] = nlohmann::json::array();
    for (const auto& row : dimension_table) {
        j["dims"].push_back({{"lambda", row.lambda.to_string()},
                             {"dim_left", row.dim_left},
                             {"dim_right", row.dim_right},
                             {"delta_exponent", row.delta_exponent},
                             {"contribution", row.contribution}});
    }
    j["detail"] = detail;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

std::string VerificationReport::csv_header() {
    return "check,params,status,detail,elapsed_ms";
}

std::string VerificationReport::to_csv_row() const {
    std::ostringstream ps;
    bool first = true;
    for (const auto& [k, v] : parameters) {
        if (!first) ps << ";";
        ps << k << "=" << v;
        first = false;
    }
    std::ostringstream os;
    os << csv_escape(check_name) << "," << csv_escape(ps.str()) << "," << status() << ","
       << csv_escape(detail) << "," << elapsed_ms;
    return os.str();
}

} // namespace qhowe
