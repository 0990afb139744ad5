#include "hybridop/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace hybridop {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::discrepancy_logged: return "discrepancy-logged";
    }
    return "unknown";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::string* ExperimentReport::find_meta(const std::string& key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return &v;
    return nullptr;
}

void ExperimentReport::write_csv(std::ostream& os) const {
    for (const auto& [k, v] : metadata) os << "# " << k << "=" << v << "\n";
    os << "# verdict=" << to_string(verdict) << "\n";
    if (fitted_order) os << "# fitted_order=" << format_double(*fitted_order) << "\n";
    os << "grid,n,observed,reference,abs_err,rel_err\n";
    for (const auto& r : rows) {
        os << r.grid << ',' << format_double(r.n) << ',' << format_double(r.observed) << ','
           << format_double(r.reference) << ',' << format_double(r.abs_err) << ','
           << format_double(r.rel_err) << "\n";
    }
}

void ExperimentReport::write_json(std::ostream& os) const {
    nlohmann::json j;
    j["name"] = name;
    j["verdict"] = to_string(verdict);
    if (fitted_order) j["fitted_order"] = *fitted_order;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = meta;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"grid", r.grid},
                             {"n", r.n},
                             {"observed", r.observed},
                             {"reference", r.reference},
                             {"abs_err", r.abs_err},
                             {"rel_err", r.rel_err}});
    os << j.dump(2) << "\n";
}

std::string ExperimentReport::summary() const {
    std::string s = name + ": " + to_string(verdict) + " (" + std::to_string(rows.size()) + " rows";
    if (fitted_order) s += ", fitted_order=" + format_double(*fitted_order);
    s += ")";
    return s;
}

}  // namespace hybridop
