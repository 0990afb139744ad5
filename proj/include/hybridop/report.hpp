#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hybridop {

enum class Verdict { pass, fail, discrepancy_logged };

std::string to_string(Verdict v);

struct ReportRow {
    std::string grid;  // grid point descriptor
    double n = 0.0;
    double observed = 0.0;
    double reference = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
};

struct ExperimentReport {
    std::string name;
    std::vector<ReportRow> rows;
    std::optional<double> fitted_order;
    Verdict verdict = Verdict::pass;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_meta(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    const std::string* find_meta(const std::string& key) const;

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    std::string summary() const;  // one-line verdict summary
};

/// 17-significant-digit rendering used in CSV output, round-trip exact.
std::string format_double(double v);

}  // namespace hybridop
