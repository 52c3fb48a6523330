#pragma once

#include <string>
#include <vector>

namespace bq {

// One axiom / identity check with its worst residual.
struct CheckRecord {
    std::string name;
    std::string detail;      // first counterexample or note, empty when clean
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct ValidationReport {
    std::vector<CheckRecord> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string summary() const {
        std::string s;
        for (const auto& c : checks) {
            s += (c.pass ? "[pass] " : "[FAIL] ");
            s += c.name;
            if (!c.detail.empty()) s += " (" + c.detail + ")";
            s += "\n";
        }
        return s;
    }
};

} // namespace bq
