#pragma once

// Verification suites: named property checks with seeded random inputs and
// machine-readable reports. Report bodies are deterministic given
// (group, suite, tol, seed); wall time stays out of the JSON body.

#include <cstdint>
#include <string>
#include <vector>

#include "bq/fourier.hpp"
#include "bq/random.hpp"

namespace bq {

struct SuiteCheck {
    std::string name;
    std::string verifies;  // the identity being checked, human-readable
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    bool skipped = false;  // e.g. abelian-only check on a non-abelian group
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string group;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::vector<SuiteCheck> checks;
    double wall_seconds = 0.0;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {
        "plancherel", "weyl",       "wigner",   "coherent",
        "berezin",    "pseudodiff", "bargmann", "toeplitz"};
    return ids;
}

// Runs the named suite (or every suite for "all"). Throws
// std::invalid_argument for an unknown suite id.
SuiteReport run_suite(const GroupSpec& spec, const std::string& suite, double tol,
                      std::uint64_t seed);

// Deterministic JSON body (no wall time) and a human-readable rendering.
std::string suite_report_json(const SuiteReport& r);
std::string suite_report_text(const SuiteReport& r);

struct GroupListing {
    std::string name;
    int order = 0;
    std::vector<int> irrep_dims;  // sorted ascending
};

// The default battery with irrep dimension multisets.
std::vector<GroupListing> list_groups();
std::string list_groups_text();

// Seeded random fields used by the suites and the CLI.
SymbolField random_symbol(const UnitaryDual& dual, int order, Rng& rng,
                          Orientation o = Orientation::DualFirst);
// Pointwise A A^*: positive at every phase-space point.
SymbolField random_positive_symbol(const UnitaryDual& dual, int order, Rng& rng,
                                   Orientation o = Orientation::DualFirst);

} // namespace bq
