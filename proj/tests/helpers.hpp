#pragma once

#include <string>
#include <vector>

#include "bq/suite.hpp"

namespace bqtest {

inline const std::vector<std::string>& battery() {
    static const std::vector<std::string> groups = {
        "cyclic(4)",    "product(cyclic(2),cyclic(2))",
        "dihedral(4)",  "quaternion8",
        "symmetric(3)", "symmetric(4)",
        "heisenberg(3)"};
    return groups;
}

struct GroupFixture {
    bq::FiniteGroup g;
    bq::UnitaryDual dual;

    explicit GroupFixture(const std::string& spec)
        : g(bq::build_group(bq::parse_group_spec(spec))), dual(bq::build_dual(g)) {}
};

inline double max_abs(const bq::Matrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace bqtest
