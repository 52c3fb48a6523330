#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bq/report.hpp"

namespace bq {

// Catalog families of finite groups used as the test corpus.
struct GroupSpec {
    enum class Family { Cyclic, Dihedral, Symmetric, Quaternion8, Heisenberg, Product };

    Family family = Family::Cyclic;
    int n = 1;  // parameter for the parametric families, unused for Quaternion8/Product
    std::shared_ptr<GroupSpec> left, right;  // factors when family == Product

    std::string str() const;
};

// Parses "cyclic(4)", "dihedral(4)", "symmetric(3)", "quaternion8",
// "heisenberg(3)", "product(a,b)". Throws std::invalid_argument on bad input.
GroupSpec parse_group_spec(const std::string& text);

// A finite group as a Cayley table with counting Haar measure (each singleton
// has mass 1). Element 0 is always the identity; inverses are precomputed.
// Immutable after construction.
struct FiniteGroup {
    std::string name;
    int order = 0;
    int identity = 0;
    std::vector<int> mul_table;  // row-major, order x order
    std::vector<int> inv_table;
    std::optional<GroupSpec> spec;  // present for catalog-built groups

    int mul(int x, int y) const { return mul_table[x * order + y]; }
    int inv(int x) const { return inv_table[x]; }
    bool is_abelian() const;
};

// Maximum group order accepted by the builders; default 64, overridable via
// the BQ_ORDER_BOUND environment variable.
int order_bound();

FiniteGroup build_group(const GroupSpec& spec);

// Checks associativity, identity, inverses and the Latin-square property
// exhaustively. Failures carry a witness in the report, nothing throws.
ValidationReport validate_group(const FiniteGroup& g);

// Componentwise product; element index is i_g * h.order + i_h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

} // namespace bq
