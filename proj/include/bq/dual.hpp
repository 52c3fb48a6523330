#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bq/group.hpp"
#include "bq/report.hpp"

namespace bq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// An irreducible unitary representation stored as one unitary matrix per
// group element.
struct Irrep {
    int dim = 1;
    std::vector<Matrix> matrices;  // indexed by group element
    std::string label;

    Complex character(int x) const { return matrices[x].trace(); }
};

// A complete list of pairwise-inequivalent irreps with Plancherel weights
// d_xi / |G| (the normalization making the Fourier transform unitary for the
// counting Haar measure).
struct UnitaryDual {
    std::vector<Irrep> irreps;
    std::vector<double> weights;
    int group_order = 0;

    int size() const { return static_cast<int>(irreps.size()); }
    int dim(int xi) const { return irreps[xi].dim; }
    double weight(int xi) const { return weights[xi]; }
};

// Builds the dual from the catalog attached to a catalog-built group, or
// generically for an abelian group. Throws for non-catalog non-abelian
// groups (use extract_irreps_numeric for those).
UnitaryDual build_dual(const FiniteGroup& g);

// Homomorphism / unitarity / irreducibility / Schur orthogonality /
// completeness / inequivalence checks with max residuals.
ValidationReport validate_dual(const FiniteGroup& g, const UnitaryDual& dual);

// Independent numeric oracle: decomposes the right regular representation by
// averaging a seeded random Hermitian matrix over the group, splitting
// invariant subspaces until the character-norm criterion reaches 1, and
// deduplicating blocks by character. Retries with fresh seeds on a
// degenerate draw, throws after max_retries.
UnitaryDual extract_irreps_numeric(const FiniteGroup& g, std::uint64_t seed,
                                   int max_retries = 8);

// Sorted multiset comparison of characters between two duals; returns the
// max entrywise difference after greedy matching (large when unmatched).
double character_multiset_distance(const FiniteGroup& g, const UnitaryDual& a,
                                   const UnitaryDual& b);

} // namespace bq
