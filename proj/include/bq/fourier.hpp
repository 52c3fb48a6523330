#pragma once

// Fourier transform between L^2(G) and the dual side, Schatten and mixed
// B^{p,p} norms, the big trace and the duality pairing on symbol fields.

#include <limits>

#include "bq/dual.hpp"

namespace bq {

// A function on the group is just a complex vector of length |G|; the dual
// side is one complex d_xi x d_xi block per irrep.
struct DualField {
    std::vector<Matrix> blocks;
};

// Operator fields over the product of the dual and the group. The same
// block data serves both index orders; the orientation flag records which
// convention the field currently lives in.
enum class Orientation { DualFirst, GroupFirst };

struct SymbolField {
    Orientation orientation = Orientation::DualFirst;
    std::vector<std::vector<Matrix>> blocks;  // blocks[xi][x]

    Matrix& at(int xi, int x) { return blocks[xi][x]; }
    const Matrix& at(int xi, int x) const { return blocks[xi][x]; }

    // Transposition of the two indices: same data, flipped convention.
    SymbolField reindexed() const {
        SymbolField f = *this;
        f.orientation = orientation == Orientation::DualFirst
                            ? Orientation::GroupFirst
                            : Orientation::DualFirst;
        return f;
    }
};

constexpr double kInf = std::numeric_limits<double>::infinity();

SymbolField symbol_zero(const UnitaryDual& dual, int order,
                        Orientation o = Orientation::DualFirst);
// The field that is the identity operator at every point.
SymbolField symbol_one(const UnitaryDual& dual, int order,
                       Orientation o = Orientation::DualFirst);
// Pointwise adjoint F*(X) = F(X)^*.
SymbolField symbol_star(const SymbolField& f);
// Pointwise block product (F H)(X) = F(X) H(X).
SymbolField symbol_product(const SymbolField& f, const SymbolField& h);
SymbolField symbol_axpy(Complex alpha, const SymbolField& f, const SymbolField& h);
double symbol_max_abs_diff(const SymbolField& f, const SymbolField& h);

// (F u)(xi) = sum_x u(x) xi(x)^*
DualField fourier(const FiniteGroup& g, const UnitaryDual& dual, const Vector& u);
// u(x) = sum_xi w_xi Tr[phi(xi) xi(x)]
Vector inverse_fourier(const FiniteGroup& g, const UnitaryDual& dual,
                       const DualField& phi);

// l^p norm of the singular values; p = kInf gives the operator norm.
// Singular values come from the eigenvalues of M^* M with tiny negative
// values clamped to zero.
double schatten_norm(const Matrix& m, double p);

// Mixed norm (sum_x sum_xi w_xi ||F(xi,x)||_p^p)^{1/p}; requires dual-first.
double bpp_norm(const UnitaryDual& dual, const SymbolField& f, double p);

// <F,H> = sum_X mu(X) Tr[F(X) H(X)^*], linear in F, conjugate-linear in H.
Complex pairing(const UnitaryDual& dual, const SymbolField& f, const SymbolField& h);

// Tr(F) = sum_X mu(X) Tr[F(X)].
Complex big_trace(const UnitaryDual& dual, const SymbolField& f);

} // namespace bq
