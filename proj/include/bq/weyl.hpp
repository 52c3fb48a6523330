#pragma once

// Weyl operators on L^2(G) tensor H_xi, the operator-valued module inner
// product and the Fourier-Wigner / Wigner transforms.

#include "bq/fourier.hpp"

namespace bq {

// A map G -> B(H_xi), one d_xi x d_xi matrix per group element.
struct MatrixValuedFunction {
    int xi = 0;
    std::vector<Matrix> values;  // indexed by group element
};

// Unitary matrix of W(xi,x) on C^{|G| d}, basis delta_q (x) e_i ordered
// q-major: [W Psi](q) = xi(q) Psi(q x^{-1}).
Matrix weyl_operator(const FiniteGroup& g, const UnitaryDual& dual, int xi, int x);

// Matrix of the adjoint from its closed form [W* Psi](q) = xi(qx)^* Psi(qx);
// used as an independent cross-check against weyl_operator(...).adjoint().
Matrix weyl_operator_adjoint(const FiniteGroup& g, const UnitaryDual& dual, int xi,
                             int x);

// <a|b> = sum_x a(x) b(x)^*, a B(H_xi)-valued inner product.
Matrix module_inner(const MatrixValuedFunction& a, const MatrixValuedFunction& b);

// W_{u,v}(xi,x) = sum_z u(z) conj(v(z x^{-1})) xi(z)^*  (dual-first field).
SymbolField fourier_wigner(const FiniteGroup& g, const UnitaryDual& dual,
                           const Vector& u, const Vector& v);

// V_{u,v}(x,xi) = conj(u(x)) sum_y v(x y^{-1}) xi(y)^*  (group-first field).
SymbolField wigner(const FiniteGroup& g, const UnitaryDual& dual, const Vector& u,
                   const Vector& v);

} // namespace bq
