#pragma once

// Coherent states, the positive phase-space projections and the Berezin
// operator in its weak-form and kernel-form evaluations.

#include "bq/weyl.hpp"

namespace bq {

// Omega(X)(z) = omega(z x^{-1}) xi(z), the window omega moved to the
// phase-space point X = (xi, x).
MatrixValuedFunction coherent_state(const FiniteGroup& g, const UnitaryDual& dual,
                                    const Vector& omega, int xi, int x);

// [Pr_omega(X) Phi](q) = Omega(X)(q) sum_y Omega(X)(y)^* Phi(y) as a matrix
// on C^{|G| d}, q-major basis. Self-adjoint, PSD, Pr^2 = ||omega||^2 Pr.
Matrix projector(const FiniteGroup& g, const UnitaryDual& dual, const Vector& omega,
                 int xi, int x);

// Dense |G|x|G| matrix of Ber_omega(F) from the weak form evaluated on the
// delta basis: B[q',q] = sum_X mu(X) Tr[F(X) W_{dq',w}(X)^* W_{dq,w}(X)].
Matrix berezin_weak(const FiniteGroup& g, const UnitaryDual& dual,
                    const Vector& omega, const SymbolField& f);

struct BerezinKernelResult {
    Matrix kernel;  // kernel(z,y) = K(z,y)
    Matrix op;      // equals kernel: (Ber u)(z) = sum_y K(z,y) u(y)
};

// Kernel form K(z,y) = sum_{x,eta} w_eta omega(z x^{-1}) conj(omega(y x^{-1}))
//                      Tr[F(eta,x) eta(y z^{-1})^*].
BerezinKernelResult berezin_kernel(const FiniteGroup& g, const UnitaryDual& dual,
                                   const Vector& omega, const SymbolField& f);

} // namespace bq
