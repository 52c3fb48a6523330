#pragma once

// The generalized Bargmann transform, the reproducing projection with its
// operator-valued kernel and partial trace, and the Toeplitz compression of
// Berezin operators on the flattened phase space.

#include "bq/berezin.hpp"

namespace bq {

// Flattening of a dual-first field into C^{|G|^2}: irrep outer, group
// element middle, matrix entries inner (row-major), with sqrt(weight)
// absorbed so the duality pairing becomes the standard inner product.
Vector flatten(const UnitaryDual& dual, const SymbolField& f);
SymbolField unflatten(const FiniteGroup& g, const UnitaryDual& dual, const Vector& v);

// Bargmann transform of u: the field X -> W_{u,omega}(X).
SymbolField bargmann(const FiniteGroup& g, const UnitaryDual& dual,
                     const Vector& omega, const Vector& u);

// Adjoint: [W^dag(F)](z) = sum_X mu(X) Tr[F(X) Omega(X)(z)].
Vector bargmann_adjoint(const FiniteGroup& g, const UnitaryDual& dual,
                        const Vector& omega, const SymbolField& f);

// p_omega(Y,X) = sum_z Omega(Y)(z) (x) Omega(X)(z)^* on H_eta (x) H_xi,
// eta factor first; a (d_eta d_xi) x (d_eta d_xi) matrix.
Matrix reproducing_kernel(const FiniteGroup& g, const UnitaryDual& dual,
                          const Vector& omega, int eta, int y, int xi, int x);

// Kernel route: [P F](X) = sum_Y mu(Y) TR_eta{ p(Y,X) [F(Y) (x) 1_xi] }.
SymbolField bargmann_projection(const FiniteGroup& g, const UnitaryDual& dual,
                                const Vector& omega, const SymbolField& f);
// Composition route W(W^dag F), for cross-validation.
SymbolField bargmann_projection_composed(const FiniteGroup& g,
                                         const UnitaryDual& dual,
                                         const Vector& omega, const SymbolField& f);

// Pointwise right multiplication (Diag_R(F) Phi)(X) = Phi(X) F(X).
SymbolField diag_right(const SymbolField& f, const SymbolField& phi);

// Flattened-space matrices. bargmann_matrix columns are the transforms of
// the delta basis; projection_matrix is built from the reproducing kernel
// (independent of bargmann_matrix); diag_right_matrix is block diagonal.
Matrix bargmann_matrix(const FiniteGroup& g, const UnitaryDual& dual,
                       const Vector& omega);
Matrix projection_matrix(const FiniteGroup& g, const UnitaryDual& dual,
                         const Vector& omega);
Matrix diag_right_matrix(const FiniteGroup& g, const UnitaryDual& dual,
                         const SymbolField& f);

// Toeplitz compression P Diag_R(F) P on the flattened space. Requires a
// unit window; pass normalize = true to rescale a copy instead of throwing.
Matrix toeplitz(const FiniteGroup& g, const UnitaryDual& dual, const Vector& omega,
                const SymbolField& f, bool normalize = false);
// Conjugation route W Ber_omega(F) W^dag, for cross-validation.
Matrix toeplitz_conjugation(const FiniteGroup& g, const UnitaryDual& dual,
                            const Vector& omega, const SymbolField& f,
                            bool normalize = false);

} // namespace bq
