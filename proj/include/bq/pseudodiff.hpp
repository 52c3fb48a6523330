#pragma once

// The pseudo-differential quantization Op, the change of variables gamma and
// the partial Fourier transform, plus the Berezin-to-symbol conversion and
// its abelian convolution form.

#include "bq/berezin.hpp"

namespace bq {

// g(x,y) on G x G as a |G| x |G| table, row = first variable.
using TwoVariableFunction = Matrix;

// gamma(g)(x,y) = g(x, x y^{-1}); a permutation of the entries.
TwoVariableFunction gamma_change(const FiniteGroup& g, const TwoVariableFunction& t);
// gamma^{-1}(k)(x,w) = k(x, w^{-1} x).
TwoVariableFunction gamma_inverse(const FiniteGroup& g, const TwoVariableFunction& t);

// Per-row Fourier transform in the second variable (group-first field).
SymbolField partial_fourier(const FiniteGroup& g, const UnitaryDual& dual,
                            const TwoVariableFunction& t);
TwoVariableFunction partial_fourier_inverse(const FiniteGroup& g,
                                            const UnitaryDual& dual,
                                            const SymbolField& a);

// Op(a) via its kernel Ker = [(id (x) F) o gamma]^{-1}(a), acting as
// (Op(a)u)(y) = sum_x Ker(x,y) u(x). Three independent evaluation routes.
Matrix op_quantize(const FiniteGroup& g, const UnitaryDual& dual,
                   const SymbolField& a);
// [Op(a)u](x) = sum_y sum_xi w_xi Tr[xi(x^{-1}y) a(y,xi)] u(y).
Matrix op_quantize_direct(const FiniteGroup& g, const UnitaryDual& dual,
                          const SymbolField& a);
// <Op(a)u,v> = <a, V_{u,v}> evaluated on the delta basis.
Matrix op_quantize_weak(const FiniteGroup& g, const UnitaryDual& dual,
                        const SymbolField& a);

// Symbol with Op(a) = Ber_omega(F): a = [(id (x) F) o gamma] K^F_omega.
SymbolField symbol_from_berezin(const FiniteGroup& g, const UnitaryDual& dual,
                                const Vector& omega, const SymbolField& f);
// Same symbol from the literal iterated sum instead of the composed route.
SymbolField symbol_from_berezin_direct(const FiniteGroup& g, const UnitaryDual& dual,
                                       const Vector& omega, const SymbolField& f);

// Pontryagin-dual structure of an abelian catalog dual: table of the index
// of the pointwise character product chi_a chi_b. Throws when the group is
// non-abelian or the product fails to close within 1e-9.
std::vector<std::vector<int>> character_product_table(const FiniteGroup& g,
                                                      const UnitaryDual& dual);

// Abelian-only convolution-type form: a(q,xi) = sum w_eta F(eta,x) V_{omega,omega}(q x^{-1}, eta xi).
SymbolField abelian_convolution_symbol(const FiniteGroup& g, const UnitaryDual& dual,
                                       const Vector& omega, const SymbolField& f);

} // namespace bq
