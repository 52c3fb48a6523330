#include "bq/pseudodiff.hpp"

#include <stdexcept>

namespace bq {

namespace {

void require_square(const FiniteGroup& g, const TwoVariableFunction& t) {
    if (t.rows() != g.order || t.cols() != g.order)
        throw std::invalid_argument("two-variable table shape mismatch");
}

void require_group_first(const SymbolField& a) {
    if (a.orientation != Orientation::GroupFirst)
        throw std::invalid_argument("group-first orientation required");
}

// t(x, s) = sum_eta w_eta Tr[F(eta,x) eta(s)^*]
Matrix trace_table(const FiniteGroup& g, const UnitaryDual& dual,
                   const SymbolField& f) {
    const int n = g.order;
    Matrix t(n, n);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < n; ++s) {
            Complex acc = 0;
            for (int eta = 0; eta < dual.size(); ++eta)
                acc += dual.weight(eta) *
                       (f.at(eta, x) * dual.irreps[eta].matrices[s].adjoint()).trace();
            t(x, s) = acc;
        }
    return t;
}

} // namespace

TwoVariableFunction gamma_change(const FiniteGroup& g, const TwoVariableFunction& t) {
    require_square(g, t);
    TwoVariableFunction out(g.order, g.order);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            out(x, y) = t(x, g.mul(x, g.inv(y)));
    return out;
}

TwoVariableFunction gamma_inverse(const FiniteGroup& g, const TwoVariableFunction& t) {
    require_square(g, t);
    TwoVariableFunction out(g.order, g.order);
    for (int x = 0; x < g.order; ++x)
        for (int w = 0; w < g.order; ++w)
            out(x, w) = t(x, g.mul(g.inv(w), x));
    return out;
}

SymbolField partial_fourier(const FiniteGroup& g, const UnitaryDual& dual,
                            const TwoVariableFunction& t) {
    require_square(g, t);
    SymbolField a = symbol_zero(dual, g.order, Orientation::GroupFirst);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& rep = dual.irreps[xi];
        for (int x = 0; x < g.order; ++x) {
            Matrix m = Matrix::Zero(rep.dim, rep.dim);
            for (int y = 0; y < g.order; ++y) m += t(x, y) * rep.matrices[y].adjoint();
            a.blocks[xi][x] = std::move(m);
        }
    }
    return a;
}

TwoVariableFunction partial_fourier_inverse(const FiniteGroup& g,
                                            const UnitaryDual& dual,
                                            const SymbolField& a) {
    require_group_first(a);
    TwoVariableFunction t = TwoVariableFunction::Zero(g.order, g.order);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& rep = dual.irreps[xi];
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y)
                t(x, y) += dual.weight(xi) * (a.at(xi, x) * rep.matrices[y]).trace();
    }
    return t;
}

Matrix op_quantize(const FiniteGroup& g, const UnitaryDual& dual,
                   const SymbolField& a) {
    require_group_first(a);
    TwoVariableFunction ker = gamma_inverse(g, partial_fourier_inverse(g, dual, a));
    // (Op(a)u)(y) = sum_x Ker(x,y) u(x)
    return ker.transpose();
}

Matrix op_quantize_direct(const FiniteGroup& g, const UnitaryDual& dual,
                          const SymbolField& a) {
    require_group_first(a);
    const int n = g.order;
    Matrix op(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = g.mul(g.inv(x), y);
            Complex acc = 0;
            for (int xi = 0; xi < dual.size(); ++xi)
                acc += dual.weight(xi) *
                       (dual.irreps[xi].matrices[xy] * a.at(xi, y)).trace();
            op(x, y) = acc;
        }
    return op;
}

Matrix op_quantize_weak(const FiniteGroup& g, const UnitaryDual& dual,
                        const SymbolField& a) {
    require_group_first(a);
    const int n = g.order;
    Matrix op(n, n);
    for (int q = 0; q < n; ++q) {
        Vector dq = Vector::Zero(n);
        dq(q) = 1.0;
        for (int qp = 0; qp < n; ++qp) {
            Vector dqp = Vector::Zero(n);
            dqp(qp) = 1.0;
            SymbolField v = wigner(g, dual, dq, dqp);
            Complex acc = 0;
            for (int xi = 0; xi < dual.size(); ++xi)
                for (int x = 0; x < n; ++x)
                    acc += dual.weight(xi) * (a.at(xi, x) * v.at(xi, x).adjoint()).trace();
            op(qp, q) = acc;  // <Op(a) delta_q, delta_qp>
        }
    }
    return op;
}

SymbolField symbol_from_berezin(const FiniteGroup& g, const UnitaryDual& dual,
                                const Vector& omega, const SymbolField& f) {
    BerezinKernelResult kr = berezin_kernel(g, dual, omega, f);
    // Op's kernel pairs its first variable with the input slot, K its second:
    // transpose before converting so that Op(a) = Ber holds.
    return partial_fourier(g, dual,
                           gamma_change(g, TwoVariableFunction(kr.kernel.transpose())));
}

SymbolField symbol_from_berezin_direct(const FiniteGroup& g, const UnitaryDual& dual,
                                       const Vector& omega, const SymbolField& f) {
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("symbol_from_berezin: dual-first symbol required");
    const int n = g.order;
    const Matrix t = trace_table(g, dual, f);
    // inner(q,s) = K(q s^{-1}, q)
    //            = sum_x omega(q s^{-1} x^{-1}) conj(omega(q x^{-1})) t(x, q s q^{-1})
    TwoVariableFunction inner(n, n);
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < n; ++s) {
            const int qs = g.mul(q, g.inv(s));
            const int conj_arg = g.mul(g.mul(q, s), g.inv(q));
            Complex acc = 0;
            for (int x = 0; x < n; ++x) {
                const int xinv = g.inv(x);
                acc += omega(g.mul(qs, xinv)) * std::conj(omega(g.mul(q, xinv))) *
                       t(x, conj_arg);
            }
            inner(q, s) = acc;
        }
    return partial_fourier(g, dual, inner);
}

std::vector<std::vector<int>> character_product_table(const FiniteGroup& g,
                                                      const UnitaryDual& dual) {
    for (int xi = 0; xi < dual.size(); ++xi)
        if (dual.dim(xi) != 1)
            throw std::invalid_argument("character_product_table: abelian dual required");
    const int n = g.order, k = dual.size();
    std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            for (int c = 0; c < k; ++c) {
                double worst = 0;
                for (int x = 0; x < n; ++x)
                    worst = std::max(worst,
                                     std::abs(dual.irreps[a].character(x) *
                                                  dual.irreps[b].character(x) -
                                              dual.irreps[c].character(x)));
                if (worst < 1e-9) {
                    table[a][b] = c;
                    break;
                }
            }
            if (table[a][b] < 0)
                throw std::runtime_error("character products do not close");
        }
    return table;
}

SymbolField abelian_convolution_symbol(const FiniteGroup& g, const UnitaryDual& dual,
                                       const Vector& omega, const SymbolField& f) {
    if (!g.is_abelian())
        throw std::invalid_argument("abelian_convolution_symbol: group must be abelian");
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("abelian_convolution_symbol: dual-first symbol required");
    const int n = g.order, k = dual.size();
    const auto prod = character_product_table(g, dual);
    const SymbolField v = wigner(g, dual, omega, omega);  // group-first

    // a(q,xi) = sum_{x,eta} w_eta F(eta,x) V_{omega,omega}(q x^{-1}, eta xi)
    SymbolField a = symbol_zero(dual, n, Orientation::GroupFirst);
    for (int xi = 0; xi < k; ++xi)
        for (int q = 0; q < n; ++q) {
            Complex acc = 0;
            for (int eta = 0; eta < k; ++eta) {
                const int shift = prod[eta][xi];
                for (int x = 0; x < n; ++x)
                    acc += dual.weight(eta) * f.at(eta, x)(0, 0) *
                           v.at(shift, g.mul(q, g.inv(x)))(0, 0);
            }
            a.blocks[xi][q](0, 0) = acc;
        }
    return a;
}

} // namespace bq
