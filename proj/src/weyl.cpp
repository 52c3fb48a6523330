#include "bq/weyl.hpp"

#include <stdexcept>

namespace bq {

namespace {

void check_point(const FiniteGroup& g, const UnitaryDual& dual, int xi, int x) {
    if (xi < 0 || xi >= dual.size() || x < 0 || x >= g.order)
        throw std::out_of_range("phase-space point out of range");
}

} // namespace

Matrix weyl_operator(const FiniteGroup& g, const UnitaryDual& dual, int xi, int x) {
    check_point(g, dual, xi, x);
    const int n = g.order, d = dual.dim(xi);
    const auto& rep = dual.irreps[xi];
    Matrix w = Matrix::Zero(n * d, n * d);
    for (int q = 0; q < n; ++q) {
        const int src = g.mul(q, g.inv(x));  // Psi is read at q x^{-1}
        w.block(q * d, src * d, d, d) = rep.matrices[q];
    }
    return w;
}

Matrix weyl_operator_adjoint(const FiniteGroup& g, const UnitaryDual& dual, int xi,
                             int x) {
    check_point(g, dual, xi, x);
    const int n = g.order, d = dual.dim(xi);
    const auto& rep = dual.irreps[xi];
    Matrix w = Matrix::Zero(n * d, n * d);
    for (int q = 0; q < n; ++q) {
        const int qx = g.mul(q, x);
        w.block(q * d, qx * d, d, d) = rep.matrices[qx].adjoint();
    }
    return w;
}

Matrix module_inner(const MatrixValuedFunction& a, const MatrixValuedFunction& b) {
    if (a.xi != b.xi || a.values.size() != b.values.size())
        throw std::invalid_argument("module_inner: mismatched operands");
    const int d = static_cast<int>(a.values.empty() ? 0 : a.values[0].rows());
    Matrix acc = Matrix::Zero(d, d);
    for (size_t x = 0; x < a.values.size(); ++x)
        acc += a.values[x] * b.values[x].adjoint();
    return acc;
}

SymbolField fourier_wigner(const FiniteGroup& g, const UnitaryDual& dual,
                           const Vector& u, const Vector& v) {
    if (u.size() != g.order || v.size() != g.order)
        throw std::invalid_argument("fourier_wigner: length mismatch");
    SymbolField f = symbol_zero(dual, g.order, Orientation::DualFirst);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& rep = dual.irreps[xi];
        for (int x = 0; x < g.order; ++x) {
            Matrix m = Matrix::Zero(rep.dim, rep.dim);
            const int xinv = g.inv(x);
            for (int z = 0; z < g.order; ++z)
                m += u(z) * std::conj(v(g.mul(z, xinv))) * rep.matrices[z].adjoint();
            f.blocks[xi][x] = std::move(m);
        }
    }
    return f;
}

SymbolField wigner(const FiniteGroup& g, const UnitaryDual& dual, const Vector& u,
                   const Vector& v) {
    if (u.size() != g.order || v.size() != g.order)
        throw std::invalid_argument("wigner: length mismatch");
    SymbolField f = symbol_zero(dual, g.order, Orientation::GroupFirst);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& rep = dual.irreps[xi];
        for (int x = 0; x < g.order; ++x) {
            Matrix m = Matrix::Zero(rep.dim, rep.dim);
            for (int y = 0; y < g.order; ++y)
                m += v(g.mul(x, g.inv(y))) * rep.matrices[y].adjoint();
            f.blocks[xi][x] = std::conj(u(x)) * m;
        }
    }
    return f;
}

} // namespace bq
