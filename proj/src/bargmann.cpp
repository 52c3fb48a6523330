#include "bq/bargmann.hpp"

#include <stdexcept>

namespace bq {

namespace {

void require_dual_first(const SymbolField& f) {
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("dual-first orientation required");
}

std::vector<int> flat_offsets(const UnitaryDual& dual, int order) {
    std::vector<int> off(dual.size() + 1, 0);
    for (int xi = 0; xi < dual.size(); ++xi)
        off[xi + 1] = off[xi] + order * dual.dim(xi) * dual.dim(xi);
    return off;
}

Vector unit_window(const Vector& omega, bool normalize) {
    const double nrm = omega.norm();
    if (normalize) {
        if (nrm < 1e-14) throw std::invalid_argument("zero window");
        return omega / nrm;
    }
    if (std::abs(nrm - 1.0) > 1e-10)
        throw std::invalid_argument("window must be normalized (or pass normalize)");
    return omega;
}

std::vector<std::vector<MatrixValuedFunction>> all_coherent_states(
    const FiniteGroup& g, const UnitaryDual& dual, const Vector& omega) {
    std::vector<std::vector<MatrixValuedFunction>> cs(dual.size());
    for (int xi = 0; xi < dual.size(); ++xi) {
        cs[xi].reserve(g.order);
        for (int x = 0; x < g.order; ++x)
            cs[xi].push_back(coherent_state(g, dual, omega, xi, x));
    }
    return cs;
}

} // namespace

Vector flatten(const UnitaryDual& dual, const SymbolField& f) {
    require_dual_first(f);
    const int order = static_cast<int>(f.blocks.empty() ? 0 : f.blocks[0].size());
    auto off = flat_offsets(dual, order);
    Vector v(off.back());
    for (int xi = 0; xi < dual.size(); ++xi) {
        const int d = dual.dim(xi);
        const double s = std::sqrt(dual.weight(xi));
        for (int x = 0; x < order; ++x)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    v(off[xi] + x * d * d + i * d + j) = s * f.at(xi, x)(i, j);
    }
    return v;
}

SymbolField unflatten(const FiniteGroup& g, const UnitaryDual& dual, const Vector& v) {
    auto off = flat_offsets(dual, g.order);
    if (v.size() != off.back())
        throw std::invalid_argument("unflatten: wrong vector length");
    SymbolField f = symbol_zero(dual, g.order, Orientation::DualFirst);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const int d = dual.dim(xi);
        const double s = std::sqrt(dual.weight(xi));
        for (int x = 0; x < g.order; ++x)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    f.at(xi, x)(i, j) = v(off[xi] + x * d * d + i * d + j) / s;
    }
    return f;
}

SymbolField bargmann(const FiniteGroup& g, const UnitaryDual& dual,
                     const Vector& omega, const Vector& u) {
    return fourier_wigner(g, dual, u, omega);
}

Vector bargmann_adjoint(const FiniteGroup& g, const UnitaryDual& dual,
                        const Vector& omega, const SymbolField& f) {
    require_dual_first(f);
    Vector out = Vector::Zero(g.order);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& rep = dual.irreps[xi];
        for (int x = 0; x < g.order; ++x) {
            const int xinv = g.inv(x);
            // Tr[F(X) Omega(X)(z)] with Omega(X)(z) = omega(z x^{-1}) xi(z)
            for (int z = 0; z < g.order; ++z)
                out(z) += dual.weight(xi) * omega(g.mul(z, xinv)) *
                          (f.at(xi, x) * rep.matrices[z]).trace();
        }
    }
    return out;
}

Matrix reproducing_kernel(const FiniteGroup& g, const UnitaryDual& dual,
                          const Vector& omega, int eta, int y, int xi, int x) {
    MatrixValuedFunction oy = coherent_state(g, dual, omega, eta, y);
    MatrixValuedFunction ox = coherent_state(g, dual, omega, xi, x);
    const int de = dual.dim(eta), dx = dual.dim(xi);
    Matrix p = Matrix::Zero(de * dx, de * dx);
    for (int z = 0; z < g.order; ++z) {
        const Matrix& a = oy.values[z];
        const Matrix adj = ox.values[z].adjoint();
        for (int r1 = 0; r1 < de; ++r1)
            for (int c1 = 0; c1 < de; ++c1)
                p.block(r1 * dx, c1 * dx, dx, dx) += a(r1, c1) * adj;
    }
    return p;
}

SymbolField bargmann_projection(const FiniteGroup& g, const UnitaryDual& dual,
                                const Vector& omega, const SymbolField& f) {
    require_dual_first(f);
    auto cs = all_coherent_states(g, dual, omega);
    SymbolField out = symbol_zero(dual, g.order, Orientation::DualFirst);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const int dx = dual.dim(xi);
        for (int x = 0; x < g.order; ++x) {
            Matrix acc = Matrix::Zero(dx, dx);
            for (int eta = 0; eta < dual.size(); ++eta) {
                const int de = dual.dim(eta);
                for (int y = 0; y < g.order; ++y) {
                    // TR_eta{ p(Y,X) [F(Y) (x) 1] }_{ij} =
                    //   sum_{a,b} p[(a,i),(b,j)] F(Y)_{ba},
                    // with p[(a,i),(b,j)] = sum_z OmY(z)_{ab} conj(OmX(z)_{ji}).
                    const Matrix& fy = f.at(eta, y);
                    Matrix contrib = Matrix::Zero(dx, dx);
                    for (int z = 0; z < g.order; ++z) {
                        const Matrix& omy = cs[eta][y].values[z];
                        const Matrix& omx = cs[xi][x].values[z];
                        Complex scalar = 0;
                        for (int a = 0; a < de; ++a)
                            for (int b = 0; b < de; ++b) scalar += omy(a, b) * fy(b, a);
                        contrib += scalar * omx.adjoint();
                    }
                    acc += dual.weight(eta) * contrib;
                }
            }
            out.at(xi, x) = acc;
        }
    }
    return out;
}

SymbolField bargmann_projection_composed(const FiniteGroup& g,
                                         const UnitaryDual& dual,
                                         const Vector& omega, const SymbolField& f) {
    return bargmann(g, dual, omega, bargmann_adjoint(g, dual, omega, f));
}

SymbolField diag_right(const SymbolField& f, const SymbolField& phi) {
    return symbol_product(phi, f);
}

Matrix bargmann_matrix(const FiniteGroup& g, const UnitaryDual& dual,
                       const Vector& omega) {
    const int n = g.order;
    Matrix w(n * n, n);
    for (int q = 0; q < n; ++q) {
        Vector dq = Vector::Zero(n);
        dq(q) = 1.0;
        w.col(q) = flatten(dual, bargmann(g, dual, omega, dq));
    }
    return w;
}

Matrix projection_matrix(const FiniteGroup& g, const UnitaryDual& dual,
                         const Vector& omega) {
    const int n = g.order;
    auto off = flat_offsets(dual, n);
    auto cs = all_coherent_states(g, dual, omega);
    Matrix p = Matrix::Zero(n * n, n * n);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const int dx = dual.dim(xi);
        for (int eta = 0; eta < dual.size(); ++eta) {
            const int de = dual.dim(eta);
            const double scale = std::sqrt(dual.weight(xi) * dual.weight(eta));
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    // rows (X,i,j), cols (Y,b,a):
                    //   P = scale * sum_z OmY(z)_{ab} conj(OmX(z)_{ji})
                    for (int i = 0; i < dx; ++i)
                        for (int j = 0; j < dx; ++j) {
                            const int row = off[xi] + x * dx * dx + i * dx + j;
                            for (int b = 0; b < de; ++b)
                                for (int a = 0; a < de; ++a) {
                                    Complex acc = 0;
                                    for (int z = 0; z < n; ++z)
                                        acc += cs[eta][y].values[z](a, b) *
                                               std::conj(cs[xi][x].values[z](j, i));
                                    p(row, off[eta] + y * de * de + b * de + a) =
                                        scale * acc;
                                }
                        }
                }
        }
    }
    return p;
}

Matrix diag_right_matrix(const FiniteGroup& g, const UnitaryDual& dual,
                         const SymbolField& f) {
    require_dual_first(f);
    const int n = g.order;
    auto off = flat_offsets(dual, n);
    Matrix d = Matrix::Zero(n * n, n * n);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const int dx = dual.dim(xi);
        for (int x = 0; x < n; ++x) {
            const Matrix& fx = f.at(xi, x);
            // row-major vec: vec(Phi F) = (I (x) F^T) vec(Phi)
            for (int i = 0; i < dx; ++i)
                for (int j = 0; j < dx; ++j)
                    for (int k = 0; k < dx; ++k)
                        d(off[xi] + x * dx * dx + i * dx + j,
                          off[xi] + x * dx * dx + i * dx + k) = fx(k, j);
        }
    }
    return d;
}

Matrix toeplitz(const FiniteGroup& g, const UnitaryDual& dual, const Vector& omega,
                const SymbolField& f, bool normalize) {
    const Vector w = unit_window(omega, normalize);
    Matrix p = projection_matrix(g, dual, w);
    Matrix d = diag_right_matrix(g, dual, f);
    return p * (d * p);
}

Matrix toeplitz_conjugation(const FiniteGroup& g, const UnitaryDual& dual,
                            const Vector& omega, const SymbolField& f,
                            bool normalize) {
    const Vector w = unit_window(omega, normalize);
    Matrix wm = bargmann_matrix(g, dual, w);
    Matrix ber = berezin_weak(g, dual, w, f);
    return wm * (ber * wm.adjoint());
}

} // namespace bq
