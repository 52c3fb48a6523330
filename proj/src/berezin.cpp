#include "bq/berezin.hpp"

#include <stdexcept>

namespace bq {

MatrixValuedFunction coherent_state(const FiniteGroup& g, const UnitaryDual& dual,
                                    const Vector& omega, int xi, int x) {
    if (xi < 0 || xi >= dual.size() || x < 0 || x >= g.order)
        throw std::out_of_range("coherent_state: point out of range");
    if (omega.size() != g.order)
        throw std::invalid_argument("coherent_state: window length mismatch");
    const auto& rep = dual.irreps[xi];
    MatrixValuedFunction f;
    f.xi = xi;
    f.values.reserve(g.order);
    const int xinv = g.inv(x);
    for (int z = 0; z < g.order; ++z)
        f.values.push_back(omega(g.mul(z, xinv)) * rep.matrices[z]);
    return f;
}

Matrix projector(const FiniteGroup& g, const UnitaryDual& dual, const Vector& omega,
                 int xi, int x) {
    MatrixValuedFunction cs = coherent_state(g, dual, omega, xi, x);
    const int n = g.order, d = dual.dim(xi);
    Matrix pr(n * d, n * d);
    for (int q = 0; q < n; ++q)
        for (int y = 0; y < n; ++y)
            pr.block(q * d, y * d, d, d) = cs.values[q] * cs.values[y].adjoint();
    return pr;
}

Matrix berezin_weak(const FiniteGroup& g, const UnitaryDual& dual,
                    const Vector& omega, const SymbolField& f) {
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("berezin_weak: dual-first symbol required");
    const int n = g.order;
    std::vector<SymbolField> delta_fw;
    delta_fw.reserve(n);
    for (int q = 0; q < n; ++q) {
        Vector dq = Vector::Zero(n);
        dq(q) = 1.0;
        delta_fw.push_back(fourier_wigner(g, dual, dq, omega));
    }
    // B[q',q] = sum_X w Tr[F(X) W_{q'}(X)^* W_q(X)]. Batched per X: with
    // M[q,(c,b)] = W_q(X)_{cb} and N[q,(c,b)] = (W_q(X) F(X))_{cb} the trace
    // is (N M^H)[q,q'], so B = (sum_X w N M^H)^T.
    Matrix acc = Matrix::Zero(n, n);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const int d = dual.dim(xi);
        const double w = dual.weight(xi);
        Matrix m(n, d * d), nm(n, d * d);
        for (int x = 0; x < n; ++x) {
            for (int q = 0; q < n; ++q) {
                const Matrix& wq = delta_fw[q].at(xi, x);
                const Matrix wf = wq * f.at(xi, x);
                for (int c = 0; c < d; ++c)
                    for (int b = 0; b < d; ++b) {
                        m(q, c * d + b) = wq(c, b);
                        nm(q, c * d + b) = wf(c, b);
                    }
            }
            acc.noalias() += w * (nm * m.adjoint());
        }
    }
    return acc.transpose();  // column q is Ber applied to delta_q
}

BerezinKernelResult berezin_kernel(const FiniteGroup& g, const UnitaryDual& dual,
                                   const Vector& omega, const SymbolField& f) {
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("berezin_kernel: dual-first symbol required");
    const int n = g.order;
    // t(x, s) = sum_eta w_eta Tr[F(eta,x) eta(s)^*]
    Matrix t = Matrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < n; ++s) {
            Complex acc = 0;
            for (int eta = 0; eta < dual.size(); ++eta)
                acc += dual.weight(eta) *
                       (f.at(eta, x) * dual.irreps[eta].matrices[s].adjoint()).trace();
            t(x, s) = acc;
        }
    BerezinKernelResult res;
    res.kernel.resize(n, n);
    for (int z = 0; z < n; ++z)
        for (int y = 0; y < n; ++y) {
            const int yzinv = g.mul(y, g.inv(z));
            Complex acc = 0;
            for (int x = 0; x < n; ++x) {
                const int xinv = g.inv(x);
                acc += omega(g.mul(z, xinv)) * std::conj(omega(g.mul(y, xinv))) *
                       t(x, yzinv);
            }
            res.kernel(z, y) = acc;
        }
    // <Ber u, v> = sum_{y,z} u(y) conj(v(z)) K(z,y): row z is the output slot.
    res.op = res.kernel;
    return res;
}

} // namespace bq
