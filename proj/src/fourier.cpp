#include "bq/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace bq {

namespace {

void require_same_shape(const SymbolField& f, const SymbolField& h) {
    if (f.blocks.size() != h.blocks.size())
        throw std::invalid_argument("symbol fields over different duals");
    for (size_t xi = 0; xi < f.blocks.size(); ++xi) {
        if (f.blocks[xi].size() != h.blocks[xi].size())
            throw std::invalid_argument("symbol fields over different groups");
        if (!f.blocks[xi].empty() &&
            f.blocks[xi][0].rows() != h.blocks[xi][0].rows())
            throw std::invalid_argument("symbol field block shape mismatch");
    }
}

} // namespace

SymbolField symbol_zero(const UnitaryDual& dual, int order, Orientation o) {
    SymbolField f;
    f.orientation = o;
    f.blocks.resize(dual.size());
    for (int xi = 0; xi < dual.size(); ++xi)
        f.blocks[xi].assign(order, Matrix::Zero(dual.dim(xi), dual.dim(xi)));
    return f;
}

SymbolField symbol_one(const UnitaryDual& dual, int order, Orientation o) {
    SymbolField f = symbol_zero(dual, order, o);
    for (int xi = 0; xi < dual.size(); ++xi)
        for (int x = 0; x < order; ++x)
            f.blocks[xi][x] = Matrix::Identity(dual.dim(xi), dual.dim(xi));
    return f;
}

SymbolField symbol_star(const SymbolField& f) {
    SymbolField s = f;
    for (auto& row : s.blocks)
        for (auto& m : row) m = m.adjoint().eval();
    return s;
}

SymbolField symbol_product(const SymbolField& f, const SymbolField& h) {
    require_same_shape(f, h);
    SymbolField p = f;
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (size_t x = 0; x < f.blocks[xi].size(); ++x)
            p.blocks[xi][x] = f.blocks[xi][x] * h.blocks[xi][x];
    return p;
}

SymbolField symbol_axpy(Complex alpha, const SymbolField& f, const SymbolField& h) {
    require_same_shape(f, h);
    SymbolField r = h;
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (size_t x = 0; x < f.blocks[xi].size(); ++x)
            r.blocks[xi][x] += alpha * f.blocks[xi][x];
    return r;
}

double symbol_max_abs_diff(const SymbolField& f, const SymbolField& h) {
    require_same_shape(f, h);
    double worst = 0;
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (size_t x = 0; x < f.blocks[xi].size(); ++x)
            worst = std::max(worst,
                             (f.blocks[xi][x] - h.blocks[xi][x]).cwiseAbs().maxCoeff());
    return worst;
}

DualField fourier(const FiniteGroup& g, const UnitaryDual& dual, const Vector& u) {
    if (u.size() != g.order) throw std::invalid_argument("fourier: length mismatch");
    DualField phi;
    phi.blocks.reserve(dual.size());
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& ir = dual.irreps[xi];
        Matrix m = Matrix::Zero(ir.dim, ir.dim);
        for (int x = 0; x < g.order; ++x) m += u(x) * ir.matrices[x].adjoint();
        phi.blocks.push_back(std::move(m));
    }
    return phi;
}

Vector inverse_fourier(const FiniteGroup& g, const UnitaryDual& dual,
                       const DualField& phi) {
    if (static_cast<int>(phi.blocks.size()) != dual.size())
        throw std::invalid_argument("inverse_fourier: block count mismatch");
    Vector u = Vector::Zero(g.order);
    for (int xi = 0; xi < dual.size(); ++xi) {
        const auto& ir = dual.irreps[xi];
        if (phi.blocks[xi].rows() != ir.dim || phi.blocks[xi].cols() != ir.dim)
            throw std::invalid_argument("inverse_fourier: block shape mismatch");
        for (int x = 0; x < g.order; ++x)
            u(x) += dual.weight(xi) * (phi.blocks[xi] * ir.matrices[x]).trace();
    }
    return u;
}

double schatten_norm(const Matrix& m, double p) {
    if (p < 1.0) throw std::invalid_argument("schatten_norm: p < 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m);
    Eigen::VectorXd ev = es.eigenvalues();
    // negative-eigenvalue clamp, relative to the spectral radius of M*M
    const double floor = -1e-12 * std::max(1.0, ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0);
    double acc = 0;
    for (int i = 0; i < ev.size(); ++i) {
        double lambda = ev(i);
        if (lambda < 0) {
            if (lambda < floor)
                throw std::runtime_error("schatten_norm: eigensolve failure");
            lambda = 0;
        }
        const double sigma = std::sqrt(lambda);
        if (p == kInf) acc = std::max(acc, sigma);
        else acc += std::pow(sigma, p);
    }
    return p == kInf ? acc : std::pow(acc, 1.0 / p);
}

double bpp_norm(const UnitaryDual& dual, const SymbolField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("bpp_norm: p < 1");
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("bpp_norm: dual-first orientation required");
    double acc = 0;
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (const auto& block : f.blocks[xi]) {
            const double s = schatten_norm(block, p);
            if (p == kInf) acc = std::max(acc, s);
            else acc += dual.weight(static_cast<int>(xi)) * std::pow(s, p);
        }
    return p == kInf ? acc : std::pow(acc, 1.0 / p);
}

Complex pairing(const UnitaryDual& dual, const SymbolField& f, const SymbolField& h) {
    if (f.orientation != Orientation::DualFirst ||
        h.orientation != Orientation::DualFirst)
        throw std::invalid_argument("pairing: dual-first orientation required");
    require_same_shape(f, h);
    Complex acc = 0;
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (size_t x = 0; x < f.blocks[xi].size(); ++x)
            acc += dual.weight(static_cast<int>(xi)) *
                   (f.blocks[xi][x] * h.blocks[xi][x].adjoint()).trace();
    return acc;
}

Complex big_trace(const UnitaryDual& dual, const SymbolField& f) {
    if (f.orientation != Orientation::DualFirst)
        throw std::invalid_argument("big_trace: dual-first orientation required");
    Complex acc = 0;
    for (size_t xi = 0; xi < f.blocks.size(); ++xi)
        for (size_t x = 0; x < f.blocks[xi].size(); ++x)
            acc += dual.weight(static_cast<int>(xi)) * f.blocks[xi][x].trace();
    return acc;
}

} // namespace bq
