#include <stdexcept>

#include "bq/dual.hpp"
#include "bq/random.hpp"

namespace bq {

namespace {

// Right regular representation: (R(x)u)(y) = u(y*x), so R(x)_{y,z} = [z == y*x].
// Conjugation by R(x) is a relabeling: (R(x) H R(x)^*)_{p,q} = H_{p*x, q*x}.
Matrix average_over_group(const FiniteGroup& g, const Matrix& h) {
    const int n = g.order;
    Matrix c = Matrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) c(p, q) += h(g.mul(p, x), g.mul(q, x));
    return c / double(n);
}

Matrix subrep_matrix(const FiniteGroup& g, const Matrix& basis, int x) {
    const int n = g.order;
    Matrix rb(n, basis.cols());
    for (int y = 0; y < n; ++y) rb.row(y) = basis.row(g.mul(y, x));  // R(x)*basis
    return basis.adjoint() * rb;
}

double character_norm(const FiniteGroup& g, const Matrix& basis) {
    double s = 0;
    for (int x = 0; x < g.order; ++x)
        s += std::norm(subrep_matrix(g, basis, x).trace());
    return s / g.order;
}

double invariance_residual(const FiniteGroup& g, const Matrix& basis) {
    // || R(x) B - B (B^* R(x) B) || must vanish on an invariant subspace
    const int n = g.order;
    double worst = 0;
    for (int x = 0; x < n; ++x) {
        Matrix rb(n, basis.cols());
        for (int y = 0; y < n; ++y) rb.row(y) = basis.row(g.mul(y, x));
        worst = std::max(worst,
                         (rb - basis * (basis.adjoint() * rb)).cwiseAbs().maxCoeff());
    }
    return worst;
}

// Splits the subspace spanned by `basis` into irreducible invariant blocks.
void split_irreducible(const FiniteGroup& g, const Matrix& basis, Rng& rng,
                       int depth, std::vector<Matrix>& blocks) {
    if (depth > 16) throw std::runtime_error("irrep splitting did not converge");
    const double cnorm = character_norm(g, basis);
    if (std::abs(cnorm - 1.0) < 1e-6) {
        blocks.push_back(basis);
        return;
    }
    const int k = static_cast<int>(basis.cols());
    // Average a fresh random Hermitian inside the subspace; its eigenspaces
    // refine the subspace into smaller invariant pieces.
    Matrix h = rng.hermitian(k);
    Matrix c = Matrix::Zero(k, k);
    for (int x = 0; x < g.order; ++x) {
        Matrix rx = subrep_matrix(g, basis, x);
        c += rx * h * rx.adjoint();
    }
    c /= double(g.order);
    Eigen::SelfAdjointEigenSolver<Matrix> es(c);
    const Eigen::VectorXd ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

    int start = 0;
    for (int i = 0; i < k; ++i) {
        if (i + 1 < k && ev(i + 1) - ev(i) <= 1e-7 * scale) continue;
        if (i + 1 - start == k) {
            // no refinement this round, retry with another random matrix
            split_irreducible(g, basis, rng, depth + 1, blocks);
            return;
        }
        Matrix sub = basis * es.eigenvectors().middleCols(start, i + 1 - start);
        if (invariance_residual(g, sub) > 1e-8)
            throw std::runtime_error("degenerate eigenvalue draw");
        split_irreducible(g, sub, rng, depth + 1, blocks);
        start = i + 1;
    }
}

} // namespace

UnitaryDual extract_irreps_numeric(const FiniteGroup& g, std::uint64_t seed,
                                   int max_retries) {
    const int n = g.order;
    std::string last_error;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        try {
            Matrix c = average_over_group(g, rng.hermitian(n));
            Eigen::SelfAdjointEigenSolver<Matrix> es(c);
            const Eigen::VectorXd ev = es.eigenvalues();
            const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

            std::vector<Matrix> blocks;
            int start = 0;
            for (int i = 0; i < n; ++i) {
                if (i + 1 < n && ev(i + 1) - ev(i) <= 1e-7 * scale) continue;
                Matrix sub = es.eigenvectors().middleCols(start, i + 1 - start);
                if (invariance_residual(g, sub) > 1e-8)
                    throw std::runtime_error("degenerate eigenvalue draw");
                split_irreducible(g, sub, rng, 0, blocks);
                start = i + 1;
            }

            // deduplicate by character (basis independent)
            UnitaryDual dual;
            dual.group_order = n;
            for (const auto& basis : blocks) {
                Irrep ir;
                ir.dim = static_cast<int>(basis.cols());
                ir.matrices.reserve(n);
                for (int x = 0; x < n; ++x)
                    ir.matrices.push_back(subrep_matrix(g, basis, x));
                bool dup = false;
                for (const auto& seen : dual.irreps) {
                    if (seen.dim != ir.dim) continue;
                    double d = 0;
                    for (int x = 0; x < n; ++x)
                        d = std::max(d, std::abs(seen.character(x) - ir.character(x)));
                    if (d < 1e-8) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) {
                    ir.label = "num" + std::to_string(dual.irreps.size());
                    dual.irreps.push_back(std::move(ir));
                }
            }
            for (const auto& ir : dual.irreps)
                dual.weights.push_back(double(ir.dim) / double(n));

            if (!validate_dual(g, dual).ok())
                throw std::runtime_error("extracted dual failed validation");
            return dual;
        } catch (const std::runtime_error& e) {
            last_error = e.what();
        }
    }
    throw std::runtime_error("extract_irreps_numeric failed after retries: " + last_error);
}

} // namespace bq
