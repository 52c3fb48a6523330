#include "bq/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bq/bargmann.hpp"
#include "bq/pseudodiff.hpp"

namespace bq {

namespace {

using nlohmann::ordered_json;

// <u, v>, linear in u.
Complex inner(const Vector& u, const Vector& v) { return v.dot(u); }

Complex pairing_any(const UnitaryDual& dual, const SymbolField& a,
                    const SymbolField& b) {
    if (a.orientation == Orientation::DualFirst) return pairing(dual, a, b);
    return pairing(dual, a.reindexed(), b.reindexed());
}

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

struct Ctx {
    const FiniteGroup& g;
    const UnitaryDual& dual;
    double tol;
    std::uint64_t seed;
    std::vector<SuiteCheck>& out;

    Rng rng(std::uint64_t stream) const { return Rng(mix_seed(seed, stream)); }

    void add(const std::string& name, const std::string& verifies, double residual,
             double tolerance, const std::string& detail = "") {
        SuiteCheck c;
        c.name = name;
        c.verifies = verifies;
        c.residual = residual;
        c.tolerance = tolerance;
        c.pass = residual <= tolerance;
        c.detail = detail;
        out.push_back(std::move(c));
    }

    void skip(const std::string& name, const std::string& verifies,
              const std::string& why) {
        SuiteCheck c;
        c.name = name;
        c.verifies = verifies;
        c.skipped = true;
        c.detail = why;
        out.push_back(std::move(c));
    }
};

double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------- plancherel

void suite_plancherel(Ctx& c) {
    const int n = c.g.order;
    {
        Rng rng = c.rng(101);
        double worst = 0;
        for (int t = 0; t < 20; ++t) {
            Vector u = rng.vector(n);
            DualField phi = fourier(c.g, c.dual, u);
            double rhs = 0;
            for (int xi = 0; xi < c.dual.size(); ++xi)
                rhs += c.dual.weight(xi) * phi.blocks[xi].squaredNorm();
            worst = std::max(worst, rel(std::abs(u.squaredNorm() - rhs),
                                        u.squaredNorm()));
        }
        c.add("plancherel-unitarity",
              "||u||^2 = sum_xi (d_xi/|G|) ||(Fu)(xi)||_HS^2 (relative)", worst,
              c.tol);
    }
    {
        Rng rng = c.rng(102);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n);
            Vector back = inverse_fourier(c.g, c.dual, fourier(c.g, c.dual, u));
            worst = std::max(worst, (u - back).cwiseAbs().maxCoeff());
        }
        c.add("fourier-inversion", "inverse_fourier(fourier(u)) = u", worst, c.tol);
    }
    {
        Rng rng = c.rng(103);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n);
            DualField phi = fourier(c.g, c.dual, u);
            double lhs = 0;
            for (const auto& b : phi.blocks)
                lhs = std::max(lhs, schatten_norm(b, kInf));
            worst = std::max(worst, lhs - u.cwiseAbs().sum());
        }
        c.add("hausdorff-young-p1",
              "max_xi opnorm((Fu)(xi)) <= sum_x |u(x)| (excess over the bound)",
              std::max(worst, 0.0), c.tol);
    }
    {
        Rng rng = c.rng(104);
        double worst = 0;
        for (int t = 0; t < 10; ++t) {
            Matrix m = rng.matrix(1 + t % 4, 1 + t % 4);
            double hs2 = schatten_norm(m, 2.0);
            double tr = std::real((m * m.adjoint()).trace());
            worst = std::max(worst, rel(std::abs(hs2 * hs2 - tr), tr));
        }
        c.add("schatten-hs-trace", "||M||_2^2 = Tr(M M*) (relative)", worst, 1e-12);
    }
    {
        Rng rng = c.rng(105);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            SymbolField f = random_symbol(c.dual, n, rng);
            SymbolField h = random_symbol(c.dual, n, rng);
            worst = std::max(worst, std::abs(pairing(c.dual, f, h) -
                                             std::conj(pairing(c.dual, h, f))));
        }
        c.add("pairing-hermiticity", "<F,H> = conj(<H,F>)", worst, c.tol);
    }
}

// ---------------------------------------------------------------------- weyl

void suite_weyl(Ctx& c) {
    const int n = c.g.order;
    {
        double worst = 0;
        for (int xi = 0; xi < c.dual.size(); ++xi)
            for (int x = 0; x < n; ++x) {
                Matrix w = weyl_operator(c.g, c.dual, xi, x);
                Matrix id = Matrix::Identity(w.rows(), w.cols());
                worst = std::max(worst,
                                 (w.adjoint() * w - id).cwiseAbs().maxCoeff());
                worst = std::max(worst,
                                 (w * w.adjoint() - id).cwiseAbs().maxCoeff());
            }
        c.add("weyl-unitarity", "W(X)* W(X) = W(X) W(X)* = 1 for all X", worst,
              1e-12);
    }
    {
        double worst = 0;
        for (int xi = 0; xi < c.dual.size(); ++xi)
            for (int x = 0; x < n; ++x) {
                Matrix a = weyl_operator_adjoint(c.g, c.dual, xi, x);
                Matrix b = weyl_operator(c.g, c.dual, xi, x).adjoint();
                worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
            }
        c.add("weyl-adjoint-form",
              "[W(X)* Psi](q) = xi(qx)* Psi(qx) matches the matrix adjoint",
              worst, 1e-12);
    }
    {
        Rng rng = c.rng(203);
        double worst = 0;
        for (int t = 0; t < 3; ++t) {
            Vector u = rng.vector(n);
            for (int xi = 0; xi < c.dual.size(); ++xi) {
                const auto& rep = c.dual.irreps[xi];
                for (int x = 0; x < n; ++x) {
                    double acc = 0;
                    for (int y = 0; y < n; ++y) {
                        const int yx = c.g.mul(y, x);
                        Matrix m = u(yx) * rep.matrices[yx].adjoint();
                        double op = schatten_norm(m, kInf);
                        acc += op * op;
                    }
                    worst = std::max(
                        worst, rel(std::abs(acc - u.squaredNorm()), u.squaredNorm()));
                }
            }
        }
        c.add("manageable-isometry",
              "sum_y opnorm([W(X)*u](y))^2 = ||u||^2 (relative)", worst, c.tol);
    }
}

// -------------------------------------------------------------------- wigner

void suite_wigner(Ctx& c) {
    const int n = c.g.order;
    {
        Rng rng = c.rng(301);
        double worst = 0;
        for (int t = 0; t < 20; ++t) {
            Vector u = rng.vector(n), v = rng.vector(n);
            Vector up = rng.vector(n), vp = rng.vector(n);
            Complex lhs = pairing(c.dual, fourier_wigner(c.g, c.dual, u, v),
                                  fourier_wigner(c.g, c.dual, up, vp));
            Complex rhs = inner(u, up) * inner(vp, v);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        c.add("fw-polarized-unitarity", "<W_{u,v}, W_{u',v'}> = <u,u'><v',v>",
              worst, c.tol);
    }
    {
        Rng rng = c.rng(302);
        double worst = 0;
        for (int t = 0; t < 10; ++t) {
            Vector u = rng.unit_vector(n), v = rng.unit_vector(n);
            SymbolField w = fourier_wigner(c.g, c.dual, u, v);
            for (double p : {2.0, 4.0, kInf})
                worst = std::max(worst, bpp_norm(c.dual, w, p) - 1.0);
        }
        c.add("fw-contraction",
              "bpp_norm(W_{u,v}, p) <= ||u|| ||v|| for p in {2,4,inf} "
              "(excess over the bound)",
              std::max(worst, 0.0), c.tol);
    }
    {
        Rng rng = c.rng(303);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n), v = rng.vector(n);
            SymbolField lhs = wigner(c.g, c.dual, u, v);
            TwoVariableFunction outer(n, n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    outer(x, y) = std::conj(u(x)) * v(y);
            SymbolField rhs = partial_fourier(c.g, c.dual, gamma_change(c.g, outer));
            worst = std::max(worst, symbol_max_abs_diff(lhs, rhs));
        }
        c.add("wigner-factorization",
              "V_{u,v} = partial_fourier(gamma(conj(u) (x) v))", worst, c.tol);
    }
    {
        Rng rng = c.rng(304);
        double worst = 0;
        for (int t = 0; t < 2; ++t) {
            Vector u = rng.vector(n), v = rng.vector(n);
            SymbolField fw = fourier_wigner(c.g, c.dual, u, v);
            for (int xi = 0; xi < c.dual.size(); ++xi) {
                const int d = c.dual.dim(xi);
                for (int x = 0; x < n; ++x) {
                    Matrix w = weyl_operator(c.g, c.dual, xi, x);
                    // module inner <u (x) 1 | W (v (x) 1)>
                    Matrix uu(n * d, d), wv(n * d, d);
                    for (int q = 0; q < n; ++q)
                        uu.block(q * d, 0, d, d) =
                            u(q) * Matrix::Identity(d, d);
                    Matrix vv(n * d, d);
                    for (int q = 0; q < n; ++q)
                        vv.block(q * d, 0, d, d) =
                            v(q) * Matrix::Identity(d, d);
                    wv = w * vv;
                    Matrix acc = Matrix::Zero(d, d);
                    for (int q = 0; q < n; ++q)
                        acc += uu.block(q * d, 0, d, d) *
                               wv.block(q * d, 0, d, d).adjoint();
                    worst = std::max(worst,
                                     (acc - fw.at(xi, x)).cwiseAbs().maxCoeff());
                }
            }
        }
        c.add("fw-lifted-oracle",
              "W_{u,v}(X) = <u (x) 1 | W(X)(v (x) 1)> through the Weyl matrices",
              worst, c.tol);
    }
}

// ------------------------------------------------------------------ coherent

void suite_coherent(Ctx& c) {
    const int n = c.g.order;
    double sa = 0, psd = 0, idem = 0, opn = 0;
    {
        Rng rng = c.rng(401);
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n);
            const double n2 = omega.squaredNorm();
            for (int xi = 0; xi < c.dual.size(); ++xi)
                for (int x = 0; x < n; ++x) {
                    Matrix pr = projector(c.g, c.dual, omega, xi, x);
                    sa = std::max(sa, (pr - pr.adjoint()).cwiseAbs().maxCoeff());
                    psd = std::max(psd, -min_eigenvalue(pr));
                    idem = std::max(
                        idem, (pr * pr - n2 * pr).cwiseAbs().maxCoeff() / n2);
                    opn = std::max(
                        opn, std::abs(schatten_norm(pr, kInf) - n2) / n2);
                }
        }
    }
    c.add("projector-selfadjoint", "Pr(X) = Pr(X)* for all X", sa, 1e-12);
    c.add("projector-psd", "Pr(X) >= 0 (negative part of min eigenvalue)", psd,
          1e-10);
    c.add("projector-idempotent", "Pr(X)^2 = ||omega||^2 Pr(X) (relative)", idem,
          c.tol);
    c.add("projector-opnorm", "opnorm(Pr(X)) = ||omega||^2 (relative)", opn, 1e-9);
    {
        Rng rng = c.rng(405);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n), u = rng.vector(n), v = rng.vector(n);
            const int xi = static_cast<int>(rng.uniform() * c.dual.size());
            const int x = static_cast<int>(rng.uniform() * n);
            const int d = c.dual.dim(xi);
            MatrixValuedFunction cs = coherent_state(c.g, c.dual, omega, xi, x);
            Matrix pr = projector(c.g, c.dual, omega, xi, x);
            // module inner <Pr u(x)1 | v(x)1> on C^{|G|d}
            Matrix uu(n * d, d), vvc(n * d, d);
            for (int q = 0; q < n; ++q) {
                uu.block(q * d, 0, d, d) = u(q) * Matrix::Identity(d, d);
                vvc.block(q * d, 0, d, d) = v(q) * Matrix::Identity(d, d);
            }
            Matrix pu = pr * uu;
            Matrix lhs = Matrix::Zero(d, d);
            for (int q = 0; q < n; ++q)
                lhs += pu.block(q * d, 0, d, d) *
                       vvc.block(q * d, 0, d, d).adjoint();
            // <Omega|v(x)1> and <u(x)1|Omega>
            Matrix a = Matrix::Zero(d, d), b = Matrix::Zero(d, d);
            for (int q = 0; q < n; ++q) {
                a += std::conj(v(q)) * cs.values[q];
                b += u(q) * cs.values[q].adjoint();
            }
            worst = std::max(worst, (lhs - a * b).cwiseAbs().maxCoeff());
            // factorization through the Fourier-Wigner transform
            Matrix fv = fourier_wigner(c.g, c.dual, v, omega).at(xi, x);
            Matrix fu = fourier_wigner(c.g, c.dual, u, omega).at(xi, x);
            worst = std::max(worst,
                             (lhs - fv.adjoint() * fu).cwiseAbs().maxCoeff());
        }
        c.add("projector-factorization",
              "<Pr(X)u|v(x)1> = <Omega|v(x)1><u(x)1|Omega> = W_{v,w}(X)* W_{u,w}(X)",
              worst, c.tol);
    }
}

// ------------------------------------------------------------------- berezin

void suite_berezin(Ctx& c) {
    const int n = c.g.order;
    {
        Rng rng = c.rng(501);
        double worst = 0;
        for (int t = 0; t < 3; ++t) {
            Vector omega = rng.vector(n);
            Matrix ber =
                berezin_weak(c.g, c.dual, omega, symbol_one(c.dual, n));
            Matrix expect = omega.squaredNorm() * Matrix::Identity(n, n);
            worst = std::max(
                worst, (ber - expect).cwiseAbs().maxCoeff() / omega.squaredNorm());
        }
        c.add("berezin-identity-window",
              "Ber_omega(1) = ||omega||^2 identity (relative)", worst, c.tol);
    }
    {
        Rng rng = c.rng(502);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Matrix a = berezin_weak(c.g, c.dual, omega, f);
            Matrix b = berezin_kernel(c.g, c.dual, omega, f).op;
            worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
        }
        c.add("berezin-weak-vs-kernel",
              "weak-form and kernel-form Ber matrices agree", worst, c.tol);
    }
    {
        Rng rng = c.rng(503);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Complex tr = berezin_weak(c.g, c.dual, omega, f).trace();
            Complex expect = omega.squaredNorm() * big_trace(c.dual, f);
            worst = std::max(worst, rel(std::abs(tr - expect), std::abs(expect)));
        }
        c.add("berezin-trace-formula",
              "Tr Ber_omega(F) = ||omega||^2 BigTr(F) (relative)", worst, 1e-9);
    }
    {
        Rng rng = c.rng(504);
        double neg = 0, trn = 0;
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_positive_symbol(c.dual, n, rng);
            Matrix ber = berezin_weak(c.g, c.dual, omega, f);
            neg = std::max(neg, -min_eigenvalue(ber));
            double lhs = schatten_norm(ber, 1.0);
            double rhs = omega.squaredNorm() * std::real(big_trace(c.dual, f));
            trn = std::max(trn, rel(std::abs(lhs - rhs), rhs));
        }
        c.add("berezin-positivity",
              "F >= 0 pointwise => Ber_omega(F) >= 0 (negative part)", neg, 1e-10);
        c.add("berezin-trace-norm",
              "F >= 0 => ||Ber||_1 = ||omega||^2 BigTr(F) (relative)", trn, 1e-9);
    }
    {
        Rng rng = c.rng(506);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Matrix ber = berezin_weak(c.g, c.dual, omega, f);
            for (double s : {1.0, 2.0, kInf}) {
                double bound = std::pow(4.0, 1.0 / (s == kInf ? 1e18 : s)) *
                               bpp_norm(c.dual, f, s) * omega.squaredNorm();
                worst = std::max(worst, schatten_norm(ber, s) - bound);
            }
        }
        c.add("berezin-norm-bound",
              "||Ber_omega(F)||_s <= 4^{1/s} ||F||_{s,s} ||omega||^2 for s in "
              "{1,2,inf} (excess)",
              std::max(worst, 0.0), 1e-9);
    }
    {
        Rng rng = c.rng(507);
        double lin = 0, adj = 0;
        for (int t = 0; t < 3; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            SymbolField h = random_symbol(c.dual, n, rng);
            Complex alpha = rng.cnormal();
            Matrix lhs =
                berezin_weak(c.g, c.dual, omega, symbol_axpy(alpha, f, h));
            Matrix rhs = alpha * berezin_weak(c.g, c.dual, omega, f) +
                         berezin_weak(c.g, c.dual, omega, h);
            lin = std::max(lin, (lhs - rhs).cwiseAbs().maxCoeff());
            Matrix a = berezin_weak(c.g, c.dual, omega, f).adjoint();
            Matrix b = berezin_weak(c.g, c.dual, omega, symbol_star(f));
            adj = std::max(adj, (a - b).cwiseAbs().maxCoeff());
        }
        c.add("berezin-linearity", "Ber(alpha F + H) = alpha Ber(F) + Ber(H)", lin,
              c.tol);
        c.add("berezin-adjoint-covariance", "Ber(F)* = Ber(F^star)", adj, c.tol);
    }
}

// ---------------------------------------------------------------- pseudodiff

void suite_pseudodiff(Ctx& c) {
    const int n = c.g.order;
    {
        Rng rng = c.rng(601);
        double worst = 0;
        for (int t = 0; t < 3; ++t) {
            TwoVariableFunction tab = rng.matrix(n, n);
            TwoVariableFunction back =
                gamma_inverse(c.g, gamma_change(c.g, tab));
            worst = std::max(worst, (back - tab).cwiseAbs().maxCoeff());
            TwoVariableFunction fwd =
                gamma_change(c.g, gamma_inverse(c.g, tab));
            worst = std::max(worst, (fwd - tab).cwiseAbs().maxCoeff());
        }
        c.add("gamma-involution",
              "gamma and gamma^{-1} invert each other exactly (entry permutation)",
              worst, 0.0);
    }
    {
        Rng rng = c.rng(602);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            SymbolField a = random_symbol(c.dual, n, rng, Orientation::GroupFirst);
            Matrix k = op_quantize(c.g, c.dual, a);
            Matrix d = op_quantize_direct(c.g, c.dual, a);
            Matrix w = op_quantize_weak(c.g, c.dual, a);
            worst = std::max(worst, (k - d).cwiseAbs().maxCoeff());
            worst = std::max(worst, (d - w).cwiseAbs().maxCoeff());
            worst = std::max(worst, (k - w).cwiseAbs().maxCoeff());
        }
        c.add("op-three-routes",
              "kernel, direct-sum and weak evaluations of Op(a) agree pairwise",
              worst, c.tol);
    }
    {
        Rng rng = c.rng(603);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            SymbolField a = random_symbol(c.dual, n, rng, Orientation::GroupFirst);
            Vector u = rng.vector(n), v = rng.vector(n);
            Complex lhs = inner(op_quantize(c.g, c.dual, a) * u, v);
            Complex rhs = pairing_any(c.dual, a, wigner(c.g, c.dual, u, v));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        c.add("op-wigner-duality", "<Op(a)u, v> = <a, V_{u,v}>", worst, c.tol);
    }
    {
        Rng rng = c.rng(604);
        double bridge = 0, routes = 0;
        for (int t = 0; t < 3; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            SymbolField a = symbol_from_berezin(c.g, c.dual, omega, f);
            SymbolField a2 = symbol_from_berezin_direct(c.g, c.dual, omega, f);
            routes = std::max(routes, symbol_max_abs_diff(a, a2));
            Matrix op = op_quantize(c.g, c.dual, a);
            Matrix ber = berezin_kernel(c.g, c.dual, omega, f).op;
            bridge = std::max(bridge, (op - ber).cwiseAbs().maxCoeff());
        }
        c.add("berezin-op-bridge", "Op(a^F_omega) = Ber_omega(F)", bridge, 1e-9);
        c.add("berezin-symbol-routes",
              "composed and literal-sum evaluations of a^F_omega agree", routes,
              c.tol);
    }
    if (c.g.is_abelian()) {
        {
            double worst = 0;
            std::string detail;
            try {
                character_product_table(c.g, c.dual);
            } catch (const std::exception& e) {
                worst = 1.0;
                detail = e.what();
            }
            c.add("abelian-character-closure",
                  "pointwise character products close in the listed dual", worst,
                  0.0, detail);
        }
        {
            Rng rng = c.rng(606);
            double worst = 0;
            for (int t = 0; t < 3; ++t) {
                Vector omega = rng.vector(n);
                SymbolField f = random_symbol(c.dual, n, rng);
                SymbolField a = symbol_from_berezin(c.g, c.dual, omega, f);
                SymbolField conv =
                    abelian_convolution_symbol(c.g, c.dual, omega, f);
                worst = std::max(worst, symbol_max_abs_diff(a, conv));
            }
            c.add("abelian-convolution-symbol",
                  "a^F_omega is a dual-pair convolution of F with V_{omega,omega} (abelian)",
                  worst, 1e-10);
        }
    } else {
        c.skip("abelian-character-closure",
               "pointwise character products close in the listed dual",
               "requires an abelian group");
        c.skip("abelian-convolution-symbol",
               "a^F_omega is a dual-pair convolution of F with V_{omega,omega} (abelian)",
               "requires an abelian group");
    }
}

// ------------------------------------------------------------------ bargmann

void suite_bargmann(Ctx& c) {
    const int n = c.g.order;
    {
        Rng rng = c.rng(701);
        double worst = 0;
        Vector omega = rng.unit_vector(n);
        for (int t = 0; t < 10; ++t) {
            Vector u = rng.vector(n), v = rng.vector(n);
            Complex lhs = pairing(c.dual, bargmann(c.g, c.dual, omega, u),
                                  bargmann(c.g, c.dual, omega, v));
            worst = std::max(worst, std::abs(lhs - inner(u, v)));
        }
        c.add("bargmann-isometry", "<Wu, Wv> = <u, v> for a unit window", worst,
              c.tol);
    }
    {
        Rng rng = c.rng(702);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(n), u = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Complex lhs = pairing(c.dual, bargmann(c.g, c.dual, omega, u), f);
            Complex rhs = inner(u, bargmann_adjoint(c.g, c.dual, omega, f));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        c.add("bargmann-adjoint-relation", "<Wu, F> = <u, W*F>", worst, c.tol);
    }
    {
        Rng rng = c.rng(703);
        Vector omega = rng.unit_vector(n);
        Matrix wm = bargmann_matrix(c.g, c.dual, omega);
        double worst = (wm.adjoint() * wm - Matrix::Identity(n, n))
                           .cwiseAbs()
                           .maxCoeff();
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n);
            Vector back = bargmann_adjoint(
                c.g, c.dual, omega, bargmann(c.g, c.dual, omega, u));
            worst = std::max(worst, (back - u).cwiseAbs().maxCoeff());
        }
        c.add("bargmann-inversion",
              "W*W = identity on L^2(G) and W* inverts W (unit window)", worst,
              c.tol);
    }
    {
        Rng rng = c.rng(704);
        Vector omega = rng.unit_vector(n);
        Matrix p = projection_matrix(c.g, c.dual, omega);
        double worst = (p - p.adjoint()).cwiseAbs().maxCoeff();
        worst = std::max(worst, (p * p - p).cwiseAbs().maxCoeff());
        c.add("projection-idempotent-selfadjoint",
              "flattened P is Hermitian with P^2 = P (unit window)", worst, c.tol);

        Eigen::SelfAdjointEigenSolver<Matrix> es((p + p.adjoint()) / 2.0);
        double spec = 0;
        int rank = 0;
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            const double ev = es.eigenvalues()(i);
            spec = std::max(spec, std::min(std::abs(ev), std::abs(ev - 1.0)));
            if (ev > 0.5) ++rank;
        }
        c.add("projection-spectrum", "eigenvalues of P lie in {0,1}", spec, 1e-8);
        c.add("projection-rank",
              "rank(P) = |G| (diagnostic: depends on injectivity of W for this "
              "window)",
              std::abs(rank - n), 0.0,
              "rank " + std::to_string(rank) + " of " + std::to_string(n * n));
    }
    {
        Rng rng = c.rng(705);
        Vector omega = rng.unit_vector(n);
        double worst = 0;
        for (int t = 0; t < 3; ++t) {
            SymbolField f = random_symbol(c.dual, n, rng);
            SymbolField a = bargmann_projection(c.g, c.dual, omega, f);
            SymbolField b = bargmann_projection_composed(c.g, c.dual, omega, f);
            worst = std::max(worst, symbol_max_abs_diff(a, b));
        }
        c.add("projection-kernel-vs-composed",
              "reproducing-kernel and W W* evaluations of P agree", worst, c.tol);
    }
    {
        Rng rng = c.rng(706);
        Vector omega = rng.unit_vector(n);
        double worst = 0;
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n);
            SymbolField wu = bargmann(c.g, c.dual, omega, u);
            SymbolField back = bargmann_projection(c.g, c.dual, omega, wu);
            worst = std::max(worst, symbol_max_abs_diff(wu, back));
        }
        c.add("reproducing-formula", "P(Wu) = Wu: the range reproduces itself",
              worst, c.tol);
    }
    {
        Rng rng = c.rng(707);
        Vector omega = rng.unit_vector(n);
        Matrix wm = bargmann_matrix(c.g, c.dual, omega);
        Matrix p = projection_matrix(c.g, c.dual, omega);
        double worst = (p - wm * wm.adjoint()).cwiseAbs().maxCoeff();
        c.add("projection-factorization", "P = W W* on the flattened space",
              worst, c.tol);
    }
}

// ------------------------------------------------------------------ toeplitz

void suite_toeplitz(Ctx& c) {
    const int n = c.g.order;
    Rng rng = c.rng(801);
    Vector omega = rng.unit_vector(n);
    {
        double worst = 0, trw = 0;
        for (int t = 0; t < 3; ++t) {
            SymbolField f = random_symbol(c.dual, n, rng);
            Matrix tp = toeplitz(c.g, c.dual, omega, f);
            Matrix conj_route = toeplitz_conjugation(c.g, c.dual, omega, f);
            worst = std::max(worst, (tp - conj_route).cwiseAbs().maxCoeff());
            Complex tr_ber =
                berezin_kernel(c.g, c.dual, omega, f).op.trace();
            trw = std::max(trw, std::abs(tp.trace() - tr_ber));
        }
        c.add("toeplitz-compression-vs-conjugation",
              "P Diag_R(F) P = W Ber_omega(F) W* on the flattened space", worst,
              1e-9);
        c.add("toeplitz-trace", "Tr Tp_omega(F) = Tr Ber_omega(F)", trw, 1e-9);
    }
    {
        double neg = 0;
        for (int t = 0; t < 3; ++t) {
            SymbolField f = random_positive_symbol(c.dual, n, rng);
            Matrix tp = toeplitz(c.g, c.dual, omega, f);
            neg = std::max(neg, -min_eigenvalue(tp));
        }
        c.add("toeplitz-positivity",
              "F >= 0 pointwise => Tp_omega(F) >= 0 (negative part)", neg, 1e-10);
    }
}

void run_one(const std::string& id, Ctx& c) {
    if (id == "plancherel") suite_plancherel(c);
    else if (id == "weyl") suite_weyl(c);
    else if (id == "wigner") suite_wigner(c);
    else if (id == "coherent") suite_coherent(c);
    else if (id == "berezin") suite_berezin(c);
    else if (id == "pseudodiff") suite_pseudodiff(c);
    else if (id == "bargmann") suite_bargmann(c);
    else if (id == "toeplitz") suite_toeplitz(c);
    else throw std::invalid_argument("unknown suite: " + id);
}

} // namespace

SymbolField random_symbol(const UnitaryDual& dual, int order, Rng& rng,
                          Orientation o) {
    SymbolField f = symbol_zero(dual, order, o);
    for (int xi = 0; xi < dual.size(); ++xi)
        for (int x = 0; x < order; ++x)
            f.blocks[xi][x] = rng.matrix(dual.dim(xi), dual.dim(xi));
    return f;
}

SymbolField random_positive_symbol(const UnitaryDual& dual, int order, Rng& rng,
                                   Orientation o) {
    SymbolField f = symbol_zero(dual, order, o);
    for (int xi = 0; xi < dual.size(); ++xi)
        for (int x = 0; x < order; ++x) {
            Matrix a = rng.matrix(dual.dim(xi), dual.dim(xi));
            f.blocks[xi][x] = a * a.adjoint();
        }
    return f;
}

SuiteReport run_suite(const GroupSpec& spec, const std::string& suite, double tol,
                      std::uint64_t seed) {
    const auto& ids = suite_ids();
    if (suite != "all" &&
        std::find(ids.begin(), ids.end(), suite) == ids.end())
        throw std::invalid_argument("unknown suite: " + suite);

    const auto t0 = std::chrono::steady_clock::now();
    FiniteGroup g = build_group(spec);
    UnitaryDual dual = build_dual(g);

    SuiteReport report;
    report.suite = suite;
    report.group = spec.str();
    report.seed = seed;
    report.tol = tol;

    Ctx ctx{g, dual, tol, seed, report.checks};
    if (suite == "all")
        for (const auto& id : ids) run_one(id, ctx);
    else
        run_one(suite, ctx);

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

std::string suite_report_json(const SuiteReport& r) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc{{"name", c.name},
                        {"verifies", c.verifies},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass},
                        {"skipped", c.skipped}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(std::move(jc));
    }
    ordered_json body{{"suite", r.suite}, {"group", r.group},
                      {"seed", r.seed},   {"tol", r.tol},
                      {"pass", r.ok()},   {"checks", std::move(checks)}};
    return body.dump(2) + "\n";
}

std::string suite_report_text(const SuiteReport& r) {
    std::ostringstream ss;
    ss << "group " << r.group << " suite " << r.suite << " seed " << r.seed
       << " tol " << r.tol << "\n";
    for (const auto& c : r.checks) {
        if (c.skipped) {
            ss << "  [skip] " << c.name << " (" << c.detail << ")\n";
            continue;
        }
        ss << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name << "  residual "
           << c.residual << "  tol " << c.tolerance;
        if (!c.detail.empty()) ss << "  (" << c.detail << ")";
        ss << "\n";
    }
    ss << (r.ok() ? "PASS" : "FAIL") << " in " << r.wall_seconds << " s\n";
    return ss.str();
}

std::vector<GroupListing> list_groups() {
    static const char* battery[] = {
        "cyclic(4)",    "product(cyclic(2),cyclic(2))",
        "dihedral(4)",  "quaternion8",
        "symmetric(3)", "symmetric(4)",
        "heisenberg(3)"};
    std::vector<GroupListing> out;
    for (const char* name : battery) {
        FiniteGroup g = build_group(parse_group_spec(name));
        UnitaryDual dual = build_dual(g);
        GroupListing l;
        l.name = name;
        l.order = g.order;
        for (const auto& ir : dual.irreps) l.irrep_dims.push_back(ir.dim);
        std::sort(l.irrep_dims.begin(), l.irrep_dims.end());
        out.push_back(std::move(l));
    }
    return out;
}

std::string list_groups_text() {
    std::ostringstream ss;
    for (const auto& l : list_groups()) {
        ss << l.name << "  order " << l.order << "  irrep dims {";
        for (size_t i = 0; i < l.irrep_dims.size(); ++i)
            ss << (i ? "," : "") << l.irrep_dims[i];
        ss << "}\n";
    }
    return ss.str();
}

} // namespace bq
