// End-to-end acceptance battery: every core identity of the library checked
// on the default group catalog with one pass/fail line per criterion.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "bq/bargmann.hpp"
#include "bq/json_io.hpp"
#include "bq/pseudodiff.hpp"
#include "bq/suite.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

using namespace bq;

namespace {

constexpr std::uint64_t kSeed = 7;

struct GroupCase {
    std::string name;
    FiniteGroup g;
    UnitaryDual dual;
};

std::vector<GroupCase> build_battery() {
    const char* names[] = {"cyclic(4)",    "product(cyclic(2),cyclic(2))",
                           "dihedral(4)",  "quaternion8",
                           "symmetric(3)", "symmetric(4)",
                           "heisenberg(3)"};
    std::vector<GroupCase> out;
    for (const char* n : names) {
        GroupCase c;
        c.name = n;
        c.g = build_group(parse_group_spec(n));
        c.dual = build_dual(c.g);
        out.push_back(std::move(c));
    }
    return out;
}

double rel(double err, double scale) { return err / std::max(scale, 1e-300); }

double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff();
}

struct Result {
    double worst = 0.0;
    bool pass = true;

    void track(double residual, double tolerance) {
        worst = std::max(worst, residual);
        if (residual > tolerance) pass = false;
    }
};

// 1. Fourier unitarity: ||u||^2 = sum_xi w_xi ||(Fu)(xi)||_HS^2.
Result criterion_plancherel(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        Rng rng(mix_seed(kSeed, 1101));
        for (int t = 0; t < 20; ++t) {
            Vector u = rng.vector(c.g.order);
            DualField phi = fourier(c.g, c.dual, u);
            double rhs = 0;
            for (int xi = 0; xi < c.dual.size(); ++xi)
                rhs += c.dual.weight(xi) * phi.blocks[xi].squaredNorm();
            r.track(rel(std::abs(u.squaredNorm() - rhs), u.squaredNorm()), 1e-10);
        }
    }
    return r;
}

// 2. Joint-transform unitarity and p-norm contraction.
Result criterion_wigner_unitarity(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        const int n = c.g.order;
        Rng rng(mix_seed(kSeed, 1201));
        for (int t = 0; t < 20; ++t) {
            Vector u = rng.vector(n), v = rng.vector(n);
            Vector up = rng.vector(n), vp = rng.vector(n);
            Complex lhs = pairing(c.dual, fourier_wigner(c.g, c.dual, u, v),
                                  fourier_wigner(c.g, c.dual, up, vp));
            Complex rhs = up.dot(u) * v.dot(vp);
            r.track(std::abs(lhs - rhs), 1e-10 * (1 + std::abs(rhs)));
        }
        for (int t = 0; t < 10; ++t) {
            Vector u = rng.unit_vector(n), v = rng.unit_vector(n);
            SymbolField w = fourier_wigner(c.g, c.dual, u, v);
            for (double p : {2.0, 4.0, kInf})
                r.track(std::max(bpp_norm(c.dual, w, p) - 1.0, 0.0), 1e-10);
        }
    }
    return r;
}

// 3. Projection family algebra at every phase-space point.
Result criterion_projections(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        Rng rng(mix_seed(kSeed, 1301));
        for (int t = 0; t < 5; ++t) {
            Vector omega = rng.vector(c.g.order);
            const double n2 = omega.squaredNorm();
            for (int xi = 0; xi < c.dual.size(); ++xi)
                for (int x = 0; x < c.g.order; ++x) {
                    Matrix pr = projector(c.g, c.dual, omega, xi, x);
                    r.track((pr - pr.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
                    r.track(-min_eigenvalue(pr), 1e-10);
                    r.track((pr * pr - n2 * pr).cwiseAbs().maxCoeff() / n2, 1e-10);
                    r.track(std::abs(schatten_norm(pr, kInf) - n2) / n2, 1e-9);
                }
        }
    }
    return r;
}

// 4. Quantizing the identity field with a unit window gives the identity.
Result criterion_overcompleteness(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        Rng rng(mix_seed(kSeed, 1401));
        Vector omega = rng.unit_vector(c.g.order);
        Matrix b = berezin_weak(c.g, c.dual, omega, symbol_one(c.dual, c.g.order));
        r.track((b - Matrix::Identity(c.g.order, c.g.order)).cwiseAbs().maxCoeff(),
                1e-10);
    }
    return r;
}

// 5. Trace formula, positivity with trace-norm equality, and Schatten bounds.
Result criterion_trace_positivity(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        const int n = c.g.order;
        Rng rng(mix_seed(kSeed, 1501));
        for (int t = 0; t < 20; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Matrix ber = berezin_weak(c.g, c.dual, omega, f);
            Complex expect = omega.squaredNorm() * big_trace(c.dual, f);
            r.track(rel(std::abs(ber.trace() - expect), std::abs(expect)), 1e-9);
            for (double s : {1.0, 2.0, kInf}) {
                const double root = (s == kInf) ? 1.0 : std::pow(4.0, 1.0 / s);
                double bound =
                    root * bpp_norm(c.dual, f, s) * omega.squaredNorm();
                r.track(std::max(schatten_norm(ber, s) - bound, 0.0), 1e-9);
            }
        }
        for (int t = 0; t < 20; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_positive_symbol(c.dual, n, rng);
            Matrix ber = berezin_weak(c.g, c.dual, omega, f);
            r.track(-min_eigenvalue(ber), 1e-10);
            double rhs = omega.squaredNorm() * std::real(big_trace(c.dual, f));
            r.track(rel(std::abs(schatten_norm(ber, 1.0) - rhs), rhs), 1e-9);
        }
    }
    return r;
}

// 6. Independent evaluation routes agree.
Result criterion_routes(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        const int n = c.g.order;
        Rng rng(mix_seed(kSeed, 1601));
        for (int t = 0; t < 20; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Matrix a = berezin_weak(c.g, c.dual, omega, f);
            Matrix b = berezin_kernel(c.g, c.dual, omega, f).op;
            r.track((a - b).cwiseAbs().maxCoeff(),
                    1e-10 * (1 + a.cwiseAbs().maxCoeff()));
        }
        for (int t = 0; t < 20; ++t) {
            SymbolField a = random_symbol(c.dual, n, rng, Orientation::GroupFirst);
            Matrix k = op_quantize(c.g, c.dual, a);
            Matrix d = op_quantize_direct(c.g, c.dual, a);
            Matrix w = op_quantize_weak(c.g, c.dual, a);
            r.track((k - d).cwiseAbs().maxCoeff(), 1e-10);
            r.track((d - w).cwiseAbs().maxCoeff(), 1e-10);
            r.track((k - w).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
    return r;
}

// 7. Pseudo-differential bridge, plus the abelian convolution form.
Result criterion_bridge(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        const int n = c.g.order;
        Rng rng(mix_seed(kSeed, 1701));
        for (int t = 0; t < 10; ++t) {
            Vector omega = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            SymbolField a = symbol_from_berezin(c.g, c.dual, omega, f);
            Matrix op = op_quantize(c.g, c.dual, a);
            Matrix ber = berezin_kernel(c.g, c.dual, omega, f).op;
            r.track((op - ber).cwiseAbs().maxCoeff(), 1e-9);
            if (c.g.is_abelian()) {
                SymbolField conv =
                    abelian_convolution_symbol(c.g, c.dual, omega, f);
                r.track(symbol_max_abs_diff(a, conv), 1e-10);
            }
        }
    }
    return r;
}

// 8. Phase-space transform calculus: adjoint, inversion, projection.
Result criterion_bargmann(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        const int n = c.g.order;
        Rng rng(mix_seed(kSeed, 1801));
        Vector omega = rng.unit_vector(n);
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n);
            SymbolField f = random_symbol(c.dual, n, rng);
            Complex lhs = pairing(c.dual, bargmann(c.g, c.dual, omega, u), f);
            Complex rhs = bargmann_adjoint(c.g, c.dual, omega, f).dot(u);
            r.track(std::abs(lhs - rhs), 1e-10 * (1 + std::abs(lhs)));
        }
        for (int t = 0; t < 20; ++t) {
            Vector u = rng.vector(n);
            Vector back = bargmann_adjoint(c.g, c.dual, omega,
                                           bargmann(c.g, c.dual, omega, u));
            r.track((back - u).cwiseAbs().maxCoeff(), 1e-10);
        }
        Matrix p = projection_matrix(c.g, c.dual, omega);
        r.track((p - p.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
        r.track((p * p - p).cwiseAbs().maxCoeff(), 1e-10);
        for (int t = 0; t < 5; ++t) {
            Vector u = rng.vector(n);
            SymbolField wu = bargmann(c.g, c.dual, omega, u);
            r.track(symbol_max_abs_diff(
                        bargmann_projection(c.g, c.dual, omega, wu), wu),
                    1e-10);
        }
        for (int t = 0; t < 3; ++t) {
            SymbolField f = random_symbol(c.dual, n, rng);
            r.track(symbol_max_abs_diff(
                        bargmann_projection(c.g, c.dual, omega, f),
                        bargmann_projection_composed(c.g, c.dual, omega, f)),
                    1e-10);
        }
    }
    return r;
}

// 9. Compression identity on the flattened phase space.
Result criterion_toeplitz(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        const int n = c.g.order;
        Rng rng(mix_seed(kSeed, 1901));
        Vector omega = rng.unit_vector(n);
        Matrix p = projection_matrix(c.g, c.dual, omega);
        Matrix wm = bargmann_matrix(c.g, c.dual, omega);
        for (int t = 0; t < 10; ++t) {
            SymbolField f = random_symbol(c.dual, n, rng);
            Matrix d = diag_right_matrix(c.g, c.dual, f);
            Matrix tp = p * (d * p);
            Matrix ber = berezin_weak(c.g, c.dual, omega, f);
            Matrix conj_route = wm * (ber * wm.adjoint());
            r.track((tp - conj_route).cwiseAbs().maxCoeff(), 1e-9);
            r.track(std::abs(tp.trace() - ber.trace()),
                    1e-9 * (1 + std::abs(ber.trace())));
        }
    }
    return r;
}

// 10. Listed duals against the independent numeric decomposition.
Result criterion_dual_integrity(const std::vector<GroupCase>& battery) {
    Result r;
    for (const auto& c : battery) {
        UnitaryDual numeric = extract_irreps_numeric(c.g, kSeed);
        r.track(character_multiset_distance(c.g, c.dual, numeric), 1e-8);
        ValidationReport rep = validate_dual(c.g, c.dual);
        for (const auto& check : rep.checks) {
            if (!check.pass) r.track(1.0, 0.0);
            r.track(check.residual, 1e-9);
        }
    }
    return r;
}

// 11. Byte-identical CLI report bodies across runs.
Result criterion_determinism() {
    Result r;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "bq_acceptance";
    fs::create_directories(dir);
    fs::path j1 = dir / "run1.json", j2 = dir / "run2.json";
    const std::string base = std::string("'") + BQ_CLI_PATH +
                             "' verify --group 'symmetric(3)' --suite all "
                             "--seed 7 --json '";
    for (const fs::path& out : {j1, j2}) {
        std::string cmd = base + out.string() + "' > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
#ifdef __unix__
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) r.track(1.0, 0.0);
#else
        if (status != 0) r.track(1.0, 0.0);
#endif
    }
    std::string a = read_text_file(j1.string());
    std::string b = read_text_file(j2.string());
    if (a.empty() || a != b) r.track(1.0, 0.0);
    return r;
}

} // namespace

int main() {
    std::vector<GroupCase> battery = build_battery();

    struct Line {
        const char* name;
        Result res;
    };
    std::vector<Line> lines;
    lines.push_back({"fourier unitarity", criterion_plancherel(battery)});
    lines.push_back(
        {"joint-transform unitarity + contraction", criterion_wigner_unitarity(battery)});
    lines.push_back({"projection family algebra", criterion_projections(battery)});
    lines.push_back({"identity-field quantization", criterion_overcompleteness(battery)});
    lines.push_back({"trace formula, positivity, norm bounds",
                     criterion_trace_positivity(battery)});
    lines.push_back({"independent evaluation routes", criterion_routes(battery)});
    lines.push_back({"pseudo-differential bridge", criterion_bridge(battery)});
    lines.push_back({"phase-space transform calculus", criterion_bargmann(battery)});
    lines.push_back({"compression identity", criterion_toeplitz(battery)});
    lines.push_back({"dual-object integrity", criterion_dual_integrity(battery)});
    lines.push_back({"report determinism", criterion_determinism()});

    int failures = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (!l.res.pass) ++failures;
        std::printf("criterion %2zu: %-42s %s  (worst residual %.3e)\n", i + 1,
                    l.name, l.res.pass ? "PASS" : "FAIL", l.res.worst);
    }
    std::printf("acceptance: %s (%zu/%zu)\n", failures == 0 ? "PASS" : "FAIL",
                lines.size() - failures, lines.size());
    return failures == 0 ? 0 : 1;
}
