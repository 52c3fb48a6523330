#include "bq/dual.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "catalog.hpp"

namespace bq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex unit_phase(double turns) {  // e^{2*pi*i*turns}
    return {std::cos(kTwoPi * turns), std::sin(kTwoPi * turns)};
}

Irrep character_irrep(std::vector<Complex> values, std::string label) {
    Irrep ir;
    ir.dim = 1;
    ir.label = std::move(label);
    ir.matrices.reserve(values.size());
    for (Complex v : values) {
        Matrix m(1, 1);
        m(0, 0) = v;
        ir.matrices.push_back(m);
    }
    return ir;
}

// ----- cyclic -----

std::vector<Irrep> cyclic_irreps(int n) {
    std::vector<Irrep> out;
    for (int k = 0; k < n; ++k) {
        std::vector<Complex> vals(n);
        for (int j = 0; j < n; ++j)
            vals[j] = unit_phase(-double(k) * double(j) / double(n));
        out.push_back(character_irrep(std::move(vals), "chi" + std::to_string(k)));
    }
    return out;
}

// ----- dihedral -----

std::vector<Irrep> dihedral_irreps(int n) {
    const int order = 2 * n;
    std::vector<Irrep> out;
    auto flip = [n](int idx) { return idx >= n; };
    auto rot = [n](int idx) { return idx >= n ? idx - n : idx; };

    // one-dimensional: chi(r)=eps_r, chi(s)=eps_s; eps_r=-1 only for even n
    std::vector<std::pair<int, int>> signs = {{1, 1}, {1, -1}};
    if (n % 2 == 0) {
        signs.push_back({-1, 1});
        signs.push_back({-1, -1});
    }
    for (auto [er, es] : signs) {
        std::vector<Complex> vals(order);
        for (int idx = 0; idx < order; ++idx) {
            double v = (er == -1 && rot(idx) % 2 == 1) ? -1.0 : 1.0;
            if (flip(idx) && es == -1) v = -v;
            vals[idx] = v;
        }
        out.push_back(character_irrep(std::move(vals),
                                      std::string("eps(") + (er > 0 ? "+" : "-") +
                                          "," + (es > 0 ? "+" : "-") + ")"));
    }

    // two-dimensional rho_h, h = 1 .. ceil(n/2)-1
    const int hmax = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    for (int h = 1; h <= hmax; ++h) {
        Irrep ir;
        ir.dim = 2;
        ir.label = "rho" + std::to_string(h);
        ir.matrices.resize(order);
        for (int idx = 0; idx < order; ++idx) {
            int k = rot(idx);
            Complex a = unit_phase(-double(h) * double(k) / double(n));
            Matrix m = Matrix::Zero(2, 2);
            if (!flip(idx)) {
                m(0, 0) = a;
                m(1, 1) = std::conj(a);
            } else {
                m(0, 1) = std::conj(a);
                m(1, 0) = a;
            }
            ir.matrices[idx] = m;
        }
        out.push_back(std::move(ir));
    }
    return out;
}

// ----- symmetric, Young orthogonal form -----

using Tableau = std::vector<std::vector<int>>;  // rows, 1-based entries

void fill_tableaux(const std::vector<int>& shape, Tableau& t, int next, int n,
                   std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(t);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        size_t c = t[r].size();
        if (static_cast<int>(c) >= shape[r]) continue;
        if (r > 0 && t[r - 1].size() <= c) continue;  // column must grow downward
        t[r].push_back(next);
        fill_tableaux(shape, t, next + 1, n, out);
        t[r].pop_back();
    }
}

std::vector<Tableau> standard_tableaux(const std::vector<int>& shape, int n) {
    Tableau t(shape.size());
    std::vector<Tableau> out;
    fill_tableaux(shape, t, 1, n, out);
    return out;
}

// content = col - row (0-based) of value v inside tableau
int tableau_content(const Tableau& t, int v) {
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c)
            if (t[r][c] == v) return static_cast<int>(c) - static_cast<int>(r);
    throw std::logic_error("value not in tableau");
}

Tableau tableau_swap(const Tableau& t, int v) {
    Tableau s = t;
    for (auto& row : s)
        for (auto& e : row) {
            if (e == v) e = v + 1;
            else if (e == v + 1) e = v;
        }
    return s;
}

bool tableau_standard(const Tableau& t) {
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c) {
            if (c + 1 < t[r].size() && t[r][c] > t[r][c + 1]) return false;
            if (r + 1 < t.size() && c < t[r + 1].size() && t[r][c] > t[r + 1][c])
                return false;
        }
    return true;
}

// Matrix of the adjacent transposition (v, v+1) in the Young orthogonal form.
Eigen::MatrixXd yor_transposition(const std::vector<Tableau>& tabs, int v) {
    const int d = static_cast<int>(tabs.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        int dist = tableau_content(tabs[i], v + 1) - tableau_content(tabs[i], v);
        double r = 1.0 / double(dist);
        m(i, i) = r;
        if (std::abs(dist) > 1) {
            Tableau s = tableau_swap(tabs[i], v);
            if (tableau_standard(s)) {
                auto it = std::find(tabs.begin(), tabs.end(), s);
                int j = static_cast<int>(it - tabs.begin());
                m(i, j) = std::sqrt(1.0 - r * r);
            }
        }
    }
    return m;
}

// Adjacent-transposition factorization of a permutation (one-line, 0-based)
// under the composition convention (s*t)(i) = s(t(i)).
std::vector<int> adjacent_factors(std::vector<int> p) {
    std::vector<int> factors;
    bool done = false;
    while (!done) {
        done = true;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);  // p <- p o s_i
                factors.push_back(static_cast<int>(i));
                done = false;
                break;
            }
        }
    }
    // p = s_{f_m} o ... o s_{f_1}, so apply factors in collected order on the left
    return factors;
}

void partitions_of(int n, int maxPart, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxPart); k >= 1; --k) {
        cur.push_back(k);
        partitions_of(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Irrep> symmetric_irreps(int n) {
    auto perms = detail::perms_lex(n);
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(n, n, cur, parts);

    std::vector<Irrep> out;
    for (const auto& shape : parts) {
        auto tabs = standard_tableaux(shape, n);
        const int d = static_cast<int>(tabs.size());
        std::vector<Eigen::MatrixXd> gens;
        for (int v = 1; v < n; ++v) gens.push_back(yor_transposition(tabs, v));

        Irrep ir;
        ir.dim = d;
        ir.label = "[";
        for (size_t i = 0; i < shape.size(); ++i)
            ir.label += (i ? "," : "") + std::to_string(shape[i]);
        ir.label += "]";
        ir.matrices.reserve(perms.size());
        for (const auto& p : perms) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
            for (int f : adjacent_factors(p)) m = gens[f] * m;
            ir.matrices.push_back(m.cast<Complex>());
        }
        out.push_back(std::move(ir));
    }
    return out;
}

// ----- quaternion -----

std::vector<Irrep> quaternion_irreps() {
    std::vector<Irrep> out;
    // characters factor through Q8 / {+-1} = Z2 x Z2
    for (int si = +1; si >= -1; si -= 2)
        for (int sj = +1; sj >= -1; sj -= 2) {
            std::vector<Complex> vals(8);
            for (int idx = 0; idx < 8; ++idx) {
                auto e = detail::quat_decode(idx);
                double v = 1.0;
                if (e.unit == 1) v = si;
                else if (e.unit == 2) v = sj;
                else if (e.unit == 3) v = si * sj;
                vals[idx] = v;
            }
            out.push_back(character_irrep(std::move(vals),
                                          std::string("chi(") + (si > 0 ? "+" : "-") +
                                              "," + (sj > 0 ? "+" : "-") + ")"));
        }
    Irrep two;
    two.dim = 2;
    two.label = "spin";
    two.matrices.resize(8);
    const Complex I{0, 1};
    Matrix mi(2, 2), mj(2, 2), mk(2, 2), m1 = Matrix::Identity(2, 2);
    mi << I, 0, 0, -I;
    mj << 0, 1, -1, 0;
    mk << 0, I, I, 0;
    Matrix units[4] = {m1, mi, mj, mk};
    for (int idx = 0; idx < 8; ++idx) {
        auto e = detail::quat_decode(idx);
        two.matrices[idx] = double(e.sign) * units[e.unit];
    }
    out.push_back(std::move(two));
    return out;
}

// ----- Heisenberg over Z_p -----

std::vector<Irrep> heisenberg_irreps(int p) {
    const int order = p * p * p;
    std::vector<Irrep> out;
    for (int alpha = 0; alpha < p; ++alpha)
        for (int beta = 0; beta < p; ++beta) {
            std::vector<Complex> vals(order);
            for (int idx = 0; idx < order; ++idx) {
                auto e = detail::heis_decode(p, idx);
                vals[idx] = unit_phase(double(alpha * e.a + beta * e.b) / double(p));
            }
            out.push_back(character_irrep(
                std::move(vals),
                "chi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")"));
        }
    // p-dimensional irreps pi_t, t = 1..p-1, on functions Z_p -> C:
    // [pi_t(a,b,c) f](x) = w^{t(c + b x)} f(x + a)
    for (int t = 1; t < p; ++t) {
        Irrep ir;
        ir.dim = p;
        ir.label = "pi" + std::to_string(t);
        ir.matrices.resize(order);
        for (int idx = 0; idx < order; ++idx) {
            auto e = detail::heis_decode(p, idx);
            Matrix m = Matrix::Zero(p, p);
            for (int x = 0; x < p; ++x)
                m(x, (x + e.a) % p) = unit_phase(double(t * (e.c + e.b * x)) / double(p));
            ir.matrices[idx] = m;
        }
        out.push_back(std::move(ir));
    }
    return out;
}

// ----- products -----

std::vector<Irrep> product_irreps(const std::vector<Irrep>& a, int na,
                                  const std::vector<Irrep>& b, int nb) {
    std::vector<Irrep> out;
    for (const auto& ia : a)
        for (const auto& ib : b) {
            Irrep ir;
            ir.dim = ia.dim * ib.dim;
            ir.label = ia.label + "*" + ib.label;
            ir.matrices.resize(na * nb);
            for (int x1 = 0; x1 < na; ++x1)
                for (int x2 = 0; x2 < nb; ++x2) {
                    Matrix m(ir.dim, ir.dim);
                    const Matrix& m1 = ia.matrices[x1];
                    const Matrix& m2 = ib.matrices[x2];
                    for (int i = 0; i < ia.dim; ++i)
                        for (int j = 0; j < ia.dim; ++j)
                            m.block(i * ib.dim, j * ib.dim, ib.dim, ib.dim) =
                                m1(i, j) * m2;
                    ir.matrices[x1 * nb + x2] = std::move(m);
                }
            out.push_back(std::move(ir));
        }
    return out;
}

std::vector<Irrep> catalog_irreps(const GroupSpec& spec) {
    using F = GroupSpec::Family;
    switch (spec.family) {
        case F::Cyclic: return cyclic_irreps(spec.n);
        case F::Dihedral: return dihedral_irreps(spec.n);
        case F::Symmetric: return symmetric_irreps(spec.n);
        case F::Quaternion8: return quaternion_irreps();
        case F::Heisenberg: return heisenberg_irreps(spec.n);
        case F::Product: {
            FiniteGroup a = build_group(*spec.left);
            FiniteGroup b = build_group(*spec.right);
            return product_irreps(catalog_irreps(*spec.left), a.order,
                                  catalog_irreps(*spec.right), b.order);
        }
    }
    throw std::logic_error("unreachable");
}

// Generic characters of an abelian group: grow a chain of subgroups, at each
// step extending every character of H to <H, g0> in all m possible ways,
// where m is the least power of g0 landing in H.
std::vector<Irrep> abelian_characters(const FiniteGroup& g) {
    const int n = g.order;
    std::vector<int> members = {g.identity};
    std::vector<char> in_h(n, 0);
    in_h[g.identity] = 1;
    std::vector<std::vector<Complex>> chars = {std::vector<Complex>(n, 0.0)};
    chars[0][g.identity] = 1.0;

    while (static_cast<int>(members.size()) < n) {
        int g0 = -1;
        for (int x = 0; x < n; ++x)
            if (!in_h[x]) {
                g0 = x;
                break;
            }
        std::vector<int> powers = {g.identity};  // g0^0, g0^1, ...
        int m = 0;
        for (int k = 1;; ++k) {
            int pk = g.mul(powers.back(), g0);
            if (in_h[pk]) {
                m = k;
                break;
            }
            powers.push_back(pk);
        }
        const int gm = g.mul(powers.back(), g0);  // g0^m, inside H

        std::vector<int> new_members;
        for (int h : members)
            for (int t = 0; t < m; ++t) new_members.push_back(g.mul(h, powers[t]));

        std::vector<std::vector<Complex>> new_chars;
        for (const auto& chi : chars) {
            const Complex base = chi[gm];
            const double theta = std::arg(base) / double(m);
            for (int j = 0; j < m; ++j) {
                const Complex z =
                    Complex(std::cos(theta), std::sin(theta)) * unit_phase(double(j) / double(m));
                std::vector<Complex> ext(n, 0.0);
                Complex zt = 1.0;
                for (int t = 0; t < m; ++t) {
                    for (int h : members) ext[g.mul(h, powers[t])] = chi[h] * zt;
                    zt *= z;
                }
                new_chars.push_back(std::move(ext));
            }
        }
        members = std::move(new_members);
        for (int x : members) in_h[x] = 1;
        chars = std::move(new_chars);
    }

    std::vector<Irrep> out;
    for (size_t c = 0; c < chars.size(); ++c)
        out.push_back(character_irrep(chars[c], "chi" + std::to_string(c)));
    return out;
}

} // namespace

UnitaryDual build_dual(const FiniteGroup& g) {
    std::vector<Irrep> irreps;
    if (g.spec) {
        irreps = catalog_irreps(*g.spec);
    } else if (g.is_abelian()) {
        irreps = abelian_characters(g);
    } else {
        throw std::invalid_argument(
            "no catalog entry for this group and it is non-abelian; "
            "use extract_irreps_numeric");
    }
    UnitaryDual dual;
    dual.group_order = g.order;
    dual.irreps = std::move(irreps);
    dual.weights.reserve(dual.irreps.size());
    for (const auto& ir : dual.irreps)
        dual.weights.push_back(double(ir.dim) / double(g.order));
    return dual;
}

ValidationReport validate_dual(const FiniteGroup& g, const UnitaryDual& dual) {
    ValidationReport rep;
    const int n = g.order;

    auto add = [&rep](const std::string& name, double residual, double tol,
                      const std::string& detail = "") {
        rep.checks.push_back({name, detail, residual, tol, residual <= tol});
    };

    double r_id = 0;
    for (const auto& ir : dual.irreps)
        r_id = std::max(r_id, (ir.matrices[g.identity] -
                               Matrix::Identity(ir.dim, ir.dim)).cwiseAbs().maxCoeff());
    add("identity-matrix", r_id, 1e-12);

    double r_hom = 0;
    for (const auto& ir : dual.irreps)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                r_hom = std::max(r_hom, (ir.matrices[g.mul(x, y)] -
                                         ir.matrices[x] * ir.matrices[y])
                                            .cwiseAbs()
                                            .maxCoeff());
    add("homomorphism", r_hom, 1e-10);

    double r_uni = 0;
    for (const auto& ir : dual.irreps)
        for (int x = 0; x < n; ++x)
            r_uni = std::max(r_uni, (ir.matrices[x] * ir.matrices[x].adjoint() -
                                     Matrix::Identity(ir.dim, ir.dim))
                                        .cwiseAbs()
                                        .maxCoeff());
    add("unitarity", r_uni, 1e-10);

    double r_irr = 0;
    for (const auto& ir : dual.irreps) {
        double s = 0;
        for (int x = 0; x < n; ++x) s += std::norm(ir.character(x));
        r_irr = std::max(r_irr, std::abs(s / n - 1.0));
    }
    add("irreducibility", r_irr, 1e-9);

    int sum_d2 = 0;
    for (const auto& ir : dual.irreps) sum_d2 += ir.dim * ir.dim;
    add("completeness", std::abs(double(sum_d2 - n)), 0.0,
        "sum d^2 = " + std::to_string(sum_d2) + ", |G| = " + std::to_string(n));

    double r_ineq = 0;
    for (int a = 0; a < dual.size(); ++a)
        for (int b = a + 1; b < dual.size(); ++b) {
            Complex s = 0;
            for (int x = 0; x < n; ++x)
                s += dual.irreps[a].character(x) * std::conj(dual.irreps[b].character(x));
            r_ineq = std::max(r_ineq, std::abs(s) / n);
        }
    add("inequivalence", r_ineq, 1e-9);

    double r_schur = 0;
    for (const auto& ir : dual.irreps) {
        const int d = ir.dim;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    for (int l = 0; l < d; ++l) {
                        Complex s = 0;
                        for (int x = 0; x < n; ++x)
                            s += ir.matrices[x](i, j) * std::conj(ir.matrices[x](k, l));
                        Complex expect =
                            (i == k && j == l) ? Complex(double(n) / d, 0) : Complex(0, 0);
                        r_schur = std::max(r_schur, std::abs(s - expect));
                    }
    }
    add("schur-orthogonality", r_schur, 1e-9);

    double r_w = 0, wsum = 0;
    for (int a = 0; a < dual.size(); ++a) {
        r_w = std::max(r_w, std::abs(dual.weight(a) - double(dual.dim(a)) / n));
        wsum += dual.weight(a) * dual.dim(a);
    }
    add("plancherel-weights", r_w, 1e-12);
    add("weight-mass", std::abs(wsum - 1.0), 1e-12);

    double r_reg = 0;
    for (int x = 0; x < n; ++x) {
        Complex s = 0;
        for (const auto& ir : dual.irreps) s += double(ir.dim) * ir.character(x);
        s /= double(n);
        r_reg = std::max(r_reg, std::abs(s - (x == g.identity ? 1.0 : 0.0)));
    }
    add("regular-character", r_reg, 1e-9);

    return rep;
}

double character_multiset_distance(const FiniteGroup& g, const UnitaryDual& a,
                                   const UnitaryDual& b) {
    const int n = g.order;
    std::vector<bool> used(b.irreps.size(), false);
    double worst = 0;
    for (const auto& ia : a.irreps) {
        double best = 1e300;
        int best_j = -1;
        for (size_t j = 0; j < b.irreps.size(); ++j) {
            if (used[j]) continue;
            double d = 0;
            for (int x = 0; x < n; ++x)
                d = std::max(d, std::abs(ia.character(x) - b.irreps[j].character(x)));
            if (d < best) {
                best = d;
                best_j = static_cast<int>(j);
            }
        }
        if (best_j < 0) return 1e300;
        used[best_j] = true;
        worst = std::max(worst, best);
    }
    if (a.irreps.size() != b.irreps.size()) return 1e300;
    return worst;
}

} // namespace bq
