#include "bq/group.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "catalog.hpp"

namespace bq {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int spec_order(const GroupSpec& s) {
    using F = GroupSpec::Family;
    switch (s.family) {
        case F::Cyclic: return s.n;
        case F::Dihedral: return 2 * s.n;
        case F::Symmetric: {
            int f = 1;
            for (int i = 2; i <= s.n; ++i) f *= i;
            return f;
        }
        case F::Quaternion8: return 8;
        case F::Heisenberg: return s.n * s.n * s.n;
        case F::Product: return spec_order(*s.left) * spec_order(*s.right);
    }
    return 0;
}

void finish(FiniteGroup& g) {
    g.inv_table.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (g.mul(x, y) == g.identity) g.inv_table[x] = y;
}

FiniteGroup from_table(std::string name, int order,
                       const std::function<int(int, int)>& mul) {
    FiniteGroup g;
    g.name = std::move(name);
    g.order = order;
    g.mul_table.resize(order * order);
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            g.mul_table[x * order + y] = mul(x, y);
    finish(g);
    return g;
}

} // namespace

std::string GroupSpec::str() const {
    using F = Family;
    switch (family) {
        case F::Cyclic: return "cyclic(" + std::to_string(n) + ")";
        case F::Dihedral: return "dihedral(" + std::to_string(n) + ")";
        case F::Symmetric: return "symmetric(" + std::to_string(n) + ")";
        case F::Quaternion8: return "quaternion8";
        case F::Heisenberg: return "heisenberg(" + std::to_string(n) + ")";
        case F::Product: return "product(" + left->str() + "," + right->str() + ")";
    }
    return "?";
}

namespace {

GroupSpec parse_spec_at(const std::string& s, size_t& pos);

std::string parse_ident(const std::string& s, size_t& pos) {
    std::string id;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) != 0))
        id += s[pos++];
    return id;
}

int parse_int_arg(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '(')
        throw std::invalid_argument("expected '(' in group spec");
    ++pos;
    std::string num;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) != 0)
        num += s[pos++];
    if (num.empty() || pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("expected integer argument in group spec");
    ++pos;
    return std::stoi(num);
}

GroupSpec parse_spec_at(const std::string& s, size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    std::string id = parse_ident(s, pos);
    GroupSpec spec;
    using F = GroupSpec::Family;
    if (id == "cyclic") {
        spec.family = F::Cyclic;
        spec.n = parse_int_arg(s, pos);
    } else if (id == "dihedral") {
        spec.family = F::Dihedral;
        spec.n = parse_int_arg(s, pos);
    } else if (id == "symmetric") {
        spec.family = F::Symmetric;
        spec.n = parse_int_arg(s, pos);
    } else if (id == "quaternion8") {
        spec.family = F::Quaternion8;
    } else if (id == "heisenberg") {
        spec.family = F::Heisenberg;
        spec.n = parse_int_arg(s, pos);
    } else if (id == "product") {
        spec.family = F::Product;
        if (pos >= s.size() || s[pos] != '(')
            throw std::invalid_argument("expected '(' after product");
        ++pos;
        spec.left = std::make_shared<GroupSpec>(parse_spec_at(s, pos));
        while (pos < s.size() && s[pos] == ' ') ++pos;
        if (pos >= s.size() || s[pos] != ',')
            throw std::invalid_argument("expected ',' in product spec");
        ++pos;
        spec.right = std::make_shared<GroupSpec>(parse_spec_at(s, pos));
        while (pos < s.size() && s[pos] == ' ') ++pos;
        if (pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("expected ')' in product spec");
        ++pos;
    } else {
        throw std::invalid_argument("unknown group family: '" + id + "'");
    }
    return spec;
}

} // namespace

GroupSpec parse_group_spec(const std::string& text) {
    size_t pos = 0;
    GroupSpec spec = parse_spec_at(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size())
        throw std::invalid_argument("trailing characters in group spec: '" + text + "'");
    return spec;
}

bool FiniteGroup::is_abelian() const {
    for (int x = 0; x < order; ++x)
        for (int y = x + 1; y < order; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

int order_bound() {
    if (const char* env = std::getenv("BQ_ORDER_BOUND")) {
        int b = std::atoi(env);
        if (b > 0) return b;
    }
    return 64;
}

FiniteGroup build_group(const GroupSpec& spec) {
    using F = GroupSpec::Family;
    const int order = spec_order(spec);
    if (order > order_bound())
        throw std::invalid_argument("group order " + std::to_string(order) +
                                    " exceeds bound " + std::to_string(order_bound()));
    FiniteGroup g;
    switch (spec.family) {
        case F::Cyclic: {
            if (spec.n < 1) throw std::invalid_argument("cyclic(n) needs n >= 1");
            const int n = spec.n;
            g = from_table("Z" + std::to_string(n), n,
                           [n](int a, int b) { return (a + b) % n; });
            break;
        }
        case F::Dihedral: {
            if (spec.n < 3) throw std::invalid_argument("dihedral(n) needs n >= 3");
            const int n = spec.n;
            g = from_table("D" + std::to_string(n), 2 * n,
                           [n](int a, int b) { return detail::dihedral_mul(n, a, b); });
            break;
        }
        case F::Symmetric: {
            if (spec.n < 1 || spec.n > 4)
                throw std::invalid_argument("symmetric(n) supported for n <= 4");
            auto perms = detail::perms_lex(spec.n);
            g = from_table("S" + std::to_string(spec.n), order, [&](int a, int b) {
                return detail::perm_index(perms, detail::perm_compose(perms[a], perms[b]));
            });
            break;
        }
        case F::Quaternion8:
            g = from_table("Q8", 8, detail::quat_mul);
            break;
        case F::Heisenberg: {
            if (!is_prime(spec.n))
                throw std::invalid_argument("heisenberg(p) needs prime p");
            const int p = spec.n;
            g = from_table("H(Z" + std::to_string(p) + ")", order,
                           [p](int a, int b) { return detail::heis_mul(p, a, b); });
            break;
        }
        case F::Product: {
            FiniteGroup a = build_group(*spec.left);
            FiniteGroup b = build_group(*spec.right);
            g = direct_product(a, b);
            break;
        }
    }
    g.spec = spec;
    return g;
}

ValidationReport validate_group(const FiniteGroup& g) {
    ValidationReport rep;
    const int n = g.order;

    CheckRecord range{"table-range", "", 0, 0, true};
    for (int i = 0; i < n * n && range.pass; ++i)
        if (g.mul_table[i] < 0 || g.mul_table[i] >= n) {
            range.pass = false;
            range.detail = "entry " + std::to_string(i) + " out of range";
        }
    rep.checks.push_back(range);
    if (!range.pass) return rep;

    CheckRecord ident{"identity", "", 0, 0, true};
    for (int x = 0; x < n && ident.pass; ++x)
        if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x) {
            ident.pass = false;
            ident.detail = "x=" + std::to_string(x);
        }
    rep.checks.push_back(ident);

    CheckRecord assoc{"associativity", "", 0, 0, true};
    for (int x = 0; x < n && assoc.pass; ++x)
        for (int y = 0; y < n && assoc.pass; ++y)
            for (int z = 0; z < n; ++z)
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) {
                    assoc.pass = false;
                    assoc.detail = "(" + std::to_string(x) + "," + std::to_string(y) +
                                   "," + std::to_string(z) + ")";
                    break;
                }
    rep.checks.push_back(assoc);

    CheckRecord invs{"inverses", "", 0, 0, true};
    for (int x = 0; x < n && invs.pass; ++x) {
        int ix = g.inv(x);
        if (ix < 0 || ix >= n || g.mul(x, ix) != g.identity ||
            g.mul(ix, x) != g.identity) {
            invs.pass = false;
            invs.detail = "x=" + std::to_string(x);
        }
    }
    rep.checks.push_back(invs);

    CheckRecord latin{"latin-square", "", 0, 0, true};
    for (int x = 0; x < n && latin.pass; ++x) {
        std::vector<bool> row(n, false), col(n, false);
        for (int y = 0; y < n; ++y) {
            row[g.mul(x, y)] = true;
            col[g.mul(y, x)] = true;
        }
        for (int y = 0; y < n; ++y)
            if (!row[y] || !col[y]) {
                latin.pass = false;
                latin.detail = "row/col " + std::to_string(x);
                break;
            }
    }
    rep.checks.push_back(latin);
    return rep;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order * b.order > order_bound())
        throw std::invalid_argument("product order exceeds bound");
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    g.mul_table.resize(g.order * g.order);
    const int nb = b.order;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            int x1 = x / nb, x2 = x % nb, y1 = y / nb, y2 = y % nb;
            g.mul_table[x * g.order + y] = a.mul(x1, y1) * nb + b.mul(x2, y2);
        }
    finish(g);
    if (a.spec && b.spec) {
        GroupSpec s;
        s.family = GroupSpec::Family::Product;
        s.left = std::make_shared<GroupSpec>(*a.spec);
        s.right = std::make_shared<GroupSpec>(*b.spec);
        g.spec = s;
    }
    return g;
}

} // namespace bq
