#pragma once

// Internal element encodings for the catalog families. Shared between the
// Cayley-table builders and the irrep catalog so the two cannot drift apart.

#include <algorithm>
#include <vector>

namespace bq::detail {

// Permutations of {0..n-1} in lexicographic order; identity comes first.
inline std::vector<std::vector<int>> perms_lex(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int perm_index(const std::vector<std::vector<int>>& perms,
                      const std::vector<int>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == p) return static_cast<int>(i);
    return -1;
}

// Composition convention (s*t)(i) = s(t(i)).
inline std::vector<int> perm_compose(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
    return r;
}

// Dihedral group of order 2n: index k in [0,n) is r^k, index n+k is s*r^k,
// with r^n = e, s^2 = e, s r s = r^{-1}.
inline int dihedral_mul(int n, int a, int b) {
    const bool fa = a >= n, fb = b >= n;
    const int ka = fa ? a - n : a, kb = fb ? b - n : b;
    // (s^fa r^ka)(s^fb r^kb) = s^(fa^fb) r^(kb + (fb ? -ka : ka))
    int k = fb ? (kb - ka) : (ka + kb);
    k = ((k % n) + n) % n;
    return (fa != fb ? n : 0) + k;
}

// Quaternion group: indices 0..7 are {1, -1, i, -i, j, -j, k, -k}.
// Element = sign * unit with unit in {1,i,j,k}.
struct QuatElem { int sign; int unit; };  // unit: 0=1, 1=i, 2=j, 3=k

inline QuatElem quat_decode(int idx) { return {idx % 2 == 0 ? 1 : -1, idx / 2}; }
inline int quat_encode(QuatElem e) { return e.unit * 2 + (e.sign > 0 ? 0 : 1); }

inline int quat_mul(int a, int b) {
    static const int unit_prod[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    QuatElem x = quat_decode(a), y = quat_decode(b);
    return quat_encode({x.sign * y.sign * unit_sign[x.unit][y.unit],
                        unit_prod[x.unit][y.unit]});
}

// Heisenberg group over Z_p: element (a,b,c) is the upper-triangular matrix
// [[1,a,c],[0,1,b],[0,0,1]]; index = a*p^2 + b*p + c.
struct HeisElem { int a, b, c; };

inline HeisElem heis_decode(int p, int idx) {
    return {idx / (p * p), (idx / p) % p, idx % p};
}
inline int heis_encode(int p, HeisElem e) { return e.a * p * p + e.b * p + e.c; }

inline int heis_mul(int p, int x, int y) {
    HeisElem u = heis_decode(p, x), v = heis_decode(p, y);
    return heis_encode(p, {(u.a + v.a) % p, (u.b + v.b) % p,
                           (u.c + v.c + u.a * v.b) % p});
}

} // namespace bq::detail
