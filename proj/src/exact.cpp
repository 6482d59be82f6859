#include "selink/exact.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "selink/errors.hpp"

namespace selink {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Careful with INT128_MIN: negate via unsigned.
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

WeightVector WeightVector::from_positional(const std::array<i64, 4>& v) {
    for (i64 x : v)
        if (x < 1) throw usage_error("weights must be positive integers");
    std::array<int, 4> idx{0, 1, 2, 3};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    WeightVector out;
    for (int k = 0; k < 4; ++k) {
        out.pos[k] = idx[k];
        out.w[k] = v[idx[k]];
    }
    if (out.gcd() != 1) throw usage_error("weights must have gcd 1, got " + out.str());
    return out;
}

WeightVector WeightVector::from_sorted(const std::array<i64, 4>& v) {
    for (int k = 0; k + 1 < 4; ++k)
        if (v[k] > v[k + 1]) throw usage_error("weight vector is not sorted ascending");
    return from_positional(v);
}

std::array<i64, 4> WeightVector::positional() const {
    std::array<i64, 4> out{};
    for (int k = 0; k < 4; ++k) out[pos[k]] = w[k];
    return out;
}

i64 WeightVector::gcd() const {
    return gcd_vec(std::span<const i64>(w.data(), w.size()));
}

std::string WeightVector::str() const {
    std::string s = "(";
    for (int k = 0; k < 4; ++k) {
        if (k) s += ",";
        s += std::to_string(w[k]);
    }
    return s + ")";
}

i64 Monomial::degree(const std::array<i64, 4>& w) const {
    i128 acc = 0;
    for (int k = 0; k < 4; ++k) acc = checked_add(acc, checked_mul(e[k], w[k]));
    return to_i64(acc, "monomial degree");
}

std::string Monomial::str() const {
    std::string s;
    for (int k = 0; k < 4; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(k);
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s.empty() ? "1" : s;
}

i64 gcd_vec(std::span<const i64> values) {
    if (values.empty()) throw usage_error("gcd of an empty list");
    i64 g = 0;
    for (i64 v : values) {
        if (v <= 0) throw usage_error("gcd_vec expects positive integers");
        g = std::gcd(g, v);
    }
    return g;
}

namespace {

i128 det3(i128 a, i128 b, i128 c, i128 d, i128 e, i128 f, i128 g, i128 h, i128 i) {
    i128 t1 = checked_mul(a, checked_sub(checked_mul(e, i), checked_mul(f, h)));
    i128 t2 = checked_mul(b, checked_sub(checked_mul(d, i), checked_mul(f, g)));
    i128 t3 = checked_mul(c, checked_sub(checked_mul(d, h), checked_mul(e, g)));
    return checked_add(checked_sub(t1, t2), t3);
}

i128 det4_cols(const std::array<std::array<i128, 4>, 4>& m) {
    i128 acc = 0;
    for (int col = 0; col < 4; ++col) {
        std::array<i128, 9> sub{};
        int n = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != col) sub[n++] = m[r][c];
        i128 minor =
            det3(sub[0], sub[1], sub[2], sub[3], sub[4], sub[5], sub[6], sub[7], sub[8]);
        i128 term = checked_mul(m[0][col], minor);
        acc = (col % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
    }
    return acc;
}

}  // namespace

i128 det4(const ExponentMatrix& A) {
    std::array<std::array<i128, 4>, 4> m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = A.a[r][c];
    return det4_cols(m);
}

ExpSolution solve_exponent_system(const ExponentMatrix& A) {
    i128 D = det4(A);
    if (D == 0) throw usage_error("singular exponent matrix");

    // Cramer: x_i = det(A with column i replaced by ones) / det(A).
    std::array<i128, 4> N{};
    for (int i = 0; i < 4; ++i) {
        std::array<std::array<i128, 4>, 4> m{};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] = (c == i) ? i128(1) : i128(A.a[r][c]);
        N[i] = det4_cols(m);
        if (N[i] == 0 || (N[i] > 0) != (D > 0))
            throw usage_error("exponent system has a non-positive solution entry");
    }

    // Clear denominators of x_i = p_i/q_i, then divide by the gcd.
    std::array<i128, 4> p{}, q{};
    for (int i = 0; i < 4; ++i) {
        i128 g = igcd(N[i], D);
        p[i] = iabs(N[i]) / g;
        q[i] = iabs(D) / g;
    }
    i128 L = 1;
    for (int i = 0; i < 4; ++i) L = ilcm(L, q[i]);
    std::array<i128, 4> v{};
    i128 g = 0;
    for (int i = 0; i < 4; ++i) {
        v[i] = checked_mul(p[i], L / q[i]);
        g = igcd(g, v[i]);
    }

    ExpSolution out;
    for (int i = 0; i < 4; ++i) out.w_positional[i] = to_i64(v[i] / g, "solved weight");
    i128 d = 0;
    for (int j = 0; j < 4; ++j) d = checked_add(d, checked_mul(A.a[0][j], out.w_positional[j]));
    out.d = to_i64(d, "solved degree");

    // Exact residual check on every row.
    for (int r = 0; r < 4; ++r) {
        i128 acc = 0;
        for (int j = 0; j < 4; ++j)
            acc = checked_add(acc, checked_mul(A.a[r][j], out.w_positional[j]));
        if (acc != i128(out.d))
            throw inconsistency_error("exponent system residual is nonzero");
    }
    return out;
}

namespace {

void enumerate_rec(std::span<const i64> w, i64 remaining, size_t k, std::vector<i64>& cur,
                   std::vector<std::vector<i64>>& out) {
    if (k + 1 == w.size()) {
        if (remaining % w[k] == 0) {
            cur.push_back(remaining / w[k]);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (i64 b = 0; b * w[k] <= remaining; ++b) {
        cur.push_back(b);
        enumerate_rec(w, remaining - b * w[k], k + 1, cur, out);
        cur.pop_back();
    }
}

bool exists_rec(std::span<const i64> w, i64 remaining, size_t k) {
    if (k + 1 == w.size()) return remaining % w[k] == 0;
    if (k + 2 == w.size()) return has_pair_solution(w[k], w[k + 1], remaining);
    for (i64 b = 0; b * w[k] <= remaining; ++b)
        if (exists_rec(w, remaining - b * w[k], k + 1)) return true;
    return false;
}

i64 mod_inverse(i64 a, i64 m) {
    // m >= 1, gcd(a, m) = 1
    i64 t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        i64 qq = r / newr;
        t = std::exchange(newt, t - qq * newt);
        r = std::exchange(newr, r - qq * newr);
    }
    return t < 0 ? t + m : t;
}

}  // namespace

std::vector<std::vector<i64>> nonneg_solutions(std::span<const i64> weights, i64 d) {
    if (weights.empty() || weights.size() > 4)
        throw usage_error("nonneg_solutions expects 1 to 4 weights");
    for (i64 w : weights)
        if (w < 1) throw usage_error("weights must be positive");
    if (d < 0) return {};
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur;
    enumerate_rec(weights, d, 0, cur, out);
    return out;
}

bool has_nonneg_solution(std::span<const i64> weights, i64 d) {
    if (weights.empty() || weights.size() > 4)
        throw usage_error("has_nonneg_solution expects 1 to 4 weights");
    if (d < 0) return false;
    if (weights.size() == 1) return d % weights[0] == 0;
    if (weights.size() == 2) return has_pair_solution(weights[0], weights[1], d);
    return exists_rec(weights, d, 0);
}

bool has_pair_solution(i64 wa, i64 wb, i64 d) {
    if (wa < 1 || wb < 1) throw usage_error("weights must be positive");
    if (d < 0) return false;
    i64 g = std::gcd(wa, wb);
    if (d % g != 0) return false;
    i64 A = wa / g, B = wb / g, DD = d / g;
    if (B == 1) return true;  // b = 0, c = DD
    i64 b0 = (i128(DD % B) * mod_inverse(A % B, B)) % B;
    return i128(b0) * A <= i128(DD);
}

}  // namespace selink
