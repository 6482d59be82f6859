#include "selink/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "selink/errors.hpp"
#include "selink/rational.hpp"

namespace selink {

std::vector<BranchDivisor> branch_divisors(const LinkCandidate& c) {
    const auto& w = c.weights.w;
    const i64 d = c.degree;
    std::vector<BranchDivisor> out;
    for (int i = 0; i < 4; ++i) {
        std::array<i64, 3> others{};
        int n = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) others[n++] = w[j];
        i64 m = std::gcd(std::gcd(others[0], others[1]), others[2]);
        if (m <= 1) continue;
        if (d % m != 0)
            throw inconsistency_error("ramification index " + std::to_string(m) +
                                      " of coordinate " + std::to_string(i) +
                                      " does not divide the degree " + std::to_string(d));
        // A monomial z_j^a z_i of degree d would force m | w_i, contradicting
        // gcd(w) = 1; its presence signals corrupt input.
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            i64 rem = d - w[i];
            if (rem >= w[j] && rem % w[j] == 0)
                throw inconsistency_error("divisor z" + std::to_string(i) +
                                          " has ramification " + std::to_string(m) +
                                          " yet a tail monomial z" + std::to_string(j) + "^" +
                                          std::to_string(rem / w[j]) + "*z" + std::to_string(i) +
                                          " exists");
        }
        BranchDivisor bd;
        bd.sorted_coord = i;
        bd.weight = w[i];
        bd.m = m;
        for (int k = 0; k < 3; ++k) bd.curve_w[k] = others[k] / m;
        std::sort(bd.curve_w.begin(), bd.curve_w.end());
        bd.curve_d = d / m;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                i64 g = std::gcd(bd.curve_w[p], bd.curve_w[q]);
                if (g > 1 && bd.curve_d % g != 0)
                    throw inconsistency_error(
                        "reduced curve of divisor z" + std::to_string(i) + " in P(" +
                        std::to_string(bd.curve_w[0]) + "," + std::to_string(bd.curve_w[1]) +
                        "," + std::to_string(bd.curve_w[2]) + ") of degree " +
                        std::to_string(bd.curve_d) + " is not well-formed: pair gcd " +
                        std::to_string(g) + " does not divide the degree");
            }
        bd.genus = curve_genus(bd.curve_w, bd.curve_d);
        out.push_back(bd);
    }
    return out;
}

i64 curve_genus(const std::array<i64, 3>& w, i64 d) {
    for (i64 x : w)
        if (x < 1) throw usage_error("curve weights must be positive");
    if (d < 1) throw usage_error("curve degree must be positive");
    Rat g(0);
    g = g + Rat(checked_mul(d, d), checked_mul(checked_mul(w[0], w[1]), w[2]));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            g = g - Rat(checked_mul(d, std::gcd(w[i], w[j])), checked_mul(w[i], w[j]));
    for (int i = 0; i < 3; ++i) g = g + Rat(std::gcd(d, w[i]), w[i]);
    g = (g - Rat(1)) / Rat(2);
    if (!g.is_integer() || g.num < 0)
        throw inconsistency_error("genus of degree-" + std::to_string(d) + " curve in P(" +
                                  std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                                  std::to_string(w[2]) + ") is not a non-negative integer: " +
                                  g.str());
    return g.to_i64("genus");
}

bool rationality_shortcut(const std::array<i64, 3>& w, i64 d) {
    return w[0] + w[1] + w[2] - d > 0;
}

i64 betti2(const WeightVector& w, i64 d) {
    if (d < 1) throw usage_error("degree must be positive");
    // Reduced fractions d/w_i = u_i/v_i.
    std::array<i64, 4> u{}, v{};
    for (int i = 0; i < 4; ++i) {
        i64 g = std::gcd(d, w.w[i]);
        u[i] = d / g;
        v[i] = w.w[i] / g;
    }
    Rat acc(0);
    for (int mask = 0; mask < 16; ++mask) {
        i128 prod_u = 1, lcm_u = 1, prod_v = 1;
        int size = 0;
        for (int i = 0; i < 4; ++i) {
            if (!(mask & (1 << i))) continue;
            ++size;
            prod_u = checked_mul(prod_u, u[i]);
            lcm_u = ilcm(lcm_u, u[i]);
            prod_v = checked_mul(prod_v, v[i]);
        }
        Rat term(prod_u, checked_mul(lcm_u, prod_v));
        acc = ((4 - size) % 2 == 0) ? acc + term : acc - term;
    }
    if (!acc.is_integer() || acc.num < 0)
        throw inconsistency_error("b2 of L" + w.str() + ";" + std::to_string(d) +
                                  " is not a non-negative integer: " + acc.str());
    return acc.to_i64("b2");
}

std::vector<TorsionPart> torsion_parts(const LinkCandidate& c) {
    std::vector<TorsionPart> out;
    for (const BranchDivisor& bd : branch_divisors(c))
        if (bd.genus > 0) out.push_back({bd.m, bd.genus});
    return out;
}

std::vector<i64> invariant_factors(const std::vector<TorsionPart>& parts) {
    // Primary decomposition: per prime, the multiset of exponents, each
    // ramification index contributing 2*genus copies.
    std::map<i64, std::vector<i64>> primary;  // prime -> exponents
    for (const TorsionPart& t : parts) {
        if (t.m < 2 || t.genus < 1)
            throw usage_error("torsion parts require m >= 2 and genus >= 1");
        i64 m = t.m;
        for (i64 p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            i64 e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            auto& v = primary[p];
            v.insert(v.end(), size_t(2 * t.genus), e);
        }
        if (m > 1) {
            auto& v = primary[m];
            v.insert(v.end(), size_t(2 * t.genus), 1);
        }
    }
    size_t count = 0;
    for (auto& [p, v] : primary) {
        std::sort(v.rbegin(), v.rend());
        count = std::max(count, v.size());
    }
    std::vector<i64> factors(count, 1);
    for (auto& [p, v] : primary)
        for (size_t j = 0; j < v.size(); ++j) {
            i128 f = factors[j];
            for (i64 e = 0; e < v[j]; ++e) f = checked_mul(f, p);
            factors[j] = to_i64(f, "invariant factor");
        }
    std::reverse(factors.begin(), factors.end());  // ascending, each divides the next
    return factors;
}

bool kollar_allowed(const std::vector<TorsionPart>& parts) {
    std::vector<i64> f = invariant_factors(parts);
    if (f.empty()) return true;
    for (i64 x : f)
        if (x != f[0]) return false;  // mixed invariant factors never appear in the list
    const i64 m = f[0];
    const size_t n = f.size();
    if (n == 2) return true;                                   // Z_m^2, any m
    if (m == 2) return n % 2 == 0;                             // Z_2^(2n)
    if (m == 3) return n == 4 || n == 6 || n == 8;             // Z_3^4, Z_3^6, Z_3^8
    if (m == 4 || m == 5) return n == 4;                       // Z_4^4, Z_5^4
    return false;
}

std::string SmaleManifold::name() const {
    if (k == 0 && factors.empty()) return "S5";
    std::string s;
    if (k == 1)
        s = "M∞";
    else if (k > 1)
        s = std::to_string(k) + "M∞";
    for (const auto& [m, copies] : factors) {
        if (!s.empty()) s += "#";
        if (copies > 1) s += std::to_string(copies);
        s += "M" + std::to_string(m);
    }
    return s;
}

SmaleManifold smale_name(i64 b2, const std::vector<TorsionPart>& parts) {
    if (b2 < 0) throw usage_error("b2 must be non-negative");
    std::vector<i64> f = invariant_factors(parts);
    if (f.size() % 2 != 0)
        throw inconsistency_error("torsion has an odd number of invariant factors");
    SmaleManifold m;
    m.k = b2;
    for (size_t j = 0; j < f.size(); j += 2) {
        if (f[j] != f[j + 1])
            throw inconsistency_error("invariant factors do not pair up: " +
                                      std::to_string(f[j]) + " vs " + std::to_string(f[j + 1]));
        if (!m.factors.empty() && m.factors.back().first == f[j])
            m.factors.back().second += 1;
        else
            m.factors.push_back({f[j], 1});
    }
    return m;
}

std::optional<TypeXSolution> typeX_branch_solve(i64 a1, i64 a2, i64 a3) {
    if (a1 < 2 || a2 < 2 || a3 < 2) throw usage_error("type X exponents must be >= 2");
    const i128 P = checked_add(checked_mul(checked_mul(a1, a2), a3), 1);
    const std::array<i128, 3> c = {
        checked_add(checked_sub(1, a3), checked_mul(a2, a3)),
        checked_add(checked_sub(1, a1), checked_mul(a1, a3)),
        checked_add(checked_sub(1, a2), checked_mul(a1, a2)),
    };
    i128 G = igcd(igcd(c[0], c[1]), c[2]);

    // Odd divisors q > 1 of gcd(c), largest first.
    std::vector<i64> divisors;
    for (i64 q = 1; i128(q) * q <= G; ++q) {
        if (G % q) continue;
        divisors.push_back(q);
        if (i128(q) != G / q) divisors.push_back(to_i64(G / q, "divisor"));
    }
    std::sort(divisors.rbegin(), divisors.rend());

    for (i64 q : divisors) {
        if (q <= 1 || q % 2 == 0) continue;
        if (P % q != 0) continue;
        TypeXSolution sol;
        sol.a = {a1, a2, a3};
        sol.q = q;
        sol.dprime = to_i64(P / q, "d'");
        for (int i = 0; i < 3; ++i) sol.wprime[i] = to_i64(c[i] / q, "w'");
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            if (std::gcd(sol.wprime[i], sol.dprime) != 1) ok = false;
            for (int j = i + 1; j < 3 && ok; ++j)
                if (std::gcd(sol.wprime[i], sol.wprime[j]) != 1) ok = false;
        }
        if (!ok) continue;
        sol.genus = (q - 1) / 2;
        return sol;
    }
    return std::nullopt;
}

}  // namespace selink
