// Diffeomorphism type of the link as a Smale manifold: branch divisors and
// ramification, orbifold curve genus, second Betti number, torsion, and the
// canonical connected-sum name.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selink/candidate.hpp"

namespace selink {

struct BranchDivisor {
    int sorted_coord = -1;  // index into the sorted weight vector
    i64 weight = 0;         // weight of that coordinate
    i64 m = 1;              // ramification index = gcd of the other weights
    std::array<i64, 3> curve_w{};  // other weights / m, ascending
    i64 curve_d = 0;               // d / m
    i64 genus = 0;
};

// Branch divisors D_i with m_i = gcd(w_j : j != i) > 1, with reduced curve
// data and genus. Requires gcd(w) = 1; m_i | d is validated.
std::vector<BranchDivisor> branch_divisors(const LinkCandidate& c);

// Genus of a quasi-smooth curve of degree d in P(w0',w1',w2'):
//   g = (d^2/(w0 w1 w2) - d*sum gcd(wi,wj)/(wi wj) + sum gcd(d,wi)/wi - 1)/2.
// A non-integer or negative result signals invalid curve data (hard error).
i64 curve_genus(const std::array<i64, 3>& w, i64 d);

// Sufficient rationality test: |w'| - d' > 0 forces genus 0.
bool rationality_shortcut(const std::array<i64, 3>& w, i64 d);

// Second Betti number of the link via the divisor expansion over coordinate
// subsets of the reduced fractions d/w_i. Requires a quasi-smooth pair.
i64 betti2(const WeightVector& w, i64 d);

struct TorsionPart {
    i64 m = 1;      // ramification index
    i64 genus = 0;  // genus of the branch curve; contributes (Z_m)^(2g)
};

// Non-rational branch divisors paired with their ramification indices; the
// torsion subgroup is the direct sum of (Z_m)^(2g) over the list.
std::vector<TorsionPart> torsion_parts(const LinkCandidate& c);

// Invariant factors (ascending, each dividing the next) of the finite
// abelian group determined by the torsion parts.
std::vector<i64> invariant_factors(const std::vector<TorsionPart>& parts);

// Membership in the allowed torsion groups for positive Sasakian 5-manifolds:
// trivial, Z_m^2, Z_2^(2n) with n > 1, Z_3^4, Z_3^6, Z_3^8, Z_4^4, Z_5^4.
bool kollar_allowed(const std::vector<TorsionPart>& parts);

struct SmaleManifold {
    i64 k = 0;  // number of S^2 x S^3 summands
    // (m, copies) with distinct ascending m, each m dividing the next.
    std::vector<std::pair<i64, i64>> factors;

    std::string name() const;  // "S5", "M∞", "3M∞#2M3", ...
    bool operator==(const SmaleManifold& o) const { return k == o.k && factors == o.factors; }
};

// Canonical name from b2 and torsion. Torsion must decompose into invariant
// factors of even multiplicity (pairs), else inconsistency_error.
SmaleManifold smale_name(i64 b2, const std::vector<TorsionPart>& parts);

// Closed-form branch-divisor solve for the type X normal form
// z0^a0 + z1^a1 z2 + z2^a2 z3 + z1 z3^a3: the divisor z0 = 0 is a curve of
// degree d' in P(w') with q*d' = 1 + a1*a2*a3 and genus (q-1)/2.
struct TypeXSolution {
    std::array<i64, 3> a{};
    i64 q = 1;
    i64 dprime = 0;
    std::array<i64, 3> wprime{};
    i64 genus = 0;
};

std::optional<TypeXSolution> typeX_branch_solve(i64 a1, i64 a2, i64 a3);

}  // namespace selink
