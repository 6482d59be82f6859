// Exact integer core: weight vectors, monomials, the 4x4 exponent-system
// solve, and Diophantine enumeration of degree-d monomials.
#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "selink/ints.hpp"

namespace selink {

// Weight vector canonicalized to ascending order. pos[k] records where the
// k-th sorted entry sat in the original (positional) vector, so normal-form
// and sorted views interconvert losslessly.
struct WeightVector {
    std::array<i64, 4> w{};    // ascending
    std::array<int, 4> pos{};  // pos[k] = original index of w[k]

    static WeightVector from_positional(const std::array<i64, 4>& v);
    static WeightVector from_sorted(const std::array<i64, 4>& v);

    std::array<i64, 4> positional() const;
    i64 sum() const { return w[0] + w[1] + w[2] + w[3]; }
    i64 gcd() const;
    bool operator==(const WeightVector& o) const { return w == o.w; }
    std::string str() const;  // "(w0,w1,w2,w3)" sorted
};

// Exponent tuple b0..b3; degree under weights is sum(b_i * w_i).
struct Monomial {
    std::array<i64, 4> e{};

    i64 degree(const std::array<i64, 4>& w) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }
    std::string str() const;  // "z0^2*z1"
};

struct ExponentMatrix {
    std::array<std::array<i64, 4>, 4> a{};
};

struct ExpSolution {
    std::array<i64, 4> w_positional{};
    i64 d = 0;

    WeightVector weights() const { return WeightVector::from_positional(w_positional); }
};

// gcd of a non-empty list of positive integers.
i64 gcd_vec(std::span<const i64> values);

i128 det4(const ExponentMatrix& A);

// Solves A*w = d*(1,1,1,1) for the unique primitive (gcd(w)=1) positive
// integer solution. Throws usage_error on a singular system or when some
// solution entry fails to be positive.
ExpSolution solve_exponent_system(const ExponentMatrix& A);

// All non-negative integer tuples b (arity = weights.size(), 1..4) with
// sum(b_i*w_i) = d, in lexicographic order.
std::vector<std::vector<i64>> nonneg_solutions(std::span<const i64> weights, i64 d);

// Existence-only queries (early exit; pair case is closed-form).
bool has_nonneg_solution(std::span<const i64> weights, i64 d);
bool has_pair_solution(i64 wa, i64 wb, i64 d);

}  // namespace selink
