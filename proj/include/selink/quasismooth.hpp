// Quasi-smoothness of the generic degree-d hypersurface in P(w0..w3). All
// checks are against the full linear system |O(d)|, not a particular sparse
// polynomial.
//
// The verdict follows the coordinate-stratum analysis: for every stratum the
// generic member must either restrict to a nonzero system or have a
// non-vanishing transverse differential there. Concretely:
//   - every coordinate axis passes condition 1 (z_i^m or z_i^m z_j of degree d),
//   - every pair stratum has a monomial on the pair, or auxiliary monomials
//     z_i^c z_j^c' z_k per the chosen reading (see strict_condition3),
//   - every triple stratum has a monomial on the triple, or the transverse
//     derivative there is a single monomial.
// The pairwise gcd test (condition 2) is reported for diagnostics: it flags
// ambient singular edges lying inside the hypersurface, which stay rational
// and never feed torsion, and it is not necessary for quasi-smoothness.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "selink/exact.hpp"

namespace selink {

struct QuasiSmoothOptions {
    // Pair-stratum fallback: with the default (permissive) reading a single
    // auxiliary monomial z_i^c z_j^c' z_k with {k} != {i,j} suffices; the
    // strict reading demands monomials for two distinct auxiliary variables
    // k != l.
    bool strict_condition3 = false;
};

struct QuasiSmoothReport {
    bool smooth = false;
    std::array<bool, 4> cond1{};
    bool cond2 = false;   // diagnostic only (see header comment)
    bool cond3 = false;   // pair strata
    bool triples = false; // triple strata
    std::vector<std::string> witnesses;  // one monomial (or pair) per satisfied clause
    std::string failure;                 // first failing clause, empty when smooth
};

// Per-coordinate: exists m >= 1 with m*w_i = d, or some j (j = i allowed)
// with m*w_i + w_j = d.
std::array<bool, 4> check_condition1(const WeightVector& w, i64 d);

// For every pair with gcd(w_i, w_j) > 1 there is a monomial z_i^b z_j^c of
// degree d. Diagnostic: detects singular ambient edges inside the variety.
bool check_condition2(const WeightVector& w, i64 d);

// For every pair: a pure pair monomial, or auxiliary monomials per options.
bool check_condition3(const WeightVector& w, i64 d, const QuasiSmoothOptions& opts = {});

QuasiSmoothReport is_quasismooth(const WeightVector& w, i64 d,
                                 const QuasiSmoothOptions& opts = {});

}  // namespace selink
