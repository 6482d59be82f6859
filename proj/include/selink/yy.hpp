// Catalog of the 19 Yau-Yu normal forms for weighted homogeneous polynomials
// in four variables, weight derivation for the ten standard types, closed-form
// positivity indices, and realization of unordered exponent multisets as
// positional normal forms.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selink/candidate.hpp"
#include "selink/rational.hpp"
#include "selink/yy_type.hpp"

namespace selink {

struct YYCatalogEntry {
    YYType id;
    const char* name;
    bool standard;
    int arity;                  // exponents appearing in the pattern
    const char* pattern;        // monomial template, exponents a,b,c,d[,p,q,r,s]
    const char* index_formula;  // |w|/d as a function of a,b,c,d
};

std::span<const YYCatalogEntry> yy_catalog();
const YYCatalogEntry& yy_entry(YYType t);

// Exponent matrix of a standard type's normal form (rows = monomials).
ExponentMatrix yy_exponent_matrix(YYType t, const std::array<i64, 4>& a);

// |w|/d via the closed-form catalog formula (independent of the linear
// solve). Defined for every type; only exponents a..d enter.
Rat positivity_index(YYType t, const std::array<i64, 4>& a);

// Solves the type's exponent system and returns the candidate with generic
// support attached. Standard types only.
LinkCandidate weights_for(YYType t, const std::array<i64, 4>& a);

// Result of realizing an unordered exponent multiset against a target
// (sorted weights, degree).
struct Realization {
    bool realized = false;
    std::array<i64, 4> positional{};  // exponents by template slot
    bool perturbed = false;
    int perturbed_var = -1;  // template variable whose pure power was replaced
    int perturbed_aux = -1;  // variable appearing linearly in the replacement
    LinkCandidate candidate;
    long assignments_tried = 0;
    std::string note;

    std::string describe() const;
};

// Searches positional assignments of the multiset over the template's slots
// (exact matches first, then single-monomial perturbations) reproducing the
// target. Deterministic: first hit in lexicographic assignment order.
Realization realize(YYType t, const std::array<i64, 4>& multiset,
                    const std::array<i64, 4>& target_sorted_w, i64 target_d);

// Replaces the weight at one positional coordinate, keeping the degree.
// Fails when the new weights have gcd != 1 or the generic member stops being
// quasi-smooth.
LinkCandidate jiggle(const LinkCandidate& c, int positional_coord, i64 new_weight);

// Wherever w_i | d, replaces tail monomials z_i^a' z_j by the pure power
// z_i^(d/w_i). Idempotent and degree-preserving. Monomials are in the same
// coordinate order as `weights`.
std::vector<Monomial> minimize_support(std::vector<Monomial> support,
                                       const std::array<i64, 4>& weights, i64 d);

// Machine-readable catalog export (JSON array, one record per type).
std::string yy_catalog_json();

}  // namespace selink
