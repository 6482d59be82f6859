// A link candidate L(w;d): weight vector, degree, and monomial support.
// Support defaults to the generic member of |O(d)| (all monomials of degree
// d); an explicit support can be attached for sparse-polynomial side checks.
#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <vector>

#include "selink/exact.hpp"
#include "selink/yy_type.hpp"

namespace selink {

struct LinkCandidate {
    WeightVector weights;
    i64 degree = 0;
    std::optional<YYType> yy_type;
    std::optional<std::array<i64, 4>> exponents;  // template-positional, if known
    // Monomials in sorted-coordinate order; nullopt means generic support.
    std::optional<std::vector<Monomial>> support;

    i64 index() const { return weights.sum() - degree; }

    // True iff some support monomial involves only the given sorted
    // coordinates. Generic support reduces to a Diophantine existence query.
    bool has_monomial_supported_on(std::initializer_list<int> coords) const;

    // Materializes the support (enumerates all degree-d monomials when
    // generic), in lexicographic order of sorted-coordinate exponents.
    std::vector<Monomial> materialized_support() const;

    static LinkCandidate from_sorted(const std::array<i64, 4>& w, i64 d);
    static LinkCandidate from_positional(const std::array<i64, 4>& w, i64 d);
};

}  // namespace selink
