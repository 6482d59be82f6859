// The full classification pipeline for one candidate:
// positivity -> quasi-smoothness -> certification -> topology.
#pragma once

#include <optional>
#include <string>

#include "selink/candidate.hpp"
#include "selink/certify.hpp"
#include "selink/quasismooth.hpp"
#include "selink/topology.hpp"

namespace selink {

struct ResultRecord {
    std::array<i64, 4> weights{};  // sorted ascending
    i64 degree = 0;
    i64 index = 0;
    std::string yy_type;  // empty when unknown
    std::optional<std::array<i64, 4>> exponents;
    QuasiSmoothReport qs;
    Verdict verdict;
    bool lich_obstructed = false;
    bool lich_marginal = false;
    std::optional<i64> b2;
    std::vector<TorsionPart> torsion;
    std::string manifold;  // empty unless positive and quasi-smooth
    std::string provenance;
};

struct ClassifyOptions {
    QuasiSmoothOptions qs;
};

// Deterministic full record. Topology is skipped when the index is not
// positive or the candidate is not quasi-smooth. A positive quasi-smooth
// candidate whose torsion falls outside the allowed groups is a structural
// failure and raises inconsistency_error.
ResultRecord classify(const LinkCandidate& c, std::string provenance = "",
                      const ClassifyOptions& opts = {});

}  // namespace selink
