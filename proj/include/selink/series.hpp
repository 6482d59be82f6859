// Parametric weight families (the sixteen table-1 series): instantiation with
// gcd side conditions, expected index formulas, and expected manifolds.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "selink/classify.hpp"
#include "selink/topology.hpp"

namespace selink {

enum class SeriesSE { yes, unknown, no_if_k_gt_4 };

struct SeriesFamily {
    std::string id;           // "table1.row1" ... "table1.row16"
    std::string weights_str;  // display form, e.g. "(2,2k,k(2n+1),2k(n+1))"
    std::string side_str;     // e.g. "(k,2)=1", empty when unconstrained
    bool uses_k = true;
    bool uses_n = false;
    std::function<std::array<i64, 4>(i64 k, i64 n)> weights;
    std::function<i64(i64 k, i64 n)> degree;
    std::function<bool(i64 k, i64 n)> side_ok;
    std::function<i64(i64 k, i64 n)> expected_index;
    std::function<SmaleManifold(i64 k, i64 n)> expected_manifold;
    SeriesSE se = SeriesSE::unknown;
};

const std::vector<SeriesFamily>& series_families();
const SeriesFamily& series_family(const std::string& id);

// Evaluates the family at (k, n); nullopt when the gcd side conditions fail.
// The expected index formula is asserted against |w| - d (family-definition
// error otherwise).
std::optional<LinkCandidate> instantiate_series(const SeriesFamily& f, i64 k, i64 n);

}  // namespace selink
