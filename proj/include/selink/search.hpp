// Bounded enumeration over exponent space with deterministic deduplication:
// output is ordered by (degree, sorted weights) and independent of the worker
// count.
#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "selink/classify.hpp"
#include "selink/yy_type.hpp"

namespace selink {

enum class TorsionFilter { any, nontrivial, trivial };

struct SearchSpec {
    std::vector<YYType> types;                        // standard types only
    std::array<std::pair<i64, i64>, 4> bounds{};       // inclusive per-slot ranges
    std::optional<SEStatus> verdict_filter;
    TorsionFilter torsion_filter = TorsionFilter::any;
    std::optional<i64> index_min, index_max;
    std::optional<std::string> manifold_filter;
    int jobs = 1;
    ClassifyOptions classify;

    static SearchSpec standard_sweep(i64 max_exponent, int jobs = 1);
};

std::vector<ResultRecord> enumerate(const SearchSpec& spec);

}  // namespace selink
