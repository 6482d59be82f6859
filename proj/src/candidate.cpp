#include "selink/candidate.hpp"

#include <algorithm>

#include "selink/errors.hpp"

namespace selink {

bool LinkCandidate::has_monomial_supported_on(std::initializer_list<int> coords) const {
    std::array<bool, 4> in{};
    for (int c : coords) in[c] = true;
    if (support) {
        for (const Monomial& m : *support) {
            bool ok = true;
            for (int k = 0; k < 4; ++k)
                if (m.e[k] != 0 && !in[k]) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    }
    std::vector<i64> sub;
    for (int k = 0; k < 4; ++k)
        if (in[k]) sub.push_back(weights.w[k]);
    return has_nonneg_solution(sub, degree);
}

std::vector<Monomial> LinkCandidate::materialized_support() const {
    if (support) {
        std::vector<Monomial> out = *support;
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<Monomial> out;
    for (const auto& b : nonneg_solutions(std::span<const i64>(weights.w.data(), 4), degree)) {
        Monomial m;
        std::copy(b.begin(), b.end(), m.e.begin());
        out.push_back(m);
    }
    return out;
}

LinkCandidate LinkCandidate::from_sorted(const std::array<i64, 4>& w, i64 d) {
    if (d < 1) throw usage_error("degree must be a positive integer");
    LinkCandidate c;
    c.weights = WeightVector::from_sorted(w);
    c.degree = d;
    return c;
}

LinkCandidate LinkCandidate::from_positional(const std::array<i64, 4>& w, i64 d) {
    if (d < 1) throw usage_error("degree must be a positive integer");
    LinkCandidate c;
    c.weights = WeightVector::from_positional(w);
    c.degree = d;
    return c;
}

}  // namespace selink
