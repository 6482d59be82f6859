#include "selink/certify.hpp"

#include "selink/errors.hpp"
#include "selink/quasismooth.hpp"

namespace selink {

const char* se_status_name(SEStatus s) {
    switch (s) {
        case SEStatus::certified:
            return "SE_certified";
        case SEStatus::obstructed:
            return "obstructed";
        case SEStatus::unknown:
            return "unknown";
    }
    return "unknown";
}

std::string Verdict::describe() const {
    std::string s = se_status_name(status);
    if (status == SEStatus::certified) s += "(branch " + std::to_string(branch) + ")";
    if (status == SEStatus::obstructed) s += "(" + reason + ")";
    return s;
}

i64 fano_index(const WeightVector& w, i64 d) {
    return to_i64(checked_sub(i128(w.sum()), i128(d)), "fano index");
}

bool point_in_variety(const LinkCandidate& c) {
    return !c.has_monomial_supported_on({3});
}

bool line_in_variety(const LinkCandidate& c) {
    return !c.has_monomial_supported_on({2, 3});
}

Verdict klt_certificate(const LinkCandidate& c) {
    const i64 I = c.index();
    if (I <= 0) throw usage_error("klt certificate requires a positive index");
    if (!is_quasismooth(c.weights, c.degree).smooth)
        throw usage_error("klt certificate requires a quasi-smooth candidate");

    Verdict v;
    v.lhs_2Id = to_i64(checked_mul(checked_mul(2, I), c.degree), "2Id");
    for (int k = 0; k < 3; ++k)
        v.rhs[k] =
            to_i64(checked_mul(checked_mul(3, c.weights.w[0]), c.weights.w[k + 1]), "3w0wj");

    if (v.lhs_2Id < v.rhs[0]) {
        v.status = SEStatus::certified;
        v.branch = 1;
        return v;
    }
    if (v.lhs_2Id < v.rhs[1] && !line_in_variety(c)) {
        v.status = SEStatus::certified;
        v.branch = 2;
        return v;
    }
    if (v.lhs_2Id < v.rhs[2] && !point_in_variety(c)) {
        v.status = SEStatus::certified;
        v.branch = 3;
        return v;
    }
    v.status = SEStatus::unknown;
    return v;
}

Lichnerowicz lichnerowicz_obstructed(const WeightVector& w, i64 index) {
    if (index <= 0) throw usage_error("Lichnerowicz test requires a positive index");
    Lichnerowicz out;
    out.threshold = to_i64(checked_mul(3, w.w[0]), "3*w0");
    out.obstructed = index > out.threshold;
    out.marginal = index == out.threshold;
    return out;
}

}  // namespace selink
