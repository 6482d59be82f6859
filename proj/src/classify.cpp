#include "selink/classify.hpp"

#include "selink/errors.hpp"
#include "selink/yy.hpp"

namespace selink {

ResultRecord classify(const LinkCandidate& c, std::string provenance,
                      const ClassifyOptions& opts) {
    for (int i = 0; i < 4; ++i)
        if (c.weights.w[i] == c.degree)
            throw usage_error("degree " + std::to_string(c.degree) + " equals the weight of z" +
                              std::to_string(i) +
                              ": the generic member is a linear cone with no singularity at the "
                              "origin (its link is the unknotted S5), outside this pipeline");

    ResultRecord r;
    r.weights = c.weights.w;
    r.degree = c.degree;
    r.index = c.index();
    if (c.yy_type) r.yy_type = yy_name(*c.yy_type);
    r.exponents = c.exponents;
    r.provenance = std::move(provenance);

    r.qs = is_quasismooth(c.weights, c.degree, opts.qs);

    // Margins are well-defined integers regardless of positivity; record them.
    r.verdict.lhs_2Id = to_i64(checked_mul(checked_mul(2, i128(r.index)), c.degree), "2Id");
    for (int k = 0; k < 3; ++k)
        r.verdict.rhs[k] =
            to_i64(checked_mul(checked_mul(3, c.weights.w[0]), c.weights.w[k + 1]), "3w0wj");

    if (r.index <= 0 || !r.qs.smooth) return r;  // no certification, no topology

    Lichnerowicz lich = lichnerowicz_obstructed(c.weights, r.index);
    r.lich_obstructed = lich.obstructed;
    r.lich_marginal = lich.marginal;
    if (lich.obstructed) {
        r.verdict.status = SEStatus::obstructed;
        r.verdict.reason = "Lichnerowicz: I = " + std::to_string(r.index) + " > " +
                           std::to_string(lich.threshold) + " = 3*w0";
    } else {
        r.verdict = klt_certificate(c);
    }

    r.b2 = betti2(c.weights, c.degree);
    r.torsion = torsion_parts(c);
    if (!kollar_allowed(r.torsion)) {
        std::string groups;
        for (const auto& t : r.torsion)
            groups += " (Z_" + std::to_string(t.m) + ")^" + std::to_string(2 * t.genus);
        throw inconsistency_error("link L" + c.weights.str() + ";" + std::to_string(c.degree) +
                                  " is positive and quasi-smooth but its torsion" + groups +
                                  " is outside the allowed groups");
    }
    r.manifold = smale_name(*r.b2, r.torsion).name();
    return r;
}

}  // namespace selink
