#include "selink/quasismooth.hpp"

#include <numeric>
#include <optional>

#include "selink/errors.hpp"

namespace selink {

namespace {

// First monomial z_i^m (m >= 1) or z_i^m z_j (m >= 1, j != i) of degree d.
std::optional<Monomial> condition1_witness(const WeightVector& wv, i64 d, int i) {
    const auto& w = wv.w;
    if (d >= w[i] && d % w[i] == 0) {
        Monomial m;
        m.e[i] = d / w[i];
        return m;
    }
    for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        i64 rem = d - w[j];
        if (rem >= w[i] && rem % w[i] == 0) {
            Monomial m;
            m.e[i] = rem / w[i];
            m.e[j] += 1;
            return m;
        }
    }
    return std::nullopt;
}

std::optional<Monomial> pure_pair_witness(const WeightVector& wv, i64 d, int i, int j) {
    const auto& w = wv.w;
    if (!has_pair_solution(w[i], w[j], d)) return std::nullopt;
    for (i64 b = 0; b * w[i] <= d; ++b) {
        i64 rem = d - b * w[i];
        if (rem % w[j] == 0) {
            Monomial m;
            m.e[i] = b;
            m.e[j] = rem / w[j];
            return m;
        }
    }
    return std::nullopt;  // unreachable: has_pair_solution said yes
}

// Monomial z_i^c z_j^c' z_k of degree d with unit exponent on the auxiliary
// variable k (k outside {i,j}).
bool aux_monomial_exists(const WeightVector& wv, i64 d, int i, int j, int k) {
    return has_pair_solution(wv.w[i], wv.w[j], d - wv.w[k]);
}

bool pair_ok(const WeightVector& w, i64 d, int i, int j, const QuasiSmoothOptions& opts) {
    if (has_pair_solution(w.w[i], w.w[j], d)) return true;
    int p = -1, q = -1;
    for (int k = 0; k < 4; ++k)
        if (k != i && k != j) (p < 0 ? p : q) = k;
    bool ap = aux_monomial_exists(w, d, i, j, p);
    bool aq = aux_monomial_exists(w, d, i, j, q);
    return opts.strict_condition3 ? (ap && aq) : (ap || aq);
}

// Triple stratum {i,j,k} with complement {l}: a monomial on the triple, or a
// single monomial at degree d - w_l (the transverse derivative d f / d z_l is
// then one monomial, nowhere zero on the open stratum).
bool triple_ok(const WeightVector& w, i64 d, int l) {
    std::array<i64, 3> t{};
    int n = 0;
    for (int k = 0; k < 4; ++k)
        if (k != l) t[n++] = w.w[k];
    if (has_nonneg_solution(t, d)) return true;
    return nonneg_solutions(t, d - w.w[l]).size() == 1;
}

}  // namespace

std::array<bool, 4> check_condition1(const WeightVector& w, i64 d) {
    if (d < 1) throw usage_error("degree must be positive");
    std::array<bool, 4> out{};
    for (int i = 0; i < 4; ++i) out[i] = condition1_witness(w, d, i).has_value();
    return out;
}

bool check_condition2(const WeightVector& w, i64 d) {
    if (d < 1) throw usage_error("degree must be positive");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::gcd(w.w[i], w.w[j]) > 1 && !has_pair_solution(w.w[i], w.w[j], d))
                return false;
    return true;
}

bool check_condition3(const WeightVector& w, i64 d, const QuasiSmoothOptions& opts) {
    if (d < 1) throw usage_error("degree must be positive");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!pair_ok(w, d, i, j, opts)) return false;
    return true;
}

QuasiSmoothReport is_quasismooth(const WeightVector& w, i64 d,
                                 const QuasiSmoothOptions& opts) {
    if (d < 1) throw usage_error("degree must be positive");
    QuasiSmoothReport rep;
    rep.cond2 = check_condition2(w, d);
    rep.cond3 = true;
    rep.triples = true;

    // Linear cone: a variable of weight d makes the generic member smooth
    // outright.
    for (int i = 0; i < 4; ++i)
        if (w.w[i] == d) {
            rep.smooth = true;
            rep.cond1 = check_condition1(w, d);
            rep.cond3 = check_condition3(w, d, opts);
            for (int l = 0; l < 4 && rep.triples; ++l) rep.triples = triple_ok(w, d, l);
            rep.witnesses.push_back("linear cone: z" + std::to_string(i) + " has weight " +
                                    std::to_string(d));
            return rep;
        }

    for (int i = 0; i < 4; ++i) {
        auto wit = condition1_witness(w, d, i);
        rep.cond1[i] = wit.has_value();
        if (wit)
            rep.witnesses.push_back("cond1[z" + std::to_string(i) + "]: " + wit->str());
        else if (rep.failure.empty())
            rep.failure = "condition 1 fails at coordinate z" + std::to_string(i);
    }

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto pure = pure_pair_witness(w, d, i, j);
            if (pure) {
                rep.witnesses.push_back("pair[z" + std::to_string(i) + ",z" +
                                        std::to_string(j) + "]: " + pure->str());
                continue;
            }
            int p = -1, q = -1;
            for (int k = 0; k < 4; ++k)
                if (k != i && k != j) (p < 0 ? p : q) = k;
            bool ap = aux_monomial_exists(w, d, i, j, p);
            bool aq = aux_monomial_exists(w, d, i, j, q);
            bool ok = opts.strict_condition3 ? (ap && aq) : (ap || aq);
            if (ok) {
                std::string note =
                    "pair[z" + std::to_string(i) + ",z" + std::to_string(j) + "]: aux";
                if (ap) note += " z" + std::to_string(p);
                if (aq) note += " z" + std::to_string(q);
                rep.witnesses.push_back(note);
            } else {
                rep.cond3 = false;
                if (rep.failure.empty())
                    rep.failure = "pair condition fails for (z" + std::to_string(i) + ",z" +
                                  std::to_string(j) + ")";
            }
        }

    for (int l = 0; l < 4; ++l) {
        if (triple_ok(w, d, l)) continue;
        rep.triples = false;
        if (rep.failure.empty())
            rep.failure = "triple condition fails for the stratum complementary to z" +
                          std::to_string(l);
    }

    rep.smooth = rep.cond1[0] && rep.cond1[1] && rep.cond1[2] && rep.cond1[3] && rep.cond3 &&
                 rep.triples;
    if (rep.smooth && !rep.cond2)
        rep.witnesses.push_back(
            "note: a singular ambient edge lies in the variety (pair gcd without a pair "
            "monomial); it is rational and carries no torsion");
    if (rep.smooth) rep.failure.clear();
    return rep;
}

}  // namespace selink
