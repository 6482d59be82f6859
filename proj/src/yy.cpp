#include "selink/yy.hpp"

#include <algorithm>
#include <set>

#include "selink/errors.hpp"
#include "selink/quasismooth.hpp"

#include <json.hpp>

namespace selink {

namespace {

// clang-format off
const YYCatalogEntry kCatalog[kYYTypeCount] = {
    {YYType::I,     "I",     true,  4, "z0^a + z1^b + z2^c + z3^d",
     "1/a + 1/b + 1/c + 1/d"},
    {YYType::II,    "II",    true,  4, "z0^a + z1^b + z2^c + z2*z3^d",
     "1/a + 1/b + 1/c + (c-1)/(c*d)"},
    {YYType::III,   "III",   true,  4, "z0^a + z1^b + z2^c*z3 + z2*z3^d",
     "1/a + 1/b + (d-1)/(c*d-1) + (c-1)/(c*d-1)"},
    {YYType::IV,    "IV",    true,  4, "z0^a + z0*z1^b + z2^c + z2*z3^d",
     "1/a + (a-1)/(a*b) + 1/c + (c-1)/(c*d)"},
    {YYType::V,     "V",     true,  4, "z0^a*z1 + z0*z1^b + z2^c + z2*z3^d",
     "(b-1)/(a*b-1) + (a-1)/(a*b-1) + 1/c + (c-1)/(c*d)"},
    {YYType::VI,    "VI",    true,  4, "z0^a*z1 + z0*z1^b + z2^c*z3 + z2*z3^d",
     "(b-1)/(a*b-1) + (a-1)/(a*b-1) + (d-1)/(c*d-1) + (c-1)/(c*d-1)"},
    {YYType::VII,   "VII",   true,  4, "z0^a + z1^b + z1*z2^c + z2*z3^d",
     "1/a + 1/b + (b-1)/(b*c) + (b*(c-1)+1)/(b*c*d)"},
    {YYType::VIII,  "VIII",  false, 6, "z0^a + z1^b + z1*z2^c + z1*z3^d + z2^p*z3^q",
     "1/a + 1/b + (b-1)/(b*c) + (b-1)/(b*d)"},
    {YYType::IX,    "IX",    false, 6, "z0^a + z1^b*z3 + z2^c*z3 + z1*z3^d + z1^p*z2^q",
     "1/a + (d-1)/(b*d-1) + b*(d-1)/(c*(b*d-1)) + (b-1)/(b*d-1)"},
    {YYType::X,     "X",     true,  4, "z0^a + z1^b*z2 + z2^c*z3 + z1*z3^d",
     "1/a + (d*(c-1)+1)/(b*c*d+1) + (b*(d-1)+1)/(b*c*d+1) + (c*(b-1)+1)/(b*c*d+1)"},
    {YYType::XI,    "XI",    true,  4, "z0^a + z0*z1^b + z1*z2^c + z2*z3^d",
     "1/a + (a-1)/(a*b) + (a*(b-1)+1)/(a*b*c) + (a*b*(c-1)+(a-1))/(a*b*c*d)"},
    {YYType::XII,   "XII",   false, 6, "z0^a + z0*z1^b + z0*z2^c + z1*z3^d + z1^p*z2^q",
     "1/a + (a-1)/(a*b) + (a-1)/(a*c) + (a*(b-1)+1)/(a*b*d)"},
    {YYType::XIII,  "XIII",  false, 6, "z0^a + z0*z1^b + z1*z2^c + z1*z3^d + z2^p*z3^q",
     "1/a + (a-1)/(a*b) + (a*(b-1)+1)/(a*b*c) + (a*(b-1)+1)/(a*b*d)"},
    {YYType::XIV,   "XIV",   false, 8, "z0^a + z0*z1^b + z0*z2^c + z0*z3^d + z1^p*z2^q + z2^r*z3^s",
     "1/a + (a-1)/(a*b) + (a-1)/(a*c) + (a-1)/(a*d)"},
    {YYType::XV,    "XV",    false, 6, "z0^a*z1 + z0*z1^b + z0*z2^c + z2*z3^d + z1^p*z2^q",
     "(b-1)/(a*b-1) + (a-1)/(a*b-1) + b*(a-1)/(c*(a*b-1)) + (c*(a*b-1)-b*(a-1))/(c*d*(a*b-1))"},
    {YYType::XVI,   "XVI",   false, 8, "z0^a*z1 + z0*z1^b + z0*z2^c + z0*z3^d + z1^p*z2^q + z2^r*z3^s",
     "(b-1)/(a*b-1) + (a-1)/(a*b-1) + b*(a-1)/(c*(a*b-1)) + b*(a-1)/(d*(a*b-1))"},
    {YYType::XVII,  "XVII",  false, 8, "z0^a*z1 + z0*z1^b + z1*z2^c + z0*z3^d + z1^p*z3^q + z0^r*z2^s",
     "(b-1)/(a*b-1) + (a-1)/(a*b-1) + a*(b-1)/(c*(a*b-1)) + b*(a-1)/(d*(a*b-1))"},
    {YYType::XVIII, "XVIII", false, 6, "z0^a*z2 + z0*z1^b + z1*z2^c + z1*z3^d + z2^p*z3^q",
     "(b*(c-1)+1)/(a*b*c+1) + (c*(a-1)+1)/(a*b*c+1) + (a*(b-1)+1)/(a*b*c+1) + c*(a*(b-1)+1)/(d*(a*b*c+1))"},
    {YYType::XIX,   "XIX",   true,  4, "z0^a*z1 + z1^b*z2 + z2^c*z3 + z0*z3^d",
     "(d*(c*(b-1)+1)-1)/(a*b*c*d-1) + (a*(d*(c-1)+1)-1)/(a*b*c*d-1) + (b*(a*(d-1)+1)-1)/(a*b*c*d-1) + (c*(b*(a-1)+1)-1)/(a*b*c*d-1)"},
};
// clang-format on

const char* kNames[kYYTypeCount] = {"I",   "II",  "III",  "IV",  "V",   "VI",  "VII",
                                    "VIII", "IX",  "X",    "XI",  "XII", "XIII", "XIV",
                                    "XV",  "XVI", "XVII", "XVIII", "XIX"};

Rat term_div(i128 num, i128 den, const char* type) {
    if (den == 0)
        throw usage_error(std::string("degenerate exponents for type ") + type +
                          ": zero denominator in index formula");
    return Rat(num, den);
}

}  // namespace

const char* yy_name(YYType t) { return kNames[static_cast<int>(t)]; }

std::optional<YYType> yy_from_name(const std::string& name) {
    for (int i = 0; i < kYYTypeCount; ++i)
        if (name == kNames[i]) return static_cast<YYType>(i);
    return std::nullopt;
}

bool yy_is_standard(YYType t) { return kCatalog[static_cast<int>(t)].standard; }

std::span<const YYCatalogEntry> yy_catalog() {
    return std::span<const YYCatalogEntry>(kCatalog, kYYTypeCount);
}

const YYCatalogEntry& yy_entry(YYType t) { return kCatalog[static_cast<int>(t)]; }

ExponentMatrix yy_exponent_matrix(YYType t, const std::array<i64, 4>& a) {
    for (i64 x : a)
        if (x < 1) throw usage_error("exponents must be positive integers");
    const i64 A = a[0], B = a[1], C = a[2], D = a[3];
    ExponentMatrix M;
    auto row = [&M](int r, i64 e0, i64 e1, i64 e2, i64 e3) {
        M.a[r] = {e0, e1, e2, e3};
    };
    switch (t) {
        case YYType::I:
            row(0, A, 0, 0, 0), row(1, 0, B, 0, 0), row(2, 0, 0, C, 0), row(3, 0, 0, 0, D);
            break;
        case YYType::II:
            row(0, A, 0, 0, 0), row(1, 0, B, 0, 0), row(2, 0, 0, C, 0), row(3, 0, 0, 1, D);
            break;
        case YYType::III:
            row(0, A, 0, 0, 0), row(1, 0, B, 0, 0), row(2, 0, 0, C, 1), row(3, 0, 0, 1, D);
            break;
        case YYType::IV:
            row(0, A, 0, 0, 0), row(1, 1, B, 0, 0), row(2, 0, 0, C, 0), row(3, 0, 0, 1, D);
            break;
        case YYType::V:
            row(0, A, 1, 0, 0), row(1, 1, B, 0, 0), row(2, 0, 0, C, 0), row(3, 0, 0, 1, D);
            break;
        case YYType::VI:
            row(0, A, 1, 0, 0), row(1, 1, B, 0, 0), row(2, 0, 0, C, 1), row(3, 0, 0, 1, D);
            break;
        case YYType::VII:
            row(0, A, 0, 0, 0), row(1, 0, B, 0, 0), row(2, 0, 1, C, 0), row(3, 0, 0, 1, D);
            break;
        case YYType::X:
            row(0, A, 0, 0, 0), row(1, 0, B, 1, 0), row(2, 0, 0, C, 1), row(3, 0, 1, 0, D);
            break;
        case YYType::XI:
            row(0, A, 0, 0, 0), row(1, 1, B, 0, 0), row(2, 0, 1, C, 0), row(3, 0, 0, 1, D);
            break;
        case YYType::XIX:
            row(0, A, 1, 0, 0), row(1, 0, B, 1, 0), row(2, 0, 0, C, 1), row(3, 1, 0, 0, D);
            break;
        default:
            throw usage_error(std::string("type ") + yy_name(t) +
                              " is not standard: its normal form is not a square system");
    }
    return M;
}

Rat positivity_index(YYType t, const std::array<i64, 4>& a) {
    for (i64 x : a)
        if (x < 1) throw usage_error("exponents must be positive integers");
    const i128 A = a[0], B = a[1], C = a[2], D = a[3];
    const char* n = yy_name(t);
    switch (t) {
        case YYType::I:
            return term_div(1, A, n) + term_div(1, B, n) + term_div(1, C, n) + term_div(1, D, n);
        case YYType::II:
            return term_div(1, A, n) + term_div(1, B, n) + term_div(1, C, n) +
                   term_div(C - 1, checked_mul(C, D), n);
        case YYType::III: {
            i128 cd1 = checked_mul(C, D) - 1;
            return term_div(1, A, n) + term_div(1, B, n) + term_div(D - 1, cd1, n) +
                   term_div(C - 1, cd1, n);
        }
        case YYType::IV:
            return term_div(1, A, n) + term_div(A - 1, checked_mul(A, B), n) + term_div(1, C, n) +
                   term_div(C - 1, checked_mul(C, D), n);
        case YYType::V: {
            i128 ab1 = checked_mul(A, B) - 1;
            return term_div(B - 1, ab1, n) + term_div(A - 1, ab1, n) + term_div(1, C, n) +
                   term_div(C - 1, checked_mul(C, D), n);
        }
        case YYType::VI: {
            i128 ab1 = checked_mul(A, B) - 1;
            i128 cd1 = checked_mul(C, D) - 1;
            return term_div(B - 1, ab1, n) + term_div(A - 1, ab1, n) + term_div(D - 1, cd1, n) +
                   term_div(C - 1, cd1, n);
        }
        case YYType::VII: {
            i128 bc = checked_mul(B, C);
            return term_div(1, A, n) + term_div(1, B, n) + term_div(B - 1, bc, n) +
                   term_div(checked_mul(B, C - 1) + 1, checked_mul(bc, D), n);
        }
        case YYType::VIII:
            return term_div(1, A, n) + term_div(1, B, n) +
                   term_div(B - 1, checked_mul(B, C), n) + term_div(B - 1, checked_mul(B, D), n);
        case YYType::IX: {
            i128 bd1 = checked_mul(B, D) - 1;
            return term_div(1, A, n) + term_div(D - 1, bd1, n) +
                   term_div(checked_mul(B, D - 1), checked_mul(C, bd1), n) +
                   term_div(B - 1, bd1, n);
        }
        case YYType::X: {
            i128 bcd1 = checked_mul(checked_mul(B, C), D) + 1;
            return term_div(1, A, n) + term_div(checked_mul(D, C - 1) + 1, bcd1, n) +
                   term_div(checked_mul(B, D - 1) + 1, bcd1, n) +
                   term_div(checked_mul(C, B - 1) + 1, bcd1, n);
        }
        case YYType::XI: {
            i128 ab = checked_mul(A, B);
            return term_div(1, A, n) + term_div(A - 1, ab, n) +
                   term_div(checked_mul(A, B - 1) + 1, checked_mul(ab, C), n) +
                   term_div(checked_add(checked_mul(ab, C - 1), A - 1),
                            checked_mul(checked_mul(ab, C), D), n);
        }
        case YYType::XII:
            return term_div(1, A, n) + term_div(A - 1, checked_mul(A, B), n) +
                   term_div(A - 1, checked_mul(A, C), n) +
                   term_div(checked_mul(A, B - 1) + 1, checked_mul(checked_mul(A, B), D), n);
        case YYType::XIII: {
            i128 num = checked_mul(A, B - 1) + 1;
            return term_div(1, A, n) + term_div(A - 1, checked_mul(A, B), n) +
                   term_div(num, checked_mul(checked_mul(A, B), C), n) +
                   term_div(num, checked_mul(checked_mul(A, B), D), n);
        }
        case YYType::XIV:
            return term_div(1, A, n) + term_div(A - 1, checked_mul(A, B), n) +
                   term_div(A - 1, checked_mul(A, C), n) + term_div(A - 1, checked_mul(A, D), n);
        case YYType::XV: {
            i128 ab1 = checked_mul(A, B) - 1;
            i128 ba1 = checked_mul(B, A - 1);
            return term_div(B - 1, ab1, n) + term_div(A - 1, ab1, n) +
                   term_div(ba1, checked_mul(C, ab1), n) +
                   term_div(checked_sub(checked_mul(C, ab1), ba1),
                            checked_mul(checked_mul(C, D), ab1), n);
        }
        case YYType::XVI: {
            i128 ab1 = checked_mul(A, B) - 1;
            i128 ba1 = checked_mul(B, A - 1);
            return term_div(B - 1, ab1, n) + term_div(A - 1, ab1, n) +
                   term_div(ba1, checked_mul(C, ab1), n) + term_div(ba1, checked_mul(D, ab1), n);
        }
        case YYType::XVII: {
            i128 ab1 = checked_mul(A, B) - 1;
            return term_div(B - 1, ab1, n) + term_div(A - 1, ab1, n) +
                   term_div(checked_mul(A, B - 1), checked_mul(C, ab1), n) +
                   term_div(checked_mul(B, A - 1), checked_mul(D, ab1), n);
        }
        case YYType::XVIII: {
            i128 abc1 = checked_mul(checked_mul(A, B), C) + 1;
            i128 ab1n = checked_mul(A, B - 1) + 1;
            return term_div(checked_mul(B, C - 1) + 1, abc1, n) +
                   term_div(checked_mul(C, A - 1) + 1, abc1, n) + term_div(ab1n, abc1, n) +
                   term_div(checked_mul(C, ab1n), checked_mul(D, abc1), n);
        }
        case YYType::XIX: {
            // Loop polynomial: w_i/e cycles through x_{i+3}(x_{i+2}(x_{i+1}-1)+1)-1
            // over the denominator abcd-1.
            i128 abcd1 = checked_mul(checked_mul(A, B), checked_mul(C, D)) - 1;
            i128 t0 = checked_mul(D, checked_mul(C, B - 1) + 1) - 1;
            i128 t1 = checked_mul(A, checked_mul(D, C - 1) + 1) - 1;
            i128 t2 = checked_mul(B, checked_mul(A, D - 1) + 1) - 1;
            i128 t3 = checked_mul(C, checked_mul(B, A - 1) + 1) - 1;
            return term_div(t0, abcd1, n) + term_div(t1, abcd1, n) + term_div(t2, abcd1, n) +
                   term_div(t3, abcd1, n);
        }
    }
    throw usage_error("unknown YY type");
}

LinkCandidate weights_for(YYType t, const std::array<i64, 4>& a) {
    ExpSolution sol = solve_exponent_system(yy_exponent_matrix(t, a));
    LinkCandidate c;
    c.weights = sol.weights();
    c.degree = sol.d;
    c.yy_type = t;
    c.exponents = a;
    return c;
}

namespace {

// Template slots holding a pure power z_v^x, eligible for perturbation into
// z_v^x * z_j.
std::vector<std::pair<int, int>> pure_power_rows(YYType t) {
    // {row, variable}
    switch (t) {
        case YYType::I:
            return {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
        case YYType::II:
            return {{0, 0}, {1, 1}, {2, 2}};
        case YYType::III:
            return {{0, 0}, {1, 1}};
        case YYType::IV:
            return {{0, 0}, {2, 2}};
        case YYType::V:
            return {{2, 2}};
        case YYType::VI:
            return {};
        case YYType::VII:
            return {{0, 0}, {1, 1}};
        case YYType::X:
            return {{0, 0}};
        case YYType::XI:
            return {{0, 0}};
        case YYType::XIX:
            return {};
        default:
            return {};
    }
}

std::vector<std::array<i64, 4>> distinct_permutations(std::array<i64, 4> m) {
    std::sort(m.begin(), m.end());
    std::vector<std::array<i64, 4>> out;
    do {
        out.push_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

}  // namespace

std::string Realization::describe() const {
    if (!realized) return "unrealized: " + note;
    std::string s = "positional (";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ",";
        s += std::to_string(positional[i]);
    }
    s += ")";
    if (perturbed)
        s += " with z" + std::to_string(perturbed_var) + " power perturbed by z" +
             std::to_string(perturbed_aux);
    return s;
}

Realization realize(YYType t, const std::array<i64, 4>& multiset,
                    const std::array<i64, 4>& target_sorted_w, i64 target_d) {
    if (!yy_is_standard(t))
        throw usage_error(std::string("realize requires a standard type, got ") + yy_name(t));
    Realization r;
    const auto perms = distinct_permutations(multiset);

    auto matches = [&](const ExpSolution& sol) {
        return sol.d == target_d && sol.weights().w == target_sorted_w;
    };

    for (const auto& a : perms) {
        ++r.assignments_tried;
        try {
            ExpSolution sol = solve_exponent_system(yy_exponent_matrix(t, a));
            if (matches(sol)) {
                r.realized = true;
                r.positional = a;
                r.candidate = weights_for(t, a);
                return r;
            }
        } catch (const usage_error&) {
            // singular or non-positive assignment: skip
        }
    }

    // Single-monomial perturbations: one pure power z_v^x becomes z_v^x * z_j.
    // A valid perturbation needs w_v | d in the solved link, so that
    // minimization maps the polynomial back to the stated type.
    for (const auto& [row, var] : pure_power_rows(t)) {
        for (int aux = 0; aux < 4; ++aux) {
            if (aux == var) continue;
            for (const auto& a : perms) {
                ++r.assignments_tried;
                ExponentMatrix M = yy_exponent_matrix(t, a);
                M.a[row][aux] += 1;
                try {
                    ExpSolution sol = solve_exponent_system(M);
                    if (!matches(sol)) continue;
                    if (sol.d % sol.w_positional[var] != 0) continue;
                    r.realized = true;
                    r.perturbed = true;
                    r.perturbed_var = var;
                    r.perturbed_aux = aux;
                    r.positional = a;
                    r.candidate = LinkCandidate::from_positional(sol.w_positional, sol.d);
                    r.candidate.yy_type = t;
                    r.candidate.exponents = a;
                    return r;
                } catch (const usage_error&) {
                }
            }
        }
    }

    r.note = "no positional assignment or single perturbation of type " +
             std::string(yy_name(t)) + " reproduces the target after " +
             std::to_string(r.assignments_tried) + " attempts";
    return r;
}

LinkCandidate jiggle(const LinkCandidate& c, int positional_coord, i64 new_weight) {
    if (positional_coord < 0 || positional_coord > 3)
        throw usage_error("coordinate index out of range");
    if (new_weight < 1) throw usage_error("new weight must be positive");
    if (c.index() <= 0) throw usage_error("jiggle requires a positive candidate (index > 0)");

    std::array<i64, 4> w = c.weights.positional();
    if (w[positional_coord] == new_weight) return c;
    w[positional_coord] = new_weight;

    i64 g = gcd_vec(std::span<const i64>(w.data(), 4));
    if (g != 1)
        throw usage_error("jiggle fails: gcd of new weights is " + std::to_string(g));

    LinkCandidate out = LinkCandidate::from_positional(w, c.degree);
    QuasiSmoothReport qs = is_quasismooth(out.weights, out.degree);
    if (!qs.smooth) throw usage_error("jiggle fails: " + qs.failure);
    return out;  // generic support, no type claim carried over
}

std::vector<Monomial> minimize_support(std::vector<Monomial> support,
                                       const std::array<i64, 4>& weights, i64 d) {
    if (support.empty()) throw usage_error("minimize requires a non-empty support");
    std::set<Monomial> out;
    for (Monomial m : support) {
        if (m.degree(weights) != d)
            throw usage_error("support monomial " + m.str() + " does not have degree " +
                              std::to_string(d));
        int nonzero = 0;
        for (int k = 0; k < 4; ++k)
            if (m.e[k] != 0) ++nonzero;
        if (nonzero == 2) {
            // Tail shape z_i^a' * z_j with unit exponent on j; prefer the
            // lower power index when both exponents are 1.
            for (int i = 0; i < 4; ++i) {
                if (m.e[i] == 0) continue;
                bool unit_tail = false;
                for (int j = 0; j < 4; ++j)
                    if (j != i && m.e[j] == 1) unit_tail = true;
                if (unit_tail && d % weights[i] == 0) {
                    Monomial pure;
                    pure.e[i] = d / weights[i];
                    m = pure;
                    break;
                }
            }
        }
        out.insert(m);
    }
    return std::vector<Monomial>(out.begin(), out.end());
}

std::string yy_catalog_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : yy_catalog()) {
        nlohmann::ordered_json rec;
        rec["id"] = e.name;
        rec["pattern"] = e.pattern;
        rec["standard"] = e.standard;
        rec["arity"] = e.arity;
        rec["index_formula"] = e.index_formula;
        arr.push_back(rec);
    }
    return arr.dump(2);
}

}  // namespace selink
