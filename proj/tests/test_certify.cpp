#include <doctest.h>

#include <numeric>

#include "selink/certify.hpp"
#include "selink/errors.hpp"

using namespace selink;

namespace {

LinkCandidate link(std::array<i64, 4> sorted_w, i64 d) {
    return LinkCandidate::from_sorted(sorted_w, d);
}

}  // namespace

TEST_CASE("fano index") {
    CHECK(fano_index(WeightVector::from_sorted({2, 4, 6, 11}), 22) == 1);
    CHECK(fano_index(WeightVector::from_sorted({1, 1, 1, 1}), 4) == 0);
    CHECK(fano_index(WeightVector::from_sorted({3, 5, 9, 15}), 30) == 2);
    CHECK(fano_index(WeightVector::from_sorted({1, 1, 1, 1}), 5) == -1);
}

TEST_CASE("point membership on generic support") {
    CHECK_FALSE(point_in_variety(link({2, 4, 6, 11}, 22)));   // 11 | 22
    CHECK_FALSE(point_in_variety(link({4, 6, 14, 21}, 42)));  // 21 | 42
    CHECK(point_in_variety(link({2, 3, 4, 5}, 9)));           // 5 does not divide 9
}

TEST_CASE("line membership on generic support") {
    CHECK_FALSE(line_in_variety(link({4, 18, 42, 63}, 126)));  // z2^3
    CHECK(line_in_variety(link({2, 3, 7, 11}, 12)));           // 7b+11c=12 unsolvable
    CHECK_FALSE(line_in_variety(link({1, 1, 1, 1}, 2)));
}

TEST_CASE("membership respects an explicit support") {
    LinkCandidate c = link({2, 4, 6, 11}, 22);
    Monomial m;
    m.e = {11, 0, 0, 0};  // z0^11 only: nothing on the z3 axis or the (z2,z3) line
    c.support = std::vector<Monomial>{m};
    CHECK(point_in_variety(c));
    CHECK(line_in_variety(c));
    Monomial z3sq;
    z3sq.e = {0, 0, 0, 2};
    c.support->push_back(z3sq);
    CHECK_FALSE(point_in_variety(c));
    CHECK_FALSE(line_in_variety(c));
}

TEST_CASE("klt certificate branches") {
    Verdict v = klt_certificate(link({2, 4, 6, 11}, 22));
    CHECK(v.status == SEStatus::certified);
    CHECK(v.branch == 3);
    CHECK(v.lhs_2Id == 44);
    CHECK(v.rhs == std::array<i64, 3>{24, 36, 66});

    Verdict boundary = klt_certificate(link({4, 6, 14, 21}, 42));
    CHECK(boundary.status == SEStatus::unknown);
    CHECK(boundary.lhs_2Id == 252);
    CHECK(boundary.rhs[2] == 252);  // strict inequality fails at equality

    Verdict v3 = klt_certificate(link({3, 5, 9, 15}, 30));
    CHECK(v3.status == SEStatus::certified);
    CHECK(v3.branch == 3);

    Verdict v1 = klt_certificate(link({8, 14, 42, 63}, 126));
    CHECK(v1.status == SEStatus::certified);
    CHECK(v1.branch == 1);

    Verdict v2 = klt_certificate(link({4, 18, 42, 63}, 126));
    CHECK(v2.status == SEStatus::certified);
    CHECK(v2.branch == 2);

    CHECK_THROWS_AS(klt_certificate(link({1, 1, 1, 1}, 5)), usage_error);  // index < 0
}

TEST_CASE("branch inequalities are monotone in the recorded branch") {
    // If branch 1's inequality holds then so do the weaker ones; the first
    // recorded branch is just the earliest, never a different outcome.
    for (i64 d = 2; d <= 40; ++d)
        for (i64 w0 = 1; w0 <= 4; ++w0)
            for (i64 w1 = w0; w1 <= 6; ++w1)
                for (i64 w2 = w1; w2 <= 8; ++w2)
                    for (i64 w3 = w2; w3 <= 10; ++w3) {
                        if (std::gcd(std::gcd(w0, w1), std::gcd(w2, w3)) != 1) continue;
                        i64 I = w0 + w1 + w2 + w3 - d;
                        if (I <= 0) continue;
                        i64 lhs = 2 * I * d;
                        bool b1 = lhs < 3 * w0 * w1, b2 = lhs < 3 * w0 * w2,
                             b3 = lhs < 3 * w0 * w3;
                        if (b1) CHECK(b2);
                        if (b2) CHECK(b3);
                    }
}

TEST_CASE("Lichnerowicz obstruction") {
    // Double series on 4M2 at l=1, k=3.
    auto w = WeightVector::from_sorted({2, 14, 56, 63});
    CHECK(fano_index(w, 126) == 9);
    auto lich = lichnerowicz_obstructed(w, 9);
    CHECK(lich.obstructed);
    CHECK(lich.threshold == 6);

    auto ok = lichnerowicz_obstructed(WeightVector::from_sorted({1, 1, 1, 1}), 2);
    CHECK(!ok.obstructed);
    CHECK(!ok.marginal);

    auto marginal = lichnerowicz_obstructed(WeightVector::from_sorted({1, 1, 1, 1}), 3);
    CHECK(!marginal.obstructed);
    CHECK(marginal.marginal);

    CHECK_THROWS_AS(lichnerowicz_obstructed(w, 0), usage_error);
}

TEST_CASE("Lichnerowicz matches the series thresholds") {
    // (2,2k,k(2n+1),2k(n+1)), I = k+2: obstructed iff k > 4 (k odd).
    for (i64 k = 1; k <= 21; k += 2)
        for (i64 n = 1; n <= 3; ++n) {
            auto w = WeightVector::from_positional(
                {2, 2 * k, k * (2 * n + 1), 2 * k * (n + 1)});
            i64 I = fano_index(w, 4 * k * (n + 1));
            CHECK(I == k + 2);
            CHECK(lichnerowicz_obstructed(w, I).obstructed == (k > 4));
        }

    // Two-parameter family on 4M2: obstruction fires exactly when
    // 2k > 4l-1 or l > 5k+2.
    for (i64 l = 1; l <= 6; ++l)
        for (i64 k = 1; k <= 6; ++k) {
            if (std::gcd(l, 2 * k + 1) != 1) continue;
            std::array<i64, 4> v{2 * l, 2 * (2 * k + 1), (9 * l - 1) * (2 * k + 1),
                                 9 * l * (2 * k + 1)};
            auto w = WeightVector::from_positional(v);
            i64 d = 18 * l * (2 * k + 1);
            i64 I = fano_index(w, d);
            CHECK(I == 2 * l + 2 * k + 1);
            bool expect = (2 * k > 4 * l - 1) || (l > 5 * k + 2);
            CHECK(lichnerowicz_obstructed(w, I).obstructed == expect);
        }
}
