#include "selink/series.hpp"

#include <numeric>

#include "selink/errors.hpp"

namespace selink {

namespace {

SmaleManifold mk(i64 k, std::vector<std::pair<i64, i64>> factors) {
    SmaleManifold m;
    m.k = k;
    m.factors = std::move(factors);
    return m;
}

std::vector<SeriesFamily> build_families() {
    std::vector<SeriesFamily> fams;
    auto any = [](i64, i64) { return true; };
    auto k_odd = [](i64 k, i64) { return k % 2 == 1; };
    auto k_not3 = [](i64 k, i64) { return k % 3 != 0; };

    fams.push_back({"table1.row1", "(2,2k,k(2n+1),2k(n+1))", "(k,2)=1", true, true,
                    [](i64 k, i64 n) {
                        return std::array<i64, 4>{2, 2 * k, k * (2 * n + 1), 2 * k * (n + 1)};
                    },
                    [](i64 k, i64 n) { return 4 * k * (n + 1); }, k_odd,
                    [](i64 k, i64) { return k + 2; },
                    [](i64, i64 n) { return mk(1, {{2, n}}); }, SeriesSE::no_if_k_gt_4});

    fams.push_back({"table1.row2", "(2,4,4n,4n+1)", "", false, true,
                    [](i64, i64 n) {
                        return std::array<i64, 4>{2, 4, 4 * n, 4 * n + 1};
                    },
                    [](i64, i64 n) { return 4 * (2 * n + 1); }, any,
                    [](i64, i64) { return 3; },
                    [](i64, i64 n) { return mk(2, {{2, n}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row3", "(4,4k+2,4k+3,2(4k+3))", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{4, 4 * k + 2, 4 * k + 3, 2 * (4 * k + 3)};
                    },
                    [](i64 k, i64) { return 4 * (4 * k + 3); }, any,
                    [](i64, i64) { return 3; },
                    [](i64, i64) { return mk(2, {{2, 1}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row4", "(4,4k-1,4k,8k)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{4, 4 * k - 1, 4 * k, 8 * k};
                    },
                    [](i64 k, i64) { return 16 * k; }, any, [](i64, i64) { return 3; },
                    [](i64, i64) { return mk(1, {{4, 1}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row5", "(2,3k+2,4k+2,2(3k+2))", "(k,2)=1", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{2, 3 * k + 2, 4 * k + 2, 2 * (3 * k + 2)};
                    },
                    [](i64 k, i64) { return 4 * (3 * k + 2); }, k_odd,
                    [](i64 k, i64) { return k + 2; },
                    [](i64, i64) { return mk(3, {{2, 1}}); }, SeriesSE::no_if_k_gt_4});

    fams.push_back({"table1.row6", "(3,3k+2,3(2k+1),3(3k+2))", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{3, 3 * k + 2, 3 * (2 * k + 1), 3 * (3 * k + 2)};
                    },
                    [](i64 k, i64) { return 6 * (3 * k + 2); }, any,
                    [](i64, i64) { return 2; },
                    [](i64, i64) { return mk(3, {{3, 1}}); }, SeriesSE::yes});

    fams.push_back({"table1.row7", "(6,3(2k+1),4(3k+1),9(2k+1))", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{6, 3 * (2 * k + 1), 4 * (3 * k + 1),
                                                  9 * (2 * k + 1)};
                    },
                    [](i64 k, i64) { return 18 * (2 * k + 1); }, any,
                    [](i64, i64) { return 4; },
                    [](i64, i64) { return mk(1, {{3, 1}}); }, SeriesSE::yes});

    fams.push_back({"table1.row8", "(3,3k,6k-1,9k)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{3, 3 * k, 6 * k - 1, 9 * k};
                    },
                    [](i64 k, i64) { return 18 * k; }, any, [](i64, i64) { return 2; },
                    [](i64, i64) { return mk(1, {{3, 2}}); }, SeriesSE::yes});

    fams.push_back({"table1.row9", "(3,3k-1,3k,3k)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{3, 3 * k - 1, 3 * k, 3 * k};
                    },
                    [](i64 k, i64) { return 9 * k; }, any, [](i64, i64) { return 2; },
                    [](i64, i64) { return mk(2, {{3, 1}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row10", "(2,2k+1,2(2k+1),2(3k+1))", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{2, 2 * k + 1, 2 * (2 * k + 1), 2 * (3 * k + 1)};
                    },
                    [](i64 k, i64) { return 6 * (2 * k + 1); }, any,
                    [](i64, i64) { return 1; },
                    [](i64, i64) { return mk(6, {{2, 1}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row11", "(2,2k,4k,6k-1)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{2, 2 * k, 4 * k, 6 * k - 1};
                    },
                    [](i64 k, i64) { return 12 * k; }, any, [](i64, i64) { return 1; },
                    [](i64, i64) { return mk(2, {{2, 4}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row12", "(6,2k,4k,3(2k-1))", "(k,3)=1", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{6, 2 * k, 4 * k, 3 * (2 * k - 1)};
                    },
                    [](i64 k, i64) { return 12 * k; }, k_not3, [](i64, i64) { return 3; },
                    [](i64, i64) { return mk(2, {{2, 1}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row13", "(2,2k,2k,4k-1)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{2, 2 * k, 2 * k, 4 * k - 1};
                    },
                    [](i64 k, i64) { return 8 * k; }, any, [](i64, i64) { return 1; },
                    [](i64, i64) { return mk(3, {{2, 3}}); }, SeriesSE::unknown});

    fams.push_back({"table1.row14", "(3,3k,6k-1,9k)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{3, 3 * k, 6 * k - 1, 9 * k};
                    },
                    [](i64 k, i64) { return 18 * k; }, any, [](i64, i64) { return 2; },
                    [](i64, i64) { return mk(0, {{3, 2}}); }, SeriesSE::yes});

    fams.push_back({"table1.row15", "(4,3(2k+1),4(2k+1),4(3k+1))", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{4, 3 * (2 * k + 1), 4 * (2 * k + 1),
                                                  4 * (3 * k + 1)};
                    },
                    [](i64 k, i64) { return 12 * (2 * k + 1); }, any,
                    [](i64 k, i64) { return 2 * k + 3; },
                    [](i64, i64) { return mk(0, {{4, 1}}); }, SeriesSE::no_if_k_gt_4});

    fams.push_back({"table1.row16", "(6,6k-1,12k,18k)", "", true, false,
                    [](i64 k, i64) {
                        return std::array<i64, 4>{6, 6 * k - 1, 12 * k, 18 * k};
                    },
                    [](i64 k, i64) { return 36 * k; }, any, [](i64, i64) { return 5; },
                    [](i64, i64) { return mk(0, {{6, 1}}); }, SeriesSE::unknown});

    return fams;
}

}  // namespace

const std::vector<SeriesFamily>& series_families() {
    static const std::vector<SeriesFamily> fams = build_families();
    return fams;
}

const SeriesFamily& series_family(const std::string& id) {
    for (const auto& f : series_families())
        if (f.id == id) return f;
    throw usage_error("unknown series family: " + id);
}

std::optional<LinkCandidate> instantiate_series(const SeriesFamily& f, i64 k, i64 n) {
    if ((f.uses_k && k < 1) || (f.uses_n && n < 1))
        throw usage_error("series parameters must be >= 1");
    if (!f.side_ok(k, n)) return std::nullopt;

    std::array<i64, 4> w = f.weights(k, n);
    i64 d = f.degree(k, n);
    i64 g = gcd_vec(std::span<const i64>(w.data(), 4));
    if (g != 1)
        throw inconsistency_error("family " + f.id + " at k=" + std::to_string(k) +
                                  ",n=" + std::to_string(n) + " has gcd " + std::to_string(g) +
                                  " despite passing its side conditions");
    LinkCandidate c = LinkCandidate::from_positional(w, d);
    if (c.index() != f.expected_index(k, n))
        throw inconsistency_error("family " + f.id + " index mismatch at k=" +
                                  std::to_string(k) + ",n=" + std::to_string(n) + ": computed " +
                                  std::to_string(c.index()) + ", formula gives " +
                                  std::to_string(f.expected_index(k, n)));
    return c;
}

}  // namespace selink
