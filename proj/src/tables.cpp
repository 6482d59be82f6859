#include "selink/tables.hpp"

#include <algorithm>
#include <set>

#include "selink/errors.hpp"
#include "selink/series.hpp"
#include "selink/yy.hpp"

namespace selink {

namespace {

TableRow row(int table, int n, std::array<i64, 4> a, const char* yy, std::array<i64, 4> w,
             i64 d, i64 index, const char* manifold, char se) {
    TableRow r;
    r.id = "table" + std::to_string(table) + ".row" + std::to_string(n);
    r.table = table;
    r.a = a;
    r.yy = *yy_from_name(yy);
    r.w = w;
    r.d = d;
    r.index = index;
    r.manifold = manifold;
    r.se = se;
    return r;
}

std::vector<TableRow> build_rows() {
    std::vector<TableRow> rows;
    int n = 0;
    auto r2 = [&](std::array<i64, 4> a, const char* yy, std::array<i64, 4> w, i64 d, i64 I,
                  const char* man, char se) { rows.push_back(row(2, ++n, a, yy, w, d, I, man, se)); };
    r2({11, 5, 3, 2}, "VII", {2, 4, 6, 11}, 22, 1, "5M2", 'y');
    r2({7, 7, 3, 2}, "II", {2, 2, 4, 7}, 14, 1, "6M2", 'y');
    r2({27, 7, 3, 2}, "II", {4, 18, 42, 63}, 126, 1, "3M2", 'y');
    r2({14, 9, 3, 2}, "II", {8, 14, 42, 63}, 126, 1, "M2", 'y');
    r2({9, 7, 3, 2}, "II", {4, 6, 14, 21}, 42, 3, "3M2", '?');
    r2({9, 7, 3, 2}, "VII", {4, 6, 14, 19}, 42, 1, "3M2", 'y');
    r2({11, 9, 3, 2}, "II", {18, 20, 66, 99}, 198, 5, "M2", '?');
    r2({11, 9, 3, 2}, "II", {18, 22, 60, 99}, 198, 1, "M2", 'y');
    r2({10, 9, 3, 2}, "II", {8, 10, 30, 45}, 90, 3, "M2", 'y');
    r2({10, 9, 3, 2}, "II", {6, 10, 30, 45}, 90, 1, "M2", 'y');
    r2({15, 7, 3, 2}, "II", {2, 4, 10, 15}, 30, 1, "6M2", 'y');
    r2({12, 9, 3, 2}, "II", {4, 6, 18, 27}, 54, 1, "3M2", 'y');
    r2({17, 4, 3, 2}, "X", {4, 14, 26, 41}, 82, 3, "2M2", '?');
    r2({12, 4, 3, 2}, "X", {4, 10, 18, 29}, 58, 3, "2M2", '?');
    r2({7, 4, 3, 2}, "X", {4, 6, 10, 17}, 34, 3, "2M2", '?');
    r2({15, 5, 3, 2}, "II", {2, 6, 8, 15}, 30, 1, "5M2", 'y');
    r2({5, 5, 5, 2}, "I", {2, 2, 2, 5}, 10, 1, "6M2", 'y');
    r2({6, 5, 5, 2}, "II", {4, 6, 6, 15}, 30, 1, "2M2", 'y');
    r2({7, 5, 5, 2}, "II", {10, 12, 14, 35}, 70, 1, "2M2", 'y');
    r2({9, 9, 3, 2}, "I", {2, 2, 6, 9}, 18, 1, "7M2", 'y');
    r2({21, 7, 3, 2}, "I", {2, 6, 14, 21}, 42, 1, "6M2", 'y');
    r2({15, 9, 3, 2}, "I", {6, 10, 30, 45}, 90, 1, "M2", 'y');

    n = 0;
    auto r3 = [&](std::array<i64, 4> a, const char* yy, std::array<i64, 4> w, i64 d, i64 I,
                  const char* man, char se) { rows.push_back(row(3, ++n, a, yy, w, d, I, man, se)); };
    r3({5, 3, 3, 3}, "IV", {9, 10, 12, 15}, 45, 1, "M∞#M3", 'y');
    r3({8, 4, 3, 2}, "IV", {3, 6, 7, 9}, 24, 1, "M∞#2M3", 'y');
    r3({9, 4, 3, 2}, "VII", {2, 4, 6, 7}, 18, 1, "2M∞#3M2", '?');
    r3({10, 4, 3, 2}, "IV", {4, 10, 12, 15}, 40, 1, "3M∞#M2", 'y');
    r3({6, 4, 4, 2}, "IV", {8, 9, 12, 20}, 48, 1, "M∞#M4", 'y');
    r3({16, 5, 3, 2}, "VII", {3, 9, 13, 24}, 48, 1, "M∞#2M3", 'y');
    r3({6, 4, 2, 2}, "IV", {4, 6, 9, 10}, 24, 5, "M∞#M2", '?');
    r3({6, 4, 4, 2}, "IV", {4, 6, 6, 9}, 24, 1, "M∞#M2", 'y');
    r3({6, 5, 3, 2}, "IV", {10, 12, 16, 25}, 60, 3, "M∞#M2", '?');
    r3({12, 5, 3, 2}, "IV", {10, 24, 32, 55}, 120, 1, "M∞#M2", 'y');
    r3({6, 4, 3, 3}, "II", {4, 5, 8, 8}, 24, 1, "2M∞#M4", 'y');
    r3({8, 6, 4, 2}, "II", {6, 7, 12, 24}, 48, 1, "M∞#M6", 'y');
    r3({12, 4, 4, 2}, "II", {4, 9, 12, 24}, 48, 1, "M∞#M4", 'y');
    r3({7, 6, 4, 2}, "II", {6, 7, 9, 21}, 42, 1, "2M∞#M3", 'y');
    r3({6, 6, 4, 2}, "II", {4, 4, 5, 12}, 24, 1, "M∞#2M4", 'y');
    r3({12, 5, 4, 2}, "II", {5, 11, 15, 30}, 60, 1, "M∞#M5", 'y');
    r3({12, 7, 3, 2}, "II", {7, 8, 28, 42}, 84, 1, "M∞#M7", 'y');
    r3({10, 8, 3, 2}, "II", {4, 5, 12, 20}, 40, 1, "3M∞#M4", 'y');
    r3({8, 8, 3, 2}, "II", {3, 3, 7, 12}, 24, 1, "M∞#3M3", 'y');
    r3({21, 6, 3, 2}, "II", {2, 7, 14, 20}, 42, 1, "6M∞#M2", '?');
    r3({8, 4, 4, 2}, "II", {2, 3, 4, 8}, 16, 1, "5M∞#M2", 'y');
    r3({6, 6, 4, 2}, "I", {2, 2, 3, 6}, 12, 1, "5M∞#2M2", 'y');
    r3({12, 8, 3, 2}, "I", {2, 3, 8, 12}, 24, 1, "6M∞#M2", 'y');
    r3({10, 5, 4, 2}, "I", {2, 4, 5, 10}, 20, 1, "4M∞#2M2", 'y');
    r3({12, 9, 3, 2}, "I", {3, 4, 12, 18}, 36, 1, "4M∞#M3", 'y');
    r3({8, 6, 4, 2}, "I", {3, 4, 6, 12}, 24, 1, "3M∞#M3", 'y');
    r3({12, 10, 3, 2}, "I", {5, 6, 20, 30}, 60, 1, "2M∞#M5", 'y');
    r3({18, 8, 3, 2}, "I", {4, 9, 24, 36}, 72, 1, "2M∞#M4", 'y');
    r3({9, 6, 4, 2}, "I", {4, 6, 9, 18}, 36, 1, "2M∞#M2", 'y');
    r3({12, 6, 3, 2}, "II", {3, 6, 10, 18}, 36, 1, "M∞#2M3", 'y');
    r3({12, 6, 3, 2}, "II", {3, 6, 11, 18}, 36, 2, "M∞#2M3", 'y');
    r3({6, 6, 3, 2}, "II", {3, 3, 5, 9}, 18, 2, "M∞#2M3", 'y');
    r3({20, 5, 4, 2}, "II", {3, 12, 16, 30}, 60, 1, "M∞#2M3", 'y');
    r3({8, 5, 4, 2}, "II", {5, 7, 10, 20}, 40, 2, "M∞#M5", 'y');
    r3({8, 5, 4, 2}, "II", {5, 6, 10, 20}, 40, 1, "M∞#M5", 'y');
    return rows;
}

}  // namespace

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = build_rows();
    return rows;
}

const char* kErrataVersion = "errata-v1";

const std::vector<Erratum>& errata_overlay() {
    static const std::vector<Erratum> errata = {
        {"table2.row7", "se", "?", "SE_certified(branch 2)",
         "for w=(18,20,66,99), d=198, I=5: 2Id=1980 < 3564=3*w0*w2 and the line z0=z1=0 "
         "is not in the variety (z2^3 has degree 198), so the middle klt branch certifies; "
         "the printed '?' is inconsistent with the stated criteria"},
        {"table1.row14", "manifold", "2M3", "M∞#2M3",
         "duplicate of the (3,3k,6k-1,9k) family of table1.row8: b2 evaluates to 1 for all "
         "k >= 1 (checked k <= 20), so the family lives on M∞#2M3; the 2M3 row's intended "
         "weight family is unknown"},
    };
    return errata;
}

namespace {

std::string se_to_string(const ResultRecord& r) {
    if (r.verdict.status == SEStatus::certified)
        return "SE_certified(branch " + std::to_string(r.verdict.branch) + ")";
    if (r.verdict.status == SEStatus::obstructed) return "obstructed";
    return "unknown";
}

bool se_matches(char stated, const ResultRecord& r) {
    if (stated == 'y') return r.verdict.status == SEStatus::certified;
    return r.verdict.status == SEStatus::unknown;
}

void reconcile(AuditReport& rep) {
    std::set<std::string> fired;
    for (const auto& e : rep.entries) {
        if (e.index_match && e.manifold_match && e.se_match) continue;
        std::string base_id = e.row_id.substr(0, e.row_id.find('['));
        bool known = false;
        for (const auto& err : errata_overlay())
            if (err.row_id == base_id) {
                // The overlay pins the engine's computation exactly.
                bool value_ok = (err.field == "se" && e.computed_se == err.engine_computes &&
                                 e.index_match && e.manifold_match) ||
                                (err.field == "manifold" &&
                                 e.computed_manifold == err.engine_computes && e.index_match &&
                                 e.se_match);
                if (value_ok) {
                    known = true;
                    fired.insert(base_id);
                }
            }
        if (!known) rep.unexpected_mismatches.push_back(e.row_id);
    }
    for (auto& e : rep.entries) {
        std::string base_id = e.row_id.substr(0, e.row_id.find('['));
        e.known_erratum = fired.count(base_id) > 0 && !(e.index_match && e.manifold_match &&
                                                        e.se_match);
    }
    // Errata scoped to the audited rows must all have fired.
    std::set<std::string> audited;
    for (const auto& e : rep.entries) audited.insert(e.row_id.substr(0, e.row_id.find('[')));
    for (const auto& err : errata_overlay())
        if (audited.count(err.row_id) && !fired.count(err.row_id))
            rep.stale_errata.push_back(err.row_id);
}

}  // namespace

AuditReport audit_tables() {
    AuditReport rep;
    for (const TableRow& tr : table_rows()) {
        LinkCandidate c = LinkCandidate::from_sorted(tr.w, tr.d);
        c.yy_type = tr.yy;
        ResultRecord r = classify(c, tr.id);

        AuditEntry e;
        e.row_id = tr.id;
        e.computed_index = r.index;
        e.computed_manifold = r.manifold;
        e.computed_se = se_to_string(r);
        e.index_match = r.index == tr.index;
        e.manifold_match = r.manifold == tr.manifold;
        e.se_match = se_matches(tr.se, r);
        Realization real = realize(tr.yy, tr.a, tr.w, tr.d);
        e.realize_status = real.realized
                               ? (real.perturbed ? "perturbed: " + real.describe()
                                                 : "exact: " + real.describe())
                               : "unrealized";
        e.record = std::move(r);
        rep.entries.push_back(std::move(e));
    }
    reconcile(rep);
    return rep;
}

AuditReport audit_series(i64 pmax) {
    AuditReport rep;
    for (const SeriesFamily& f : series_families()) {
        for (i64 k = 1; k <= (f.uses_k ? pmax : 1); ++k)
            for (i64 n = 1; n <= (f.uses_n ? pmax : 1); ++n) {
                auto c = instantiate_series(f, k, n);
                if (!c) continue;
                std::string inst_id =
                    f.id + "[k=" + std::to_string(k) + (f.uses_n ? ",n=" + std::to_string(n) : "") +
                    "]";
                ResultRecord r = classify(*c, inst_id);

                AuditEntry e;
                e.row_id = inst_id;
                e.computed_index = r.index;
                e.computed_manifold = r.manifold;
                e.computed_se = se_to_string(r);
                e.index_match = r.index == f.expected_index(k, n);
                e.manifold_match = r.manifold == f.expected_manifold(k, n).name();
                switch (f.se) {
                    case SeriesSE::yes:
                        e.se_match = r.verdict.status == SEStatus::certified;
                        break;
                    case SeriesSE::unknown:
                        e.se_match = r.verdict.status == SEStatus::unknown;
                        break;
                    case SeriesSE::no_if_k_gt_4:
                        e.se_match = (k > 4) == (r.verdict.status == SEStatus::obstructed);
                        break;
                }
                e.realize_status = "n/a";
                e.record = std::move(r);
                rep.entries.push_back(std::move(e));
            }
    }
    reconcile(rep);
    return rep;
}

}  // namespace selink
