// Bundled reference tables of links (the sporadic rational-homology-sphere
// and mixed-type rows, plus the series table) together with a versioned
// errata overlay, and the audit comparing every row against the engine.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "selink/classify.hpp"
#include "selink/yy_type.hpp"

namespace selink {

struct TableRow {
    std::string id;  // "table2.row7"
    int table;       // 2 or 3
    std::array<i64, 4> a;  // exponent multiset as printed (descending)
    YYType yy;
    std::array<i64, 4> w;  // sorted ascending
    i64 d;
    i64 index;
    std::string manifold;  // canonical engine naming
    char se;               // 'y' = yes, '?' = unknown
};

const std::vector<TableRow>& table_rows();  // tables 2 and 3

struct Erratum {
    std::string row_id;
    std::string field;  // "se" or "manifold"
    std::string row_says;
    std::string engine_computes;
    std::string note;
};

// Rows whose printed data the audit proves inconsistent with the engine.
const std::vector<Erratum>& errata_overlay();
extern const char* kErrataVersion;

struct AuditEntry {
    std::string row_id;
    bool index_match = false;
    bool manifold_match = false;
    bool se_match = false;
    i64 computed_index = 0;
    std::string computed_manifold;
    std::string computed_se;
    bool known_erratum = false;  // mismatch covered by the errata overlay
    std::string realize_status;  // how the printed exponents fit the type
    ResultRecord record;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    // Mismatching rows not covered by the overlay (must be empty), and
    // overlay entries that never fired (must also be empty).
    std::vector<std::string> unexpected_mismatches;
    std::vector<std::string> stale_errata;
    bool clean_modulo_errata() const {
        return unexpected_mismatches.empty() && stale_errata.empty();
    }
};

// Audits tables 2 and 3 row by row; mismatches never abort.
AuditReport audit_tables();

// Audits the series table at parameters k, n in [1, pmax] (valid under each
// family's side conditions). Entry row_ids carry the instantiation.
AuditReport audit_series(i64 pmax = 5);

}  // namespace selink
