// selink: classification and search CLI for 5-dimensional links of weighted
// homogeneous hypersurface singularities.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical inconsistency.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "selink/cache.hpp"
#include "selink/classify.hpp"
#include "selink/record_io.hpp"
#include "selink/search.hpp"
#include "selink/series.hpp"
#include "selink/tables.hpp"
#include "selink/version.hpp"
#include "selink/yy.hpp"

using namespace selink;

namespace {

std::vector<i64> parse_int_list(const std::string& s, char sep) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) continue;
        size_t used = 0;
        i64 v = std::stoll(tok, &used);
        if (used != tok.size()) throw usage_error("cannot parse integer: " + tok);
        out.push_back(v);
    }
    return out;
}

std::array<i64, 4> parse_quad(const std::string& s, const char* what) {
    auto v = parse_int_list(s, ',');
    if (v.size() != 4) throw usage_error(std::string(what) + " needs exactly four integers");
    return {v[0], v[1], v[2], v[3]};
}

std::pair<i64, i64> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        i64 v = std::stoll(s);
        return {v, v};
    }
    i64 lo = std::stoll(s.substr(0, dots));
    i64 hi = std::stoll(s.substr(dots + 2));
    if (lo > hi) throw usage_error("empty range: " + s);
    return {lo, hi};
}

std::vector<Monomial> parse_support(const std::string& s) {
    std::vector<Monomial> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        Monomial m;
        m.e = parse_quad(tok, "support monomial");
        out.push_back(m);
    }
    return out;
}

void print_record(const ResultRecord& r, OutputFormat f) {
    std::vector<ResultRecord> one{r};
    std::cout << render_records(one, f);
}

std::string cache_path_from_env(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("SELINK_CACHE");
    return env ? std::string(env) : std::string();
}

int run(int argc, char** argv) {
    CLI::App app{"exact classifier for 5-dimensional links of weighted homogeneous "
                 "hypersurface singularities"};
    app.set_version_flag("--version", std::string(kEngineVersion));
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    app.add_option("--format", format, "output format: json, csv, md")->capture_default_str();
    bool strict_pairs = false;
    app.add_flag("--strict-pairs", strict_pairs,
                 "strict reading of quasi-smoothness condition 3 (distinct auxiliary "
                 "variables required)");

    // check
    auto* check = app.add_subcommand("check", "classify a link from weights and degree");
    std::string w_str, support_str, cache_flag;
    i64 degree = 0;
    check->add_option("-w,--weights", w_str, "four positive weights, e.g. 12,8,3,3")
        ->required();
    check->add_option("-d,--degree", degree, "degree")->required();
    check->add_option("--support", support_str,
                      "explicit support: monomial exponent quadruples, e.g. "
                      "'2,0,0,0;0,3,1,0' (same coordinate order as -w)");
    check->add_option("--cache", cache_flag, "cache file (default: $SELINK_CACHE)");
    bool no_cache = false;
    check->add_flag("--no-cache", no_cache, "bypass the cache");

    // solve
    auto* solve = app.add_subcommand("solve", "derive weights from a normal-form type and "
                                              "exponents, then classify");
    std::string type_str, a_str;
    solve->add_option("--type", type_str, "standard type: I..VII, X, XI, XIX")->required();
    solve->add_option("-a,--exponents", a_str, "four exponents, e.g. 2,3,5,8")->required();

    // search
    auto* search = app.add_subcommand("search", "bounded enumeration over exponent space");
    std::string types_str = "I,II,III,IV,V,VI,VII,X,XI,XIX";
    std::array<std::string, 4> slot = {"2..12", "2..12", "2..12", "2..12"};
    std::string torsion_str = "any", verdict_str = "any", manifold_str;
    int jobs = 1;
    i64 index_min = 0, index_max = 0;
    bool has_imin = false, has_imax = false;
    search->add_option("--types", types_str, "comma-separated standard types")
        ->capture_default_str();
    search->add_option("--a0", slot[0], "range for exponent slot 0, e.g. 2..12 or 2")
        ->capture_default_str();
    search->add_option("--a1", slot[1], "range for exponent slot 1")->capture_default_str();
    search->add_option("--a2", slot[2], "range for exponent slot 2")->capture_default_str();
    search->add_option("--a3", slot[3], "range for exponent slot 3")->capture_default_str();
    search->add_option("--torsion", torsion_str, "filter: any, nontrivial, trivial")
        ->capture_default_str();
    search->add_option("--verdict", verdict_str,
                       "filter: any, certified, unknown, obstructed")
        ->capture_default_str();
    search->add_option("--manifold", manifold_str, "filter by canonical manifold name");
    search->add_option("--index-min", index_min, "minimum index");
    search->add_option("--index-max", index_max, "maximum index");
    search->add_option("--jobs", jobs, "worker threads (output is order-independent)")
        ->capture_default_str();

    // series
    auto* series = app.add_subcommand("series", "instantiate a parametric weight family");
    std::string family_str, k_str = "1..5", n_str = "1..5";
    bool list_families = false;
    series->add_option("--family", family_str, "family id, e.g. table1.row7");
    series->add_option("--k", k_str, "range for parameter k")->capture_default_str();
    series->add_option("--n", n_str, "range for parameter n")->capture_default_str();
    series->add_flag("--list", list_families, "list family ids and definitions");

    // tables
    auto* tables = app.add_subcommand("tables", "audit the bundled reference tables");
    int which_table = 0;
    tables->add_option("--table", which_table, "restrict to table 1, 2, or 3 (default all)");

    // catalog
    app.add_subcommand("catalog", "export the normal-form catalog as JSON");

    CLI11_PARSE(app, argc, argv);
    OutputFormat fmt = parse_format(format);
    ClassifyOptions copts;
    copts.qs.strict_condition3 = strict_pairs;

    if (check->parsed()) {
        std::array<i64, 4> w = parse_quad(w_str, "-w");
        LinkCandidate c = LinkCandidate::from_positional(w, degree);
        if (!support_str.empty()) {
            // Reorder user monomials into sorted-coordinate order.
            auto positional = parse_support(support_str);
            std::vector<Monomial> sorted_support;
            for (const Monomial& m : positional) {
                Monomial s;
                for (int k = 0; k < 4; ++k) s.e[k] = m.e[c.weights.pos[k]];
                if (s.degree(c.weights.w) != degree)
                    throw usage_error("support monomial " + m.str() + " does not have degree " +
                                      std::to_string(degree));
                sorted_support.push_back(s);
            }
            c.support = sorted_support;
        }

        std::string cache_path = cache_path_from_env(cache_flag);
        bool cacheable = support_str.empty() && !no_cache && !cache_path.empty() &&
                         !strict_pairs;
        if (cacheable) {
            ResultCache cache(cache_path);
            std::string key = ResultCache::key(c.weights.w, degree);
            if (auto hit = cache.lookup(key)) {
                if (fmt == OutputFormat::json)
                    std::cout << *hit << "\n";
                else
                    print_record(record_from_json(*hit), fmt);
                return 0;
            }
            ResultRecord r = classify(c, "check", copts);
            cache.store(key, record_to_json(r));
            print_record(r, fmt);
            return 0;
        }
        print_record(classify(c, "check", copts), fmt);
        return 0;
    }

    if (solve->parsed()) {
        auto t = yy_from_name(type_str);
        if (!t) throw usage_error("unknown type: " + type_str);
        if (!yy_is_standard(*t))
            throw usage_error("type " + type_str +
                              " is not standard; its weights are not determined by a square "
                              "system");
        LinkCandidate c = weights_for(*t, parse_quad(a_str, "-a"));
        print_record(classify(c, std::string("solve:") + yy_name(*t), copts), fmt);
        return 0;
    }

    if (search->parsed()) {
        SearchSpec spec;
        std::stringstream ss(types_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto t = yy_from_name(tok);
            if (!t) throw usage_error("unknown type: " + tok);
            spec.types.push_back(*t);
        }
        for (int i = 0; i < 4; ++i) spec.bounds[i] = parse_range(slot[i]);
        if (torsion_str == "nontrivial")
            spec.torsion_filter = TorsionFilter::nontrivial;
        else if (torsion_str == "trivial")
            spec.torsion_filter = TorsionFilter::trivial;
        else if (torsion_str != "any")
            throw usage_error("unknown torsion filter: " + torsion_str);
        if (verdict_str == "certified")
            spec.verdict_filter = SEStatus::certified;
        else if (verdict_str == "unknown")
            spec.verdict_filter = SEStatus::unknown;
        else if (verdict_str == "obstructed")
            spec.verdict_filter = SEStatus::obstructed;
        else if (verdict_str != "any")
            throw usage_error("unknown verdict filter: " + verdict_str);
        has_imin = search->count("--index-min") > 0;
        has_imax = search->count("--index-max") > 0;
        if (has_imin) spec.index_min = index_min;
        if (has_imax) spec.index_max = index_max;
        if (!manifold_str.empty()) spec.manifold_filter = manifold_str;
        if (jobs < 1) throw usage_error("--jobs must be >= 1");
        spec.jobs = jobs;
        spec.classify = copts;
        std::cout << render_records(enumerate(spec), fmt);
        return 0;
    }

    if (series->parsed()) {
        if (list_families) {
            for (const auto& f : series_families()) {
                std::cout << f.id << "  w=" << f.weights_str;
                if (!f.side_str.empty()) std::cout << "  " << f.side_str;
                std::cout << "\n";
            }
            return 0;
        }
        if (family_str.empty()) throw usage_error("--family (or --list) is required");
        const SeriesFamily& f = series_family(family_str);
        auto [klo, khi] = parse_range(k_str);
        auto [nlo, nhi] = parse_range(n_str);
        std::vector<ResultRecord> records;
        for (i64 k = (f.uses_k ? klo : 1); k <= (f.uses_k ? khi : 1); ++k)
            for (i64 n = (f.uses_n ? nlo : 1); n <= (f.uses_n ? nhi : 1); ++n) {
                auto c = instantiate_series(f, k, n);
                if (!c) continue;
                std::string prov = f.id + "[k=" + std::to_string(k) +
                                   (f.uses_n ? ",n=" + std::to_string(n) : "") + "]";
                records.push_back(classify(*c, prov, copts));
            }
        std::cout << render_records(records, fmt);
        return 0;
    }

    if (tables->parsed()) {
        std::vector<AuditReport> reports;
        if (which_table == 0 || which_table == 1) reports.push_back(audit_series());
        if (which_table == 0 || which_table == 2 || which_table == 3) {
            AuditReport all = audit_tables();
            for (int t : {2, 3}) {
                if (which_table != 0 && which_table != t) continue;
                AuditReport filtered;
                std::string prefix = "table" + std::to_string(t) + ".";
                for (auto& e : all.entries)
                    if (e.row_id.rfind(prefix, 0) == 0) filtered.entries.push_back(e);
                filtered.unexpected_mismatches = all.unexpected_mismatches;
                filtered.stale_errata = all.stale_errata;
                reports.push_back(std::move(filtered));
            }
        }
        bool clean = true;
        for (const auto& rep : reports) {
            if (fmt == OutputFormat::md)
                std::cout << "| row | w | d | I | manifold | verdict | match | note |\n"
                          << "|---|---|---|---|---|---|---|---|\n";
            for (const auto& e : rep.entries) {
                bool match = e.index_match && e.manifold_match && e.se_match;
                std::string note = match ? "" : (e.known_erratum ? "known erratum" : "MISMATCH");
                if (fmt == OutputFormat::md) {
                    std::string ws = "(";
                    for (int i = 0; i < 4; ++i)
                        ws += (i ? "," : "") + std::to_string(e.record.weights[i]);
                    ws += ")";
                    std::cout << "| " << e.row_id << " | " << ws << " | " << e.record.degree
                              << " | " << e.computed_index << " | " << e.computed_manifold
                              << " | " << e.computed_se << " | " << (match ? "yes" : "no")
                              << " | " << note << " |\n";
                } else {
                    nlohmann::ordered_json j;
                    j["row"] = e.row_id;
                    j["match"] = match;
                    j["known_erratum"] = e.known_erratum;
                    j["computed_index"] = e.computed_index;
                    j["computed_manifold"] = e.computed_manifold;
                    j["computed_se"] = e.computed_se;
                    j["realize"] = e.realize_status;
                    std::cout << j.dump() << "\n";
                }
            }
            if (!rep.clean_modulo_errata()) clean = false;
            if (fmt == OutputFormat::md) std::cout << "\n";
        }
        if (!clean) {
            std::cerr << "audit found mismatches outside the errata overlay\n";
            return 2;
        }
        return 0;
    }

    // catalog
    std::cout << yy_catalog_json() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const inconsistency_error& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
