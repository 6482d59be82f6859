#include "selink/search.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "selink/errors.hpp"
#include "selink/yy.hpp"

namespace selink {

namespace {

struct Key {
    std::array<i64, 4> w;
    i64 d;
    auto operator<=>(const Key&) const = default;
};

struct Provenance {
    int type_index;
    std::array<i64, 4> a;
    auto operator<=>(const Provenance&) const = default;
};

struct WorkItem {
    YYType type;
    int type_index;
    i64 a0;
};

}  // namespace

SearchSpec SearchSpec::standard_sweep(i64 max_exponent, int jobs) {
    SearchSpec s;
    for (const auto& e : yy_catalog())
        if (e.standard) s.types.push_back(e.id);
    for (auto& b : s.bounds) b = {2, max_exponent};
    s.jobs = jobs;
    return s;
}

std::vector<ResultRecord> enumerate(const SearchSpec& spec) {
    for (YYType t : spec.types)
        if (!yy_is_standard(t))
            throw usage_error(std::string("search covers standard types only, got ") +
                              yy_name(t));
    for (const auto& [lo, hi] : spec.bounds)
        if (lo < 2) throw usage_error("exponent bounds must be >= 2");

    std::vector<WorkItem> items;
    for (size_t ti = 0; ti < spec.types.size(); ++ti)
        for (i64 a0 = spec.bounds[0].first; a0 <= spec.bounds[0].second; ++a0)
            items.push_back({spec.types[ti], int(ti), a0});

    const int jobs = std::max(1, spec.jobs);
    std::vector<std::map<Key, Provenance>> partial(jobs);
    std::vector<std::exception_ptr> errors(jobs);

    auto worker = [&](int id) {
        try {
            auto& mine = partial[id];
            for (size_t n = id; n < items.size(); n += size_t(jobs)) {
                const WorkItem& it = items[n];
                std::array<i64, 4> a{it.a0, 0, 0, 0};
                for (a[1] = spec.bounds[1].first; a[1] <= spec.bounds[1].second; ++a[1])
                    for (a[2] = spec.bounds[2].first; a[2] <= spec.bounds[2].second; ++a[2])
                        for (a[3] = spec.bounds[3].first; a[3] <= spec.bounds[3].second; ++a[3]) {
                            ExpSolution sol;
                            try {
                                sol = solve_exponent_system(yy_exponent_matrix(it.type, a));
                            } catch (const usage_error&) {
                                continue;  // singular or non-positive system
                            }
                            Key k{sol.weights().w, sol.d};
                            Provenance p{it.type_index, a};
                            auto [pos, inserted] = mine.emplace(k, p);
                            if (!inserted && p < pos->second) pos->second = p;
                        }
            }
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    // Merge keeps the canonically smallest provenance per key.
    std::map<Key, Provenance> merged;
    for (auto& part : partial)
        for (auto& [k, p] : part) {
            auto [pos, inserted] = merged.emplace(k, p);
            if (!inserted && p < pos->second) pos->second = p;
        }

    std::vector<std::pair<Key, Provenance>> unique(merged.begin(), merged.end());
    std::vector<ResultRecord> records(unique.size());
    std::vector<char> keep(unique.size(), 0);
    std::vector<std::exception_ptr> cerrors(jobs);

    auto classify_worker = [&](int id) {
        try {
            for (size_t n = id; n < unique.size(); n += size_t(jobs)) {
                const auto& [key, prov] = unique[n];
                LinkCandidate c = LinkCandidate::from_sorted(key.w, key.d);
                c.yy_type = spec.types[prov.type_index];
                c.exponents = prov.a;
                std::string pstr = std::string("search:") + yy_name(*c.yy_type) + ":a=";
                for (int i = 0; i < 4; ++i)
                    pstr += (i ? "," : "") + std::to_string(prov.a[i]);
                ResultRecord r = classify(c, pstr, spec.classify);

                bool ok = true;
                if (spec.verdict_filter && r.verdict.status != *spec.verdict_filter) ok = false;
                if (spec.torsion_filter == TorsionFilter::nontrivial && r.torsion.empty())
                    ok = false;
                if (spec.torsion_filter == TorsionFilter::trivial && !r.torsion.empty())
                    ok = false;
                if (spec.index_min && r.index < *spec.index_min) ok = false;
                if (spec.index_max && r.index > *spec.index_max) ok = false;
                if (spec.manifold_filter && r.manifold != *spec.manifold_filter) ok = false;
                records[n] = std::move(r);
                keep[n] = ok ? 1 : 0;
            }
        } catch (...) {
            cerrors[id] = std::current_exception();
        }
    };

    if (jobs == 1) {
        classify_worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < jobs; ++id) pool.emplace_back(classify_worker, id);
        for (auto& t : pool) t.join();
    }
    for (auto& e : cerrors)
        if (e) std::rethrow_exception(e);

    std::vector<ResultRecord> out;
    for (size_t n = 0; n < unique.size(); ++n)
        if (keep[n]) out.push_back(std::move(records[n]));
    std::sort(out.begin(), out.end(), [](const ResultRecord& a, const ResultRecord& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.weights < b.weights;
    });
    return out;
}

}  // namespace selink
