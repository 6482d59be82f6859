#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "selink/cache.hpp"
#include "selink/record_io.hpp"
#include "selink/search.hpp"
#include "selink/version.hpp"

using namespace selink;

TEST_CASE("targeted type-X search finds the single torsion solution") {
    SearchSpec spec;
    spec.types = {YYType::X};
    spec.bounds = {{{2, 2}, {3, 3}, {5, 5}, {5, 18}}};
    spec.torsion_filter = TorsionFilter::nontrivial;
    auto records = enumerate(spec);
    REQUIRE(records.size() == 1);
    const auto& r = records[0];
    CHECK(r.weights == std::array<i64, 4>{2, 4, 6, 11});
    CHECK(r.degree == 22);
    CHECK(r.manifold == "5M2");
    CHECK(r.verdict.status == SEStatus::certified);
    CHECK(r.verdict.branch == 3);
    REQUIRE(r.exponents.has_value());
    CHECK((*r.exponents)[3] == 8);
}

TEST_CASE("small Brieskorn-Pham enumeration stays positive") {
    SearchSpec spec;
    spec.types = {YYType::I};
    spec.bounds = {{{2, 3}, {2, 3}, {2, 3}, {2, 3}}};
    auto records = enumerate(spec);
    CHECK(!records.empty());
    bool quadric = false, cubic = false;
    for (const auto& r : records) {
        CHECK(r.index > 0);
        // A manifold name is attached exactly for positive quasi-smooth links.
        CHECK(r.manifold.empty() == !(r.index > 0 && r.qs.smooth));
        if (r.weights == std::array<i64, 4>{1, 1, 1, 1} && r.degree == 2) quadric = true;
        if (r.weights == std::array<i64, 4>{1, 1, 1, 1} && r.degree == 3) cubic = true;
    }
    CHECK(quadric);
    CHECK(cubic);
}

TEST_CASE("bounded enumeration covers the certified torsion sphere") {
    SearchSpec spec;
    spec.types = {YYType::I};
    spec.bounds = {{{2, 8}, {2, 8}, {2, 8}, {2, 8}}};
    auto records = enumerate(spec);
    bool found = false;
    for (const auto& r : records)
        if (r.weights == std::array<i64, 4>{3, 3, 8, 12} && r.degree == 24) {
            found = true;
            CHECK(r.manifold == "3M3");
            CHECK(r.verdict.status == SEStatus::certified);
        }
    CHECK(found);
}

TEST_CASE("enumeration is deterministic across worker counts") {
    SearchSpec spec;
    spec.types = {YYType::I, YYType::II, YYType::XIX};
    spec.bounds = {{{2, 6}, {2, 6}, {2, 6}, {2, 6}}};
    spec.jobs = 1;
    auto a = render_records(enumerate(spec), OutputFormat::json);
    spec.jobs = 5;
    auto b = render_records(enumerate(spec), OutputFormat::json);
    CHECK(a == b);
}

TEST_CASE("search rejects invalid specs") {
    SearchSpec spec;
    spec.types = {YYType::VIII};
    spec.bounds = {{{2, 3}, {2, 3}, {2, 3}, {2, 3}}};
    CHECK_THROWS_AS(enumerate(spec), usage_error);
    spec.types = {YYType::I};
    spec.bounds[0] = {1, 3};
    CHECK_THROWS_AS(enumerate(spec), usage_error);
}

TEST_CASE("record JSON round-trip is the identity") {
    SearchSpec spec;
    spec.types = {YYType::II, YYType::X};
    spec.bounds = {{{2, 4}, {2, 4}, {2, 4}, {2, 4}}};
    for (const auto& r : enumerate(spec)) {
        std::string a = record_to_json(r);
        std::string b = record_to_json(record_from_json(a));
        CHECK(a == b);
    }
}

TEST_CASE("CSV and Markdown renderings carry the records") {
    SearchSpec spec;
    spec.types = {YYType::I};
    spec.bounds = {{{2, 2}, {3, 3}, {8, 8}, {8, 8}}};
    auto records = enumerate(spec);
    REQUIRE(records.size() == 1);
    auto csv = render_records(records, OutputFormat::csv);
    CHECK(csv.find("weights,degree,index") == 0);
    CHECK(csv.find("\"3 3 8 12\",24,2") != std::string::npos);
    auto md = render_records(records, OutputFormat::md);
    CHECK(md.find("| (3,3,8,12) | 24 | 2 |") != std::string::npos);
}

TEST_CASE("cache appends, hits byte-identically, and ignores stale versions") {
    std::string path = "selink_test_cache.jsonl";
    std::remove(path.c_str());

    LinkCandidate c = LinkCandidate::from_sorted({2, 4, 6, 11}, 22);
    std::string line = record_to_json(classify(c, "check"));
    std::string key = ResultCache::key({2, 4, 6, 11}, 22);
    {
        ResultCache cache(path);
        CHECK(!cache.lookup(key).has_value());
        cache.store(key, line);
        CHECK(cache.lookup(key) == line);
    }
    {
        ResultCache reopened(path);
        CHECK(reopened.lookup(key) == line);  // persisted and byte-identical
    }

    // A file written by a different engine version contributes nothing.
    std::string stale = "selink_test_cache_stale.jsonl";
    std::remove(stale.c_str());
    {
        std::ofstream out(stale);
        out << "{\"selink_cache\":1,\"engine\":\"selink 0.0.0\"}\n";
        out << "{\"key\":\"" << key << "\",\"record\":\"{}\"}\n";
    }
    {
        ResultCache cache(stale);
        CHECK(!cache.lookup(key).has_value());
        cache.store(key, line);  // appends a fresh header, then the entry
    }
    {
        ResultCache cache(stale);
        CHECK(cache.lookup(key) == line);
    }
    std::remove(path.c_str());
    std::remove(stale.c_str());
}
