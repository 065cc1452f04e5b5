#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <sstream>

#include "w3j/census.hpp"

using namespace w3j;
using namespace w3j::census;

TEST_CASE("enumerate_symbols small cases") {
    auto s0 = enumerate_symbols(HalfInt(0), true);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0] == ThreeJ{0, 0, 0, 0, 0, 0});

    auto s1 = enumerate_symbols(half(2), true);
    // (0,0,0) plus the three orderings of (1/2, 1/2, 0), two projection
    // assignments each
    CHECK(s1.size() == 7);
    int half_half_zero = 0;
    for (const auto& s : s1)
        if (s.J().twice == 2) ++half_half_zero;
    CHECK(half_half_zero == 6);

    // count grows monotonically in j_max
    size_t prev = 0;
    for (long long j = 0; j <= 6; ++j) {
        auto v = enumerate_symbols(HalfInt(j), true);
        CHECK(v.size() >= prev);
        prev = v.size();
        for (const auto& s : v) {
            CHECK(selection_check(s).physical());
            CHECK((s.alpha + s.beta + s.gamma).twice == 0);
        }
    }

    // integer-only mode excludes half-integer momenta
    for (const auto& s : enumerate_symbols(HalfInt(3), false)) {
        CHECK(s.a.is_integer());
        CHECK(s.b.is_integer());
        CHECK(s.c.is_integer());
    }
}

TEST_CASE("run_census small") {
    CensusConfig cfg;
    cfg.j_max = HalfInt(5);
    cfg.include_half_integer = true;
    auto rep = run_census(cfg);
    CHECK(rep.records.empty());  // no polynomial zeros below the first occurrence
    CHECK(rep.total_scanned > 0);
    CHECK(rep.total_scanned == rep.nonzero + rep.trivial_zero + rep.polynomial_hits);

    cfg.j_max = HalfInt(8);
    auto rep8 = run_census(cfg);
    CHECK(!rep8.records.empty());
    // includes the canonical form of (7/2,3,3/2; 3/2,-1,-1/2)
    ReggeSquare want =
        canonical_form(to_regge(ThreeJ{half(7), 3, half(3), half(3), -1, half(-1)})).first;
    bool found = false;
    for (const auto& rec : rep8.records) found = found || rec.canonical == want;
    CHECK(found);
    // every record re-verifies exactly and dedup is clean
    for (size_t i = 0; i < rep8.records.size(); ++i) {
        CHECK(racah_value(from_regge(rep8.records[i].canonical)).is_zero());
        for (size_t j = i + 1; j < rep8.records.size(); ++j)
            CHECK(!(rep8.records[i].canonical == rep8.records[j].canonical));
    }
}

TEST_CASE("census determinism across jobs") {
    CensusConfig a;
    a.j_max = HalfInt(10);
    a.include_half_integer = true;
    a.jobs = 1;
    CensusConfig b = a;
    b.jobs = 4;
    auto ra = run_census(a);
    auto rb = run_census(b);
    CHECK(ra.total_scanned == rb.total_scanned);
    CHECK(ra.records == rb.records);
    std::ostringstream ja, jb, ca, cb;
    write_jsonl(ra, ja);
    write_jsonl(rb, jb);
    CHECK(ja.str() == jb.str());
    write_csv(ra, ca);
    write_csv(rb, cb);
    CHECK(ca.str() == cb.str());
}

TEST_CASE("filters") {
    CensusConfig cfg;
    cfg.j_max = HalfInt(12);
    cfg.include_half_integer = false;
    cfg.jobs = 4;
    cfg.degree_filter = {{2, 100}};
    auto rep = run_census(cfg);
    for (const auto& rec : rep.records) CHECK(rec.degree >= 2);
}

TEST_CASE("verify_bryant_jahn") {
    CensusConfig cfg;
    cfg.j_max = HalfInt(12);
    cfg.include_half_integer = true;
    cfg.jobs = 4;
    auto rep = run_census(cfg);
    CHECK(verify_bryant_jahn(rep));
    // vacuous on an empty report
    CensusReport empty;
    CHECK(verify_bryant_jahn(empty));
    // negative control: fake record with prime J+1
    CensusReport fake = empty;
    zeros::ZeroRecord rec;
    rec.J = 10;  // J+1 = 11 prime
    fake.records.push_back(rec);
    CHECK(!verify_bryant_jahn(fake));
}

TEST_CASE("cancellation between shards") {
    CensusConfig cfg;
    cfg.j_max = HalfInt(16);
    cfg.include_half_integer = true;
    cfg.jobs = 2;
    std::atomic<bool> cancel{true};
    CHECK_THROWS(run_census(cfg, &cancel));
}

TEST_CASE("jsonl schema") {
    CensusConfig cfg;
    cfg.j_max = HalfInt(8);
    cfg.include_half_integer = true;
    cfg.jobs = 2;
    auto rep = run_census(cfg);
    std::ostringstream os;
    write_jsonl(rep, os);
    std::string line;
    std::istringstream is(os.str());
    size_t lines = 0;
    while (std::getline(is, line)) {
        ++lines;
        CHECK(line.find("\"two_j\"") != std::string::npos);
        CHECK(line.find("\"two_m\"") != std::string::npos);
        CHECK(line.find("\"regge\"") != std::string::npos);
        CHECK(line.find("\"class\": \"polynomial\"") != std::string::npos);
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
    }
    CHECK(lines == rep.records.size());
}
