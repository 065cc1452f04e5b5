#include "w3j/census.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "w3j/errors.hpp"
#include "w3j/factorials.hpp"

namespace w3j::census {

unsigned long long CensusReport::count_reduced() const {
    unsigned long long n = 0;
    for (const auto& rec : records)
        if (rec.degree >= 1 && rec.canonical.min_entry() >= 1) ++n;
    return n;
}

std::vector<std::array<long long, 3>> triangle_triples(HalfInt j_max, bool include_half_integer) {
    std::vector<std::array<long long, 3>> out;
    long long JM = j_max.twice;
    long long step = include_half_integer ? 1 : 2;
    for (long long A = 0; A <= JM; A += step)
        for (long long B = 0; A + B <= JM; B += step)
            for (long long C = std::llabs(A - B); C <= std::min(A + B, JM - A - B); C += 2)
                out.push_back({A, B, C});
    return out;
}

void for_each_projection(const std::array<long long, 3>& abc,
                         const std::function<void(const ThreeJ&)>& fn) {
    auto [A, B, C] = abc;
    for (long long al = -A; al <= A; al += 2)
        for (long long be = -B; be <= B; be += 2) {
            long long ga = -al - be;
            if (ga < -C || ga > C) continue;
            fn(ThreeJ{half(A), half(B), half(C), half(al), half(be), half(ga)});
        }
}

std::vector<ThreeJ> enumerate_symbols(HalfInt j_max, bool include_half_integer) {
    std::vector<ThreeJ> out;
    for (const auto& t : triangle_triples(j_max, include_half_integer))
        for_each_projection(t, [&](const ThreeJ& s) { out.push_back(s); });
    return out;
}

void parallel_shards(size_t n_shards, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1) {
        for (size_t i = 0; i < n_shards; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n_shards) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

CensusReport run_census(const CensusConfig& cfg, const std::atomic<bool>* cancel) {
    auto t0 = std::chrono::steady_clock::now();
    CensusReport rep;
    auto triples = triangle_triples(cfg.j_max, cfg.include_half_integer);
    fact::ensure(cfg.j_max.twice + 2);
    fact::factored(cfg.j_max.twice + 2);

    struct ShardOut {
        unsigned long long scanned = 0, nonzero = 0, trivial = 0, poly = 0;
        std::vector<zeros::ZeroRecord> records;
    };
    std::vector<ShardOut> shards(triples.size());

    parallel_shards(triples.size(), cfg.jobs, [&](size_t i) {
        if (cancel && cancel->load(std::memory_order_relaxed)) return;
        ShardOut& out = shards[i];
        for_each_projection(triples[i], [&](const ThreeJ& s) {
            ++out.scanned;
            if (!racah_is_zero(s)) {
                ++out.nonzero;
                return;
            }
            ReggeSquare r = to_regge(s);
            if (symmetry_forced_zero(r)) {
                ++out.trivial;
                return;
            }
            ++out.poly;
            out.records.push_back(zeros::make_record(s, "census"));
        });
    });
    if (cancel && cancel->load(std::memory_order_relaxed))
        throw OutOfDomain("census cancelled");

    std::map<ReggeSquare, zeros::ZeroRecord> dedup;
    for (auto& sh : shards) {
        rep.total_scanned += sh.scanned;
        rep.nonzero += sh.nonzero;
        rep.trivial_zero += sh.trivial;
        rep.polynomial_hits += sh.poly;
        for (auto& rec : sh.records) dedup.emplace(rec.canonical, std::move(rec));
    }
    for (auto& [sq, rec] : dedup) {
        if (cfg.degree_filter &&
            (rec.degree < cfg.degree_filter->first || rec.degree > cfg.degree_filter->second))
            continue;
        if (cfg.order_filter &&
            (rec.order < cfg.order_filter->first || rec.order > cfg.order_filter->second))
            continue;
        // re-verify before emitting
        if (!racah_value(from_regge(rec.canonical)).is_zero())
            throw domain_error("census record failed re-verification: " + rec.canonical.str());
        rep.table[{rec.degree, rec.order}]++;
        rep.records.push_back(rec);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

bool verify_bryant_jahn(const CensusReport& report) {
    for (const auto& rec : report.records)
        if (is_prime(rec.J + 1)) return false;
    return true;
}

namespace {

void write_record_fields(const zeros::ZeroRecord& rec, std::ostream& os, bool json) {
    ThreeJ s = from_regge(rec.canonical);
    auto arr = [&](const char* key, std::initializer_list<long long> vals) {
        if (json) {
            os << "\"" << key << "\": [";
            bool first = true;
            for (long long v : vals) {
                if (!first) os << ", ";
                os << v;
                first = false;
            }
            os << "]";
        } else {
            bool first = true;
            for (long long v : vals) {
                if (!first) os << ",";
                os << v;
                first = false;
            }
        }
    };
    if (json) {
        os << "{";
        arr("two_j", {s.a.twice, s.b.twice, s.c.twice});
        os << ", ";
        arr("two_m", {s.alpha.twice, s.beta.twice, s.gamma.twice});
        os << ", ";
        arr("regge", {rec.canonical.r[0][0], rec.canonical.r[0][1], rec.canonical.r[0][2],
                      rec.canonical.r[1][0], rec.canonical.r[1][1], rec.canonical.r[1][2],
                      rec.canonical.r[2][0], rec.canonical.r[2][1], rec.canonical.r[2][2]});
        os << ", \"J\": " << rec.J << ", \"degree\": " << rec.degree
           << ", \"order\": " << rec.order << ", \"class\": \"polynomial\", \"generator\": \""
           << rec.generator << "\"}";
    } else {
        arr("", {s.a.twice, s.b.twice, s.c.twice});
        os << ",";
        arr("", {s.alpha.twice, s.beta.twice, s.gamma.twice});
        os << ",";
        arr("", {rec.canonical.r[0][0], rec.canonical.r[0][1], rec.canonical.r[0][2],
                 rec.canonical.r[1][0], rec.canonical.r[1][1], rec.canonical.r[1][2],
                 rec.canonical.r[2][0], rec.canonical.r[2][1], rec.canonical.r[2][2]});
        os << "," << rec.J << "," << rec.degree << "," << rec.order << ",polynomial,"
           << rec.generator;
    }
}

}  // namespace

void write_jsonl(const CensusReport& report, std::ostream& os) {
    for (const auto& rec : report.records) {
        write_record_fields(rec, os, true);
        os << "\n";
    }
}

void write_csv(const CensusReport& report, std::ostream& os) {
    os << "two_j1,two_j2,two_j3,two_m1,two_m2,two_m3,"
          "r11,r12,r13,r21,r22,r23,r31,r32,r33,J,degree,order,class,generator\n";
    for (const auto& rec : report.records) {
        write_record_fields(rec, os, false);
        os << "\n";
    }
}

void write_table(const CensusReport& report, std::ostream& os) {
    os << "symbols scanned:        " << report.total_scanned << "\n";
    os << "  nonzero:              " << report.nonzero << "\n";
    os << "  trivial zeros:        " << report.trivial_zero << "\n";
    os << "  polynomial zeros:     " << report.polynomial_hits << " (symbol level)\n";
    os << "canonical polynomial zeros: " << report.count_all() << "\n";
    os << "reduced (degree >= 1, all entries >= 1): " << report.count_reduced() << "\n";
    os << "elapsed: " << report.seconds << " s\n";
    if (!report.table.empty()) {
        os << "counts by (degree, order):\n";
        for (const auto& [key, n] : report.table)
            os << "  degree " << key.first << ", order " << key.second << ": " << n << "\n";
    }
    for (const auto& rec : report.records) {
        ThreeJ s = from_regge(rec.canonical);
        os << "  " << s.str() << "  J=" << rec.J << " degree=" << rec.degree
           << " order=" << rec.order << " " << rec.canonical.str() << "\n";
    }
}

void write_report(const CensusReport& report, const CensusConfig& cfg) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path, std::ios::binary);
        if (!file) throw domain_error("cannot open output path " + cfg.output_path);
        os = &file;
    }
    switch (cfg.format) {
        case Format::jsonl: write_jsonl(report, *os); break;
        case Format::csv: write_csv(report, *os); break;
        case Format::table: write_table(report, *os); break;
    }
}

}  // namespace w3j::census
