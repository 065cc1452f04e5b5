#pragma once

#include <atomic>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "w3j/threej.hpp"
#include "w3j/zeros.hpp"

namespace w3j::census {

enum class Format { jsonl, csv, table };

struct CensusConfig {
    HalfInt j_max = HalfInt(0);
    bool include_half_integer = false;
    std::optional<std::pair<long long, long long>> degree_filter;  // inclusive
    std::optional<std::pair<long long, long long>> order_filter;   // inclusive
    unsigned jobs = 1;
    Format format = Format::table;
    std::string output_path;  // empty: stdout
};

struct CensusReport {
    unsigned long long total_scanned = 0;
    unsigned long long nonzero = 0;
    unsigned long long trivial_zero = 0;
    unsigned long long polynomial_hits = 0;  // symbol-level, before dedup
    std::vector<zeros::ZeroRecord> records;  // canonical, deduplicated, sorted
    // canonical-record counts by (degree, order)
    std::map<std::pair<long long, long long>, unsigned long long> table;
    double seconds = 0;

    // Bowick-style counts: all canonical polynomial zeros, and the subset
    // with degree >= 1 and every Regge entry >= 1 (the two readings of
    // "reduced"; they coincide because a one-term sum cannot vanish).
    unsigned long long count_all() const { return records.size(); }
    unsigned long long count_reduced() const;
};

// Ordered (2a, 2b, 2c) work shards: all triples with triangle and sum <= 2*j_max.
std::vector<std::array<long long, 3>> triangle_triples(HalfInt j_max, bool include_half_integer);

// Every physical symbol of one momentum triple, in deterministic order.
void for_each_projection(const std::array<long long, 3>& abc,
                         const std::function<void(const ThreeJ&)>& fn);

// Materialized enumeration (tests and small runs; census itself streams).
std::vector<ThreeJ> enumerate_symbols(HalfInt j_max, bool include_half_integer);

// Classifies every enumerated symbol, deduplicates polynomial zeros by
// canonical square, re-verifies each record exactly, and returns a
// deterministic report (independent of cfg.jobs).  `cancel`, when non-null,
// is checked between shards.
CensusReport run_census(const CensusConfig& cfg, const std::atomic<bool>* cancel = nullptr);

bool verify_bryant_jahn(const CensusReport& report);

void write_jsonl(const CensusReport& report, std::ostream& os);
void write_csv(const CensusReport& report, std::ostream& os);
void write_table(const CensusReport& report, std::ostream& os);
void write_report(const CensusReport& report, const CensusConfig& cfg);  // honors format/path

// Runs fn(shard_index) over [0, n_shards) on `jobs` threads; order of
// execution is arbitrary, so fn must write only to its own slot.
void parallel_shards(size_t n_shards, unsigned jobs, const std::function<void(size_t)>& fn);

}  // namespace w3j::census
