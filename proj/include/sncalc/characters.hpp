#pragma once

#include <cstdint>
#include <iosfwd>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sncalc/partition.hpp"

namespace sncalc {

struct CharOptions {
    // Upper bound on the total number of cached column cells before
    // least-recently-used eviction kicks in.
    std::size_t memo_limit = std::size_t{1} << 24;
};

struct CharEngineImpl;

// Irreducible S_n character evaluation by recursive border-strip removal.
//
// The memo maps the multiset of not-yet-stripped cycle lengths (a partition,
// since cycles are stripped largest first) to the full column of values
// chi^lambda over all shapes lambda of the remaining size. Columns of the
// character table for different classes share their tails through this cache.
//
// Values are computed in 64-bit arithmetic with overflow checks; a column
// that overflows is transparently recomputed with arbitrary-precision
// integers and served from a separate cache.
class CharEngine {
public:
    explicit CharEngine(CharOptions opts = {});
    ~CharEngine();

    CharEngine(const CharEngine&) = delete;
    CharEngine& operator=(const CharEngine&) = delete;

    // chi^lambda(mu); |lambda| must equal |mu|. Throws std::domain_error on a
    // size mismatch and std::overflow_error if the value does not fit in 64
    // bits (use character_big for the full range).
    std::int64_t character(const Partition& lambda, const Partition& mu);
    BigInt character_big(const Partition& lambda, const Partition& mu);

    // chi^lambda(mu) for every lambda |- |mu|, in canonical order.
    // Returns nullopt if any value in the column overflows 64 bits.
    std::optional<std::shared_ptr<const std::vector<std::int64_t>>> column(const Partition& mu);
    std::shared_ptr<const std::vector<BigInt>> column_big(const Partition& mu);

    const PartitionList& partitions_of(int n);

    struct Stats {
        std::uint64_t hits = 0;
        std::uint64_t misses = 0;
        std::uint64_t evictions = 0;
        std::size_t cells = 0;
    };
    Stats stats() const;

private:
    std::unique_ptr<CharEngineImpl> impl_;
};

struct CharacterTable {
    int n = 0;
    std::vector<Partition> shapes;   // row and column labels, canonical order
    std::vector<ClassData> classes;  // per column
    // values[row][col] = chi^{shapes[row]}(shapes[col])
    std::vector<std::vector<std::int64_t>> values;
};

CharacterTable character_table(CharEngine& engine, int n, int threads = 1);

// CSV with quoted row/column headers in the canonical partition encoding.
void write_csv(const CharacterTable& table, std::ostream& out);

struct IntRun {
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // empty by default
    std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
};

struct IntervalReport {
    int n = 0;
    std::vector<std::int64_t> value_set;  // sorted, distinct
    IntRun longest_run;                   // leftmost among maximal runs
    std::optional<IntRun> run_through_zero;
    std::int64_t l_n = 0;  // size of longest_run

    bool contains_range(std::int64_t lo, std::int64_t hi) const;
};

IntervalReport char_interval(CharEngine& engine, int n, int threads = 1);

// JSON document with fields n, l_n, longest_run, run_through_zero plus
// value_count/value_min/value_max diagnostics.
std::string interval_to_json(const IntervalReport& report);

// Restriction of chi^lambda to the alternating group. Defined (and equal to
// chi^lambda(mu)) when lambda is not self-conjugate, mu is an even class and
// mu does not have distinct odd parts.
std::int64_t an_character(CharEngine& engine, const Partition& lambda, const Partition& mu);

}  // namespace sncalc
