#include "sncalc/characters.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

namespace sncalc {

namespace {

// Raised when a 64-bit column accumulation would overflow; the caller
// recomputes the column with BigInt values.
struct Escalate {};

inline std::int64_t add64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Escalate{};
    return r;
}

inline std::int64_t sub64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Escalate{};
    return r;
}

// Border strips of size s removable from lambda, via beta numbers
// b_i = lambda_i + (L-1-i). Removing a strip with head row i replaces b_i by
// b_i - s; valid iff the new value is nonnegative and unoccupied, and the
// strip height equals the number of beta values jumped over.
template <class Fn>
void for_each_strip(const Partition& lambda, int s, Fn&& fn) {
    const auto& parts = lambda.parts();
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
    std::vector<int> nb(len);
    for (int i = 0; i < len; ++i) {
        const int v = beta[i] - s;
        if (v < 0) continue;
        int j = i + 1;
        while (j < len && beta[j] > v) ++j;
        if (j < len && beta[j] == v) continue;
        const int height = j - i - 1;
        for (int t = 0; t < len; ++t) {
            if (t < i || t >= j) {
                nb[t] = beta[t];
            } else if (t + 1 < j) {
                nb[t] = beta[t + 1];
            } else {
                nb[t] = v;
            }
        }
        std::vector<int> rest(len);
        for (int t = 0; t < len; ++t) rest[t] = nb[t] - (len - 1 - t);
        while (!rest.empty() && rest.back() == 0) rest.pop_back();
        fn(height, Partition::unchecked(std::move(rest)));
    }
}

template <class V>
struct ColCache {
    struct Entry {
        std::shared_ptr<const std::vector<V>> col;
        typename std::list<Partition>::iterator pos;
    };
    std::unordered_map<Partition, Entry, PartitionHash> map;
    std::list<Partition> order;  // front = most recently used
    std::size_t cells = 0;
    std::uint64_t hits = 0, misses = 0, evictions = 0;

    std::shared_ptr<const std::vector<V>> find(const Partition& key) {
        auto it = map.find(key);
        if (it == map.end()) {
            ++misses;
            return nullptr;
        }
        ++hits;
        order.splice(order.begin(), order, it->second.pos);
        return it->second.col;
    }

    std::shared_ptr<const std::vector<V>> insert(const Partition& key,
                                                 std::shared_ptr<const std::vector<V>> col,
                                                 std::size_t limit) {
        auto it = map.find(key);
        if (it != map.end()) return it->second.col;  // idempotent under races
        order.push_front(key);
        cells += col->size();
        auto stored = col;
        map.emplace(key, Entry{std::move(col), order.begin()});
        while (cells > limit && map.size() > 1) {
            const Partition victim = order.back();
            if (victim == key) break;
            auto vit = map.find(victim);
            cells -= vit->second.col->size();
            map.erase(vit);
            order.pop_back();
            ++evictions;
        }
        return stored;
    }
};

}  // namespace

struct CharEngineImpl {
    CharOptions opts;
    std::mutex lists_mutex;
    std::vector<std::unique_ptr<PartitionList>> lists;
    std::mutex cache_mutex;
    ColCache<std::int64_t> small;
    ColCache<BigInt> big;
    std::unordered_set<Partition, PartitionHash> overflowed;
};

CharEngine::CharEngine(CharOptions opts) : impl_(std::make_unique<CharEngineImpl>()) { impl_->opts = opts; }
CharEngine::~CharEngine() = default;

const PartitionList& CharEngine::partitions_of(int n) {
    std::lock_guard lock(impl_->lists_mutex);
    if (n >= static_cast<int>(impl_->lists.size())) impl_->lists.resize(n + 1);
    if (!impl_->lists[n]) impl_->lists[n] = std::make_unique<PartitionList>(n);
    return *impl_->lists[n];
}

namespace {

std::shared_ptr<const std::vector<std::int64_t>> column64(CharEngine& eng, CharEngineImpl& im,
                                                          const Partition& mu);
std::shared_ptr<const std::vector<BigInt>> columnbig(CharEngine& eng, CharEngineImpl& im,
                                                     const Partition& mu);

template <class V, class Tail, class Acc>
std::vector<V> compute_values(CharEngine& eng, const Partition& mu, const Tail& tail_col, Acc acc) {
    const int m = mu.size();
    const int s = mu.parts()[0];
    const PartitionList& shapes = eng.partitions_of(m);
    const PartitionList& sub = eng.partitions_of(m - s);
    std::vector<V> col(shapes.count());
    for (std::size_t r = 0; r < shapes.count(); ++r) {
        V value{0};
        for_each_strip(shapes.at(r), s, [&](int height, Partition rest) {
            acc(value, tail_col[sub.index_of(rest)], height % 2 == 0);
        });
        col[r] = std::move(value);
    }
    return col;
}

std::shared_ptr<const std::vector<std::int64_t>> column64(CharEngine& eng, CharEngineImpl& im,
                                                          const Partition& mu) {
    {
        std::lock_guard lock(im.cache_mutex);
        if (im.overflowed.count(mu)) throw Escalate{};
        if (auto hit = im.small.find(mu)) return hit;
    }
    std::vector<std::int64_t> values;
    if (mu.empty()) {
        values = {1};
    } else {
        Partition tail = Partition::unchecked(
            std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        auto tcol = column64(eng, im, tail);
        try {
            values = compute_values<std::int64_t>(
                eng, mu, *tcol, [](std::int64_t& a, std::int64_t v, bool plus) {
                    a = plus ? add64(a, v) : sub64(a, v);
                });
        } catch (const Escalate&) {
            std::lock_guard lock(im.cache_mutex);
            im.overflowed.insert(mu);
            throw;
        }
    }
    auto col = std::make_shared<const std::vector<std::int64_t>>(std::move(values));
    std::lock_guard lock(im.cache_mutex);
    return im.small.insert(mu, std::move(col), im.opts.memo_limit);
}

std::shared_ptr<const std::vector<BigInt>> columnbig(CharEngine& eng, CharEngineImpl& im,
                                                     const Partition& mu) {
    {
        std::lock_guard lock(im.cache_mutex);
        if (auto hit = im.big.find(mu)) return hit;
    }
    std::vector<BigInt> values;
    if (mu.empty()) {
        values = {BigInt(1)};
    } else {
        Partition tail = Partition::unchecked(
            std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        // Serve the tail from the 64-bit cache when it fits there.
        bool done = false;
        try {
            auto tcol = column64(eng, im, tail);
            values = compute_values<BigInt>(eng, mu, *tcol,
                                            [](BigInt& a, std::int64_t v, bool plus) {
                                                if (plus)
                                                    a += v;
                                                else
                                                    a -= v;
                                            });
            done = true;
        } catch (const Escalate&) {
        }
        if (!done) {
            auto tcol = columnbig(eng, im, tail);
            values = compute_values<BigInt>(eng, mu, *tcol,
                                            [](BigInt& a, const BigInt& v, bool plus) {
                                                if (plus)
                                                    a += v;
                                                else
                                                    a -= v;
                                            });
        }
    }
    auto col = std::make_shared<const std::vector<BigInt>>(std::move(values));
    std::lock_guard lock(im.cache_mutex);
    return im.big.insert(mu, std::move(col), im.opts.memo_limit);
}

}  // namespace

std::optional<std::shared_ptr<const std::vector<std::int64_t>>> CharEngine::column(
    const Partition& mu) {
    try {
        return column64(*this, *impl_, mu);
    } catch (const Escalate&) {
        return std::nullopt;
    }
}

std::shared_ptr<const std::vector<BigInt>> CharEngine::column_big(const Partition& mu) {
    return columnbig(*this, *impl_, mu);
}

std::int64_t CharEngine::character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::domain_error("incompatible sizes");
    const std::size_t idx = partitions_of(lambda.size()).index_of(lambda);
    if (auto col = column(mu)) return (**col)[idx];
    const BigInt v = (*column_big(mu))[idx];
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("character value exceeds 64-bit range");
    return v.convert_to<std::int64_t>();
}

BigInt CharEngine::character_big(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::domain_error("incompatible sizes");
    const std::size_t idx = partitions_of(lambda.size()).index_of(lambda);
    if (auto col = column(mu)) return BigInt((**col)[idx]);
    return (*column_big(mu))[idx];
}

CharEngine::Stats CharEngine::stats() const {
    std::lock_guard lock(impl_->cache_mutex);
    Stats s;
    s.hits = impl_->small.hits + impl_->big.hits;
    s.misses = impl_->small.misses + impl_->big.misses;
    s.evictions = impl_->small.evictions + impl_->big.evictions;
    s.cells = impl_->small.cells + impl_->big.cells;
    return s;
}

namespace {

// Runs fn(col_index) over [0, count) from `threads` workers, propagating the
// first exception.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

CharacterTable character_table(CharEngine& engine, int n, int threads) {
    if (n < 0) throw std::domain_error("character_table: n must be nonnegative");
    CharacterTable table;
    table.n = n;
    table.shapes = engine.partitions_of(n).all();
    table.classes = conjugacy_classes(n);
    const std::size_t p = table.shapes.size();
    table.values.assign(p, std::vector<std::int64_t>(p, 0));
    parallel_for(p, threads, [&](std::size_t c) {
        auto col = engine.column(table.shapes[c]);
        if (!col) throw std::overflow_error("character table exceeds 64-bit range");
        for (std::size_t r = 0; r < p; ++r) table.values[r][c] = (**col)[r];
    });
    return table;
}

void write_csv(const CharacterTable& table, std::ostream& out) {
    out << "lambda/mu";
    for (const auto& cls : table.classes) out << ",\"" << cls.cycle_type.to_string() << '"';
    out << '\n';
    for (std::size_t r = 0; r < table.shapes.size(); ++r) {
        out << '"' << table.shapes[r].to_string() << '"';
        for (std::size_t c = 0; c < table.shapes.size(); ++c) out << ',' << table.values[r][c];
        out << '\n';
    }
}

bool IntervalReport::contains_range(std::int64_t lo, std::int64_t hi) const {
    auto it = std::lower_bound(value_set.begin(), value_set.end(), lo);
    for (std::int64_t v = lo; v <= hi; ++v, ++it)
        if (it == value_set.end() || *it != v) return false;
    return true;
}

IntervalReport char_interval(CharEngine& engine, int n, int threads) {
    if (n < 1) throw std::domain_error("char_interval: n must be positive");
    const auto& shapes = engine.partitions_of(n).all();
    threads = std::max(1, threads);
    // One value set per worker, merged afterwards.
    std::vector<std::unordered_set<std::int64_t>> seen(threads);
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        auto work = [&](int t) {
            try {
                for (std::size_t c = next++; c < shapes.size(); c = next++) {
                    auto col = engine.column(shapes[c]);
                    if (!col) throw std::overflow_error("character values exceed 64-bit range");
                    seen[t].insert((*col)->begin(), (*col)->end());
                }
            } catch (...) {
                errors[t] = std::current_exception();
                next = shapes.size();
            }
        };
        if (threads == 1) {
            work(0);
            if (errors[0]) std::rethrow_exception(errors[0]);
        } else {
            for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
    }

    IntervalReport report;
    report.n = n;
    for (int t = 1; t < threads; ++t) seen[0].insert(seen[t].begin(), seen[t].end());
    report.value_set.assign(seen[0].begin(), seen[0].end());
    std::sort(report.value_set.begin(), report.value_set.end());

    const auto& vals = report.value_set;
    for (std::size_t i = 0; i < vals.size();) {
        std::size_t j = i;
        while (j + 1 < vals.size() && vals[j + 1] == vals[j] + 1) ++j;
        IntRun run{vals[i], vals[j]};
        if (run.size() > report.longest_run.size()) report.longest_run = run;
        if (run.lo <= 0 && 0 <= run.hi) report.run_through_zero = run;
        i = j + 1;
    }
    report.l_n = report.longest_run.size();
    return report;
}

std::string interval_to_json(const IntervalReport& report) {
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["l_n"] = report.l_n;
    doc["longest_run"] = {{"lo", report.longest_run.lo}, {"hi", report.longest_run.hi}};
    if (report.run_through_zero)
        doc["run_through_zero"] = {{"lo", report.run_through_zero->lo},
                                   {"hi", report.run_through_zero->hi}};
    else
        doc["run_through_zero"] = nullptr;
    doc["value_count"] = report.value_set.size();
    doc["value_min"] = report.value_set.empty() ? 0 : report.value_set.front();
    doc["value_max"] = report.value_set.empty() ? 0 : report.value_set.back();
    return doc.dump();
}

std::int64_t an_character(CharEngine& engine, const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::domain_error("incompatible sizes");
    if (is_self_conjugate(lambda))
        throw std::domain_error("split restriction, non-integral values out of scope");
    if (has_distinct_odd_parts(mu)) throw std::domain_error("class splits in A_n");
    if (!is_even_class(mu)) throw std::domain_error("not an A_n class");
    return engine.character(lambda, mu);
}

}  // namespace sncalc
