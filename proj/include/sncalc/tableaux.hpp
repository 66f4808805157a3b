#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "sncalc/partition.hpp"

namespace sncalc {

// Pair of nested partitions nu/lambda; inner may be empty (straight shape).
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_);
    int cells() const { return outer.size() - inner.size(); }
    bool operator==(const SkewShape&) const = default;
    std::string to_string() const;  // "3,2,1/2,1"
};

// Semistandard filling of a skew shape, stored row-major over the outer rows.
// Inner cells hold 0.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    // One line: rows joined by spaces, entries comma-separated, '.' marks
    // inner cells, e.g. ".,1,1 2".
    std::string to_string() const;
};

struct FillingOptions {
    bool lattice = false;          // require the reverse reading word to be a lattice word
    std::int64_t cap = -1;         // stop counting once the count reaches cap (-1: no cap)
    std::int64_t emit_limit = 0;   // emit at most this many fillings to the callback
    std::function<void(const Tableau&)> emit;
};

// Number of semistandard fillings of `shape` whose content is `content`
// (content_i many i's). Enumeration is cell-by-cell in reverse reading order
// with early pruning.
std::int64_t count_fillings(const SkewShape& shape, const Partition& content,
                            const FillingOptions& opts = {});

std::int64_t count_ssyt(const SkewShape& shape, const Partition& content);

// K_{lambda,mu}; zero whenever lambda does not dominate mu.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

// c_{lambda,mu}^{nu}: lattice-word fillings of nu/lambda with content mu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                            std::int64_t cap = -1);

// Tail-sum pair (sigma, tau) with K_{lambda,mu} = c_{sigma,lambda}^{tau}.
std::pair<Partition, Partition> kostka_as_lr(const Partition& lambda, const Partition& mu);

// mu -> c_{inner,mu}^{outer} over all mu with |mu| = cell count (nonzero only).
std::map<Partition, std::int64_t> skew_schur_expansion(const SkewShape& shape);

}  // namespace sncalc
