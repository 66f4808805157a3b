#include "sncalc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sncalc {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.size_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
    return p;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(parts_[0], 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++cols[c];
    }
    return Partition::unchecked(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::dominates(const Partition& other) const {
    if (size_ != other.size_) throw std::invalid_argument("dominance needs equal sizes");
    long a = 0, b = 0;
    int len = std::max(length(), other.length());
    for (int i = 0; i < len; ++i) {
        a += part(i);
        b += other.part(i);
        if (a < b) return false;
    }
    return true;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> mult(parts_.empty() ? 1 : parts_[0] + 1, 0);
    for (int p : parts_) ++mult[p];
    return mult;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition '" + text + "'");
        long v = std::stol(tok);
        if (v <= 0 || v > 1000000) throw std::invalid_argument("bad partition part '" + tok + "'");
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // validates monotonicity
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

namespace {
void gen_rec(int remaining, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::unchecked(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> gen_partitions(int n) {
    if (n < 0) throw std::invalid_argument("gen_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_rec(n, n, acc, out);
    return out;
}

BigInt centralizer_order(const Partition& mu) {
    BigInt z = 1;
    int run = 0, prev = 0;
    for (int p : mu.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= p;    // contributes i^{m_i}
        z *= run;  // contributes m_i! one factor at a time
    }
    return z;
}

BigInt class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

std::vector<ClassData> conjugacy_classes(int n) {
    std::vector<ClassData> out;
    for (auto& mu : gen_partitions(n)) {
        BigInt sz = class_size(mu);
        out.push_back({std::move(mu), std::move(sz)});
    }
    return out;
}

bool is_self_conjugate(const Partition& lambda) { return lambda == lambda.conjugate(); }

bool has_distinct_odd_parts(const Partition& mu) {
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] % 2 == 0) return false;
        if (i > 0 && p[i] == p[i - 1]) return false;
    }
    return true;
}

bool is_even_class(const Partition& mu) { return (mu.size() - mu.length()) % 2 == 0; }

PartitionList::PartitionList(int n) : n_(n), list_(gen_partitions(n)) {
    index_.reserve(list_.size());
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

std::size_t PartitionList::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::logic_error("partition not of size " + std::to_string(n_));
    return it->second;
}

}  // namespace sncalc
