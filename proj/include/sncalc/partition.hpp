#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sncalc {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// A weakly decreasing sequence of positive integers. The empty sequence is
// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Caller guarantees `parts` is already weakly decreasing and positive.
    static Partition unchecked(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    // Dominance order; both partitions must have the same size.
    bool dominates(const Partition& other) const;
    // mult[i] = number of parts equal to i, valid for i in [1, part(0)].
    std::vector<int> multiplicities() const;

    auto operator<=>(const Partition&) const = default;

    // Text encoding: comma-separated parts, "-" for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

// All partitions of n, lexicographically decreasing: (n), (n-1,1), ..., (1^n).
std::vector<Partition> gen_partitions(int n);

// z_mu = prod_i i^{m_i} m_i!  (order of the centralizer of cycle type mu)
BigInt centralizer_order(const Partition& mu);
// |C_mu| = n!/z_mu
BigInt class_size(const Partition& mu);

struct ClassData {
    Partition cycle_type;
    BigInt size;
};

// Conjugacy classes of S_n in canonical cycle-type order.
std::vector<ClassData> conjugacy_classes(int n);

bool is_self_conjugate(const Partition& lambda);
bool has_distinct_odd_parts(const Partition& mu);
// Cycle type of an even permutation: n - l(mu) is even.
bool is_even_class(const Partition& mu);

// Canonical list of Par(n) with O(1) index lookup.
class PartitionList {
public:
    explicit PartitionList(int n);
    int n() const { return n_; }
    std::size_t count() const { return list_.size(); }
    const std::vector<Partition>& all() const { return list_; }
    const Partition& at(std::size_t i) const { return list_[i]; }
    std::size_t index_of(const Partition& p) const;

private:
    int n_;
    std::vector<Partition> list_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

}  // namespace sncalc
