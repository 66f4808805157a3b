#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sncalc/partition.hpp"

using namespace sncalc;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }

TEST_CASE("gen_partitions basics") {
    auto p0 = gen_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = gen_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));

    CHECK(gen_partitions(25).size() == 1958);
}

TEST_CASE("gen_partitions is duplicate-free, complete and lex-decreasing") {
    for (int n = 0; n <= 30; ++n) {
        auto parts = gen_partitions(n);
        CHECK(static_cast<long>(parts.size()) == oracle::partition_count(n));
        std::set<Partition> seen;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(parts[i].size() == n);
            CHECK(seen.insert(parts[i]).second);
            if (i > 0) CHECK(parts[i] < parts[i - 1]);
        }
    }
}

TEST_CASE("conjugate") {
    CHECK(P({5}).conjugate() == P({1, 1, 1, 1, 1}));
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(P({2, 1}).conjugate() == P({2, 1}));
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : gen_partitions(n)) {
            CHECK(p.conjugate().size() == n);
            CHECK(p.conjugate().conjugate() == p);
        }
}

TEST_CASE("class sizes") {
    CHECK(class_size(P({1, 1, 1})) == 1);
    CHECK(class_size(P({3})) == 2);
    CHECK(class_size(P({2, 1})) == 3);

    for (int n = 1; n <= 8; ++n) {
        auto counts = oracle::cycle_type_counts(n);
        for (const auto& mu : gen_partitions(n))
            CHECK(class_size(mu) == counts.at(mu));
    }

    for (int n = 0; n <= 25; ++n) {
        BigInt total = 0;
        for (const auto& mu : gen_partitions(n)) total += class_size(mu);
        CHECK(total == factorial(n));
    }
    CHECK(class_size(Partition{}) == 1);
}

TEST_CASE("predicates") {
    CHECK(is_self_conjugate(P({2, 1})));
    CHECK_FALSE(is_self_conjugate(P({3, 1})));
    CHECK(has_distinct_odd_parts(P({5, 3, 1})));
    CHECK_FALSE(has_distinct_odd_parts(P({3, 3, 1})));
    CHECK_FALSE(has_distinct_odd_parts(P({4, 1})));
    CHECK_FALSE(is_even_class(P({2, 1})));
    CHECK(is_even_class(P({3, 1, 1})));
    CHECK(is_even_class(P({2, 2})));
}

TEST_CASE("dominance") {
    CHECK(P({4}).dominates(P({2, 2})));
    CHECK(P({2, 2}).dominates(P({2, 1, 1})));
    CHECK_FALSE(P({2, 2}).dominates(P({3, 1})));
    CHECK(P({3, 1}).dominates(P({3, 1})));
    CHECK_THROWS_AS((void)P({3}).dominates(P({2})), std::invalid_argument);
}

TEST_CASE("text encoding") {
    CHECK(P({7, 6, 5, 4, 2, 1}).to_string() == "7,6,5,4,2,1");
    CHECK(Partition{}.to_string() == "-");
    CHECK(Partition::parse("7,6,5,4,2,1") == P({7, 6, 5, 4, 2, 1}));
    CHECK(Partition::parse("-") == Partition{});
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : gen_partitions(n)) CHECK(Partition::parse(p.to_string()) == p);

    CHECK_THROWS_AS(Partition::parse("3,5"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
}

TEST_CASE("partition list index") {
    PartitionList list(6);
    REQUIRE(list.count() == 11);
    for (std::size_t i = 0; i < list.count(); ++i) CHECK(list.index_of(list.at(i)) == i);
    CHECK_THROWS_AS(list.index_of(P({3, 1})), std::logic_error);
}
