#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sncalc/kronecker.hpp"
#include "sncalc/tableaux.hpp"
#include "sncalc/witnesses.hpp"

using namespace sncalc;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }

namespace {
CharEngine& engine() {
    static CharEngine eng;
    return eng;
}

Partition datum(const Witness& w, const std::string& name) {
    for (const auto& [key, value] : w.data)
        if (key == name) return value;
    throw std::logic_error("missing datum " + name);
}
}  // namespace

TEST_CASE("negative-branch classes") {
    CHECK(negative_case_mu(6, 1) == P({4, 1, 1}));
    CHECK(negative_case_mu(7, 1) == P({3, 2, 1, 1}));   // k = n-6: sorted parts
    CHECK(negative_case_mu(8, 1) == P({6, 1, 1}));
    CHECK(negative_case_mu(8, 5) == P({2, 1, 1, 1, 1, 1, 1}));  // k = n-3
    CHECK_THROWS_AS(negative_case_mu(8, 4), std::domain_error);  // k = n-4 not covered
    CHECK_THROWS_AS(negative_case_mu(8, 0), std::domain_error);
    for (int n = 6; n <= 12; ++n) {
        std::vector<int> hook{2};
        hook.insert(hook.end(), n - 2, 1);
        const Partition lambda(hook);
        for (int k = 1; k <= n - 3; ++k) {
            if (k > n - 5 && k != n - 3) continue;
            const Partition mu = negative_case_mu(n, k);
            CHECK(mu.size() == n);
            CHECK(engine().character(lambda, mu) == -k);
        }
    }
}

TEST_CASE("character witnesses") {
    auto& eng = engine();
    {
        Witness w = char_witness(eng, 2, 0);
        CHECK(datum(w, "lambda") == P({4, 1}));
        CHECK(datum(w, "mu") == P({2, 1, 1, 1}));
        CHECK(w.verified_value == 2);
    }
    {
        Witness w = char_witness(eng, 0, 0);
        CHECK(datum(w, "lambda") == P({2, 1}));
        CHECK(datum(w, "mu") == P({2, 1}));
        CHECK(w.verified_value == 0);
    }
    {
        Witness w = char_witness(eng, -1, 0);
        CHECK(datum(w, "lambda") == P({2, 1, 1, 1, 1}));
        CHECK(datum(w, "mu") == P({4, 1, 1}));
        CHECK(w.verified_value == -1);
    }
    for (std::int64_t z = -4; z <= 4; ++z) {
        std::set<std::vector<std::pair<std::string, Partition>>> distinct;
        for (int j = 0; j <= 3; ++j) {
            Witness w = char_witness(eng, z, j);
            CHECK(w.verified_value == z);
            CHECK(distinct.insert(w.data).second);
        }
    }
}

TEST_CASE("kostka witnesses") {
    {
        Witness w = kostka_witness(3, 1);
        CHECK(datum(w, "lambda") == P({2, 1, 1}));
        CHECK(datum(w, "mu") == P({1, 1, 1, 1}));
        CHECK(w.verified_value == 3);
    }
    {
        Witness w = kostka_witness(1, 5);
        CHECK(datum(w, "lambda") == P({6}));
        CHECK(datum(w, "mu") == P({5, 1}));
        CHECK(w.verified_value == 1);
    }
    {
        Witness w = kostka_witness(0, 1);
        CHECK(datum(w, "lambda") == P({1, 1}));
        CHECK(datum(w, "mu") == P({2}));
        CHECK(w.verified_value == 0);
    }
    CHECK_THROWS_AS(kostka_witness(2, 0), std::domain_error);
    CHECK_THROWS_AS(kostka_witness(-1, 1), std::domain_error);
}

TEST_CASE("lr witnesses") {
    {
        Witness w = lr_witness(2, 1);
        CHECK(datum(w, "lambda") == P({2, 1}));
        CHECK(datum(w, "mu") == P({2, 1}));
        CHECK(datum(w, "nu") == P({3, 2, 1}));
        CHECK(w.verified_value == 2);
    }
    {
        Witness w = lr_witness(1, 1);
        CHECK(datum(w, "lambda") == P({1}));
        CHECK(datum(w, "mu") == P({2}));
        CHECK(datum(w, "nu") == P({2, 1}));
        CHECK(w.verified_value == 1);
    }
    for (std::int64_t k = 0; k <= 4; ++k)
        for (int j = 1; j <= 3; ++j) {
            Witness w = lr_witness(k, j);
            CHECK(lr_coefficient(datum(w, "lambda"), datum(w, "mu"), datum(w, "nu")) == k);
        }
}

TEST_CASE("kronecker witnesses") {
    auto& eng = engine();
    for (std::int64_t k = 0; k <= 3; ++k) {
        std::set<std::vector<std::pair<std::string, Partition>>> distinct;
        for (int j = 1; j <= 3; ++j) {
            Witness w = kron_witness(eng, k, j);
            CHECK(w.verified_value == k);
            CHECK(kronecker(eng, datum(w, "lambda"), datum(w, "mu"), datum(w, "nu")) == k);
            CHECK(distinct.insert(w.data).second);
        }
    }
}

TEST_CASE("witness json") {
    auto& eng = engine();
    CHECK(char_witness(eng, 2, 0).to_json() ==
          R"({"data":{"lambda":"4,1","mu":"2,1,1,1"},"family":"character","params":{"j":0,"n":5},"target":2,"verified_value":2})");
}

TEST_CASE("value class enumeration") {
    auto& eng = engine();
    {
        auto first = enumerate_value_class(eng, CoefficientFamily::LR, 1, 1);
        REQUIRE(first.size() == 1);
        CHECK(first[0] == std::array<Partition, 3>{Partition{}, Partition{}, Partition{}});
    }
    {
        auto first = enumerate_value_class(eng, CoefficientFamily::Kronecker, 1, 1);
        REQUIRE(first.size() == 1);
        CHECK(first[0] == std::array<Partition, 3>{Partition{}, Partition{}, Partition{}});
    }
    {
        auto members = enumerate_value_class(eng, CoefficientFamily::LR, 2, 3);
        REQUIRE(members.size() == 3);
        std::set<std::array<Partition, 3>> seen;
        for (const auto& t : members) {
            CHECK(lr_coefficient(t[0], t[1], t[2]) == 2);
            CHECK(seen.insert(t).second);
        }
    }
    {
        auto members = enumerate_value_class(eng, CoefficientFamily::Kronecker, 2, 2);
        for (const auto& t : members) CHECK(kronecker(eng, t[0], t[1], t[2]) == 2);
    }
    CHECK_THROWS_AS(enumerate_value_class(eng, CoefficientFamily::LR, 500, 1, 6),
                    std::domain_error);
}
