#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sncalc/schubert.hpp"

using namespace sncalc;

static Partition P(std::vector<int> v) { return Partition(std::move(v)); }
static Permutation W(std::vector<int> v) { return Permutation(std::move(v)); }

static std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

TEST_CASE("permutation primitives") {
    Permutation w = W({3, 1, 4, 2});
    CHECK(w.length() == 3);
    CHECK(w.code() == std::vector<int>{2, 0, 1, 0});
    CHECK(w.descents() == std::vector<int>{1, 3});
    CHECK_FALSE(w.is_grassmannian());
    CHECK(w.avoids_321());
    CHECK_FALSE(W({3, 2, 1}).avoids_321());
    CHECK(Permutation::from_code({2, 0, 1}) == w);
    CHECK(w.append_fixed().one_line() == std::vector<int>{3, 1, 4, 2, 5});
    CHECK(w.prepend_identity(2).one_line() == std::vector<int>{1, 2, 5, 3, 6, 4});
    CHECK(W({2, 1, 3}).trimmed().one_line() == std::vector<int>{2, 1});
    CHECK(W({2, 1, 3}) == W({2, 1}));
    CHECK(Permutation::parse("2,1,4,3") == W({2, 1, 4, 3}));
    CHECK(W({2, 1, 4, 3}).to_string() == "2,1,4,3");
    CHECK_THROWS_AS(Permutation::parse("2,2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
}

TEST_CASE("divided differences") {
    const IntPolynomial f = IntPolynomial::monomial({2, 1});
    CHECK(divided_difference(f, 1) == IntPolynomial::monomial({1, 1}));
    CHECK(divided_difference(f, 2) == IntPolynomial::monomial({2}));
    IntPolynomial sym = IntPolynomial::monomial({1});
    sym += IntPolynomial::monomial({0, 1});
    CHECK(divided_difference(sym, 1).is_zero());
    IntPolynomial prod = IntPolynomial::monomial({1, 1});
    CHECK(divided_difference(prod, 1).is_zero());
}

TEST_CASE("schubert polynomials: spot values") {
    SchubertContext ctx;
    CHECK(ctx.schubert_poly(Permutation::identity(3)) == IntPolynomial::constant(1));
    CHECK(ctx.schubert_poly(W({3, 2, 1})) == IntPolynomial::monomial({2, 1}));
    IntPolynomial s132 = IntPolynomial::monomial({1});
    s132 += IntPolynomial::monomial({0, 1});
    CHECK(ctx.schubert_poly(W({1, 3, 2})) == s132);
    // staircase monomial for w0
    for (int n = 1; n <= 6; ++n) {
        ExpVec e;
        for (int i = n - 1; i >= 1; --i) e.push_back(i);
        CHECK(ctx.schubert_poly(Permutation::longest(n)) == IntPolynomial::monomial(e));
    }
}

TEST_CASE("path independence, positivity, homogeneity, stability") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& w : symmetric_group(n)) {
            if (n == 5 && w.length() > 6) continue;
            const IntPolynomial a = schubert_poly_path(w, AscentStrategy::First);
            const IntPolynomial b = schubert_poly_path(w, AscentStrategy::Last);
            const IntPolynomial c = schubert_poly_path(w, AscentStrategy::Alternate);
            CHECK(a == b);
            CHECK(a == c);
            // stability S_w = S_{w x 1}, computed in the larger ambient group
            CHECK(a == schubert_poly_path(w.append_fixed(), AscentStrategy::Last));
            for (const auto& [e, coef] : a.terms()) {
                CHECK(coef > 0);
                int deg = 0;
                for (int x : e) deg += x;
                CHECK(deg == w.length());
            }
        }
    }
}

TEST_CASE("basis expansion") {
    SchubertContext ctx;
    {
        IntPolynomial f = IntPolynomial::monomial({2});
        f += IntPolynomial::monomial({1, 1});
        auto exp = ctx.expand_in_schubert_basis(f);
        REQUIRE(exp.size() == 2);
        CHECK(exp.at(W({3, 1, 2})) == 1);
        CHECK(exp.at(W({2, 3, 1})) == 1);
        // same polynomial assembled as x1 * (x1 + x2)
        IntPolynomial g = IntPolynomial::monomial({1}) * ctx.schubert_poly(W({1, 3, 2}));
        CHECK(ctx.expand_in_schubert_basis(g) == exp);
    }
    for (const auto& w : symmetric_group(4)) {
        auto exp = ctx.expand_in_schubert_basis(ctx.schubert_poly(w));
        REQUIRE(exp.size() == 1);
        CHECK(exp.begin()->first == w);
        CHECK(exp.begin()->second == 1);
    }
    // random small combinations round-trip
    std::mt19937 rng(20240817);
    const auto s5 = symmetric_group(5);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(s5.size()) - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        std::map<Permutation, BigInt> combo;
        IntPolynomial f;
        for (int t = 0; t < 4; ++t) {
            const Permutation& w = s5[pick(rng)];
            int a = coef(rng);
            if (a == 0) a = 1;
            combo[w.trimmed()] += a;
            f += ctx.schubert_poly(w) * BigInt(a);
        }
        std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
        CHECK(ctx.expand_in_schubert_basis(f) == combo);
    }
}

TEST_CASE("structure constants") {
    SchubertContext ctx;
    CHECK(ctx.structure_constant(W({2, 1, 3}), W({2, 1, 3}), W({3, 1, 2})) == 1);
    for (const auto& u : symmetric_group(4))
        CHECK(ctx.structure_constant(u, Permutation::identity(4), u) == 1);
    // observed nonnegativity on S_3 x S_3 products
    for (const auto& u : symmetric_group(3))
        for (const auto& v : symmetric_group(3)) {
            auto exp = ctx.expand_in_schubert_basis(ctx.schubert_poly(u) * ctx.schubert_poly(v));
            for (const auto& [w, c] : exp) CHECK(c > 0);
        }
}

TEST_CASE("grassmannian shapes") {
    SchubertContext ctx;
    CHECK(grassmannian_to_schur(Permutation::identity(4)).shape == Partition{});
    {
        auto g = grassmannian_to_schur(W({1, 3, 2}));
        CHECK(g.descent == 2);
        CHECK(g.shape == P({1}));
    }
    {
        auto g = grassmannian_to_schur(W({3, 1, 2}));
        CHECK(g.descent == 1);
        CHECK(g.shape == P({2}));
    }
    CHECK_THROWS_WITH_AS(grassmannian_to_schur(W({2, 1, 4, 3})), "not Grassmannian",
                         std::domain_error);
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : symmetric_group(n)) {
            if (!w.is_grassmannian() || w.length() == 0) continue;
            auto g = grassmannian_to_schur(w);
            CHECK(ctx.schubert_poly(w) == ctx.schur_polynomial(g.shape, g.descent));
        }
}

TEST_CASE("monomial coefficients") {
    SchubertContext ctx;
    for (int n = 2; n <= 6; ++n) {
        ExpVec stair;
        for (int i = n - 1; i >= 1; --i) stair.push_back(i);
        CHECK(ctx.monomial_coefficient(Permutation::longest(n), stair) == 1);
    }
    CHECK(ctx.monomial_coefficient(W({1, 3, 2}), {1}) == 1);
    CHECK(ctx.monomial_coefficient(W({1, 3, 2}), {0, 1}) == 1);
    CHECK(ctx.monomial_coefficient(W({1, 3, 2}), {2}) == 0);  // degree mismatch
}

TEST_CASE("stanley expansions") {
    SchubertContext ctx;
    {
        auto r = stanley_expansion(ctx, W({2, 1, 3}));
        REQUIRE(r.coefficients.size() == 1);
        CHECK(r.coefficients.at(P({1})) == 1);
    }
    {
        auto r = stanley_expansion(ctx, W({2, 1, 4, 3}));
        REQUIRE(r.coefficients.size() == 2);
        CHECK(r.coefficients.at(P({2})) == 1);
        CHECK(r.coefficients.at(P({1, 1})) == 1);
    }
    {
        auto r = stanley_expansion(ctx, Permutation::identity(1));
        REQUIRE(r.coefficients.size() == 1);
        CHECK(r.coefficients.at(Partition{}) == 1);
    }
    // Grassmannian w: F_w = s_lambda
    for (const auto& w : symmetric_group(5)) {
        if (!w.is_grassmannian() || w.length() == 0) continue;
        auto g = grassmannian_to_schur(w);
        auto r = stanley_expansion(ctx, w);
        REQUIRE(r.coefficients.size() == 1);
        CHECK(r.coefficients.at(g.shape) == 1);
    }
}

TEST_CASE("321-avoiding skew shapes") {
    SchubertContext ctx;
    CHECK(skew_shape_of_321_avoiding(W({2, 1})) == SkewShape(P({1}), {}));
    CHECK_THROWS_WITH_AS(skew_shape_of_321_avoiding(W({3, 2, 1})), "contains pattern 321",
                         std::domain_error);
    {
        auto sh = skew_shape_of_321_avoiding(W({2, 3, 1}));
        auto exp = skew_schur_expansion(sh);
        REQUIRE(exp.size() == 1);
        CHECK(exp.at(P({1, 1})) == 1);
    }
    for (const auto& w : symmetric_group(4)) {
        if (!w.avoids_321()) continue;
        auto exp = skew_schur_expansion(skew_shape_of_321_avoiding(w));
        auto stanley = stanley_expansion(ctx, w).coefficients;
        CHECK(exp == stanley);
    }
}
