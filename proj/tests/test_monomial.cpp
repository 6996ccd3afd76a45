#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "lochom/errors.hpp"
#include "lochom/monomial.hpp"
#include "oracles.hpp"

using namespace lochom;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

bool is_antichain(const MonomialIdeal& I) {
    for (const auto& a : I.gens())
        for (const auto& b : I.gens())
            if (!(a == b) && a.divides(b)) return false;
    return true;
}

} // namespace

TEST_CASE("parse_ideal") {
    SUBCASE("plain generators") {
        const auto I = parse_ideal("x1*x3, x1*x4", 4);
        CHECK(I.gens() == std::vector<Monomial>{mono({1, 0, 0, 1}), mono({1, 0, 1, 0})});
    }
    SUBCASE("minimalizes") { CHECK(parse_ideal("x1, x1*x2", 2) == parse_ideal("x1", 2)); }
    SUBCASE("projection of the 5-cycle ideal") {
        const auto I = parse_ideal("x2*x5, x3, x4", 5);
        CHECK(I == project(corpus::cycle_ideal(5), VertexSet::of({0})));
    }
    SUBCASE("constants, exponents, whitespace and newlines") {
        CHECK(parse_ideal("0", 3).is_zero());
        CHECK(parse_ideal("", 3).is_zero());
        CHECK(parse_ideal(" 1 ", 3).is_unit());
        CHECK(parse_ideal("x1 ^ 2 * x2\n x3^3", 3).gens() ==
              std::vector<Monomial>{mono({0, 0, 3}), mono({2, 1, 0})});
        CHECK(parse_ideal("x1*x1", 1) == parse_ideal("x1^2", 1));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_ideal("x5", 4), ParseError);
        CHECK_THROWS_AS(parse_ideal("x0", 4), ParseError);
        CHECK_THROWS_AS(parse_ideal("x1^-2", 2), ParseError);
        CHECK_THROWS_AS(parse_ideal("x1 x2", 2), ParseError);
        CHECK_THROWS_AS(parse_ideal("y1", 2), ParseError);
        CHECK_THROWS_AS(parse_ideal("x1*", 2), ParseError);
        try {
            parse_ideal("x1, x1*x9", 3);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 8);
        }
    }
}

TEST_CASE("minimalize") {
    CHECK(minimalize({mono({1, 0}), mono({1, 1})}) == std::vector<Monomial>{mono({1, 0})});
    const std::vector<Monomial> triangle = {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})};
    CHECK(minimalize(triangle).size() == 3);
    CHECK(minimalize({mono({0, 0}), mono({1, 0})}) == std::vector<Monomial>{mono({0, 0})});
    CHECK_THROWS_AS(minimalize({mono({1}), mono({1, 0})}), DomainError);

    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        const auto I = corpus::random_ideal(rng, {5, 6, 4, false});
        CHECK(minimalize(I.gens()) == I.gens());
        CHECK(is_antichain(I));
    }
}

TEST_CASE("power") {
    const auto m = MonomialIdeal::maximal(2);
    CHECK(power(m, 2) == parse_ideal("x1^2, x1*x2, x2^2", 2));
    CHECK(power(parse_ideal("x1*x2", 2), 3) == parse_ideal("x1^3*x2^3", 2));
    CHECK(power(m, 1) == m);
    CHECK(power(MonomialIdeal::zero(2), 3).is_zero());
    CHECK(power(MonomialIdeal::unit(2), 3).is_unit());
    CHECK_THROWS_AS(power(m, 0), DomainError);

    // 15 pairwise products of the five quadrics, none redundant
    const auto c5 = corpus::cycle_ideal(5);
    const auto sq = power(c5, 2);
    CHECK(sq == oracle::power_by_products(c5, 2));
    CHECK(sq.size() == 15);

    std::mt19937 rng(11);
    for (int k = 0; k < 30; ++k) {
        const auto I = corpus::random_ideal(rng, {4, 4, 3, false});
        for (int n = 1; n <= 3; ++n) {
            const auto p = power(I, n);
            CHECK(p == oracle::power_by_products(I, n));
            CHECK(is_subset(power(I, n + 1), p));
            CHECK(is_antichain(p));
        }
    }
}

TEST_CASE("contains") {
    const auto I = parse_ideal("x1*x2", 2);
    CHECK(contains(I, mono({2, 1})));
    CHECK_FALSE(contains(I, mono({2, 0})));
    CHECK(contains(MonomialIdeal::unit(2), mono({0, 0})));
    CHECK_FALSE(contains(MonomialIdeal::zero(2), mono({3, 3})));
    CHECK_THROWS_AS(contains(I, mono({1, 1, 1})), DomainError);
}

TEST_CASE("project") {
    for (int d : {5, 6, 7, 8}) {
        std::string expected = "x2*x" + std::to_string(d);
        for (int j = 3; j <= d - 1; ++j) expected += ", x" + std::to_string(j);
        CHECK(project(corpus::cycle_ideal(d), VertexSet::of({0})) == parse_ideal(expected, d));
    }
    const auto I = parse_ideal("x1*x2, x2^2*x3", 3);
    CHECK(project(I, VertexSet{}) == I);
    CHECK(project(parse_ideal("x1*x2", 2), VertexSet::of({0, 1})).is_unit());
    CHECK_THROWS_AS(project(I, VertexSet::of({3})), DomainError);

    // F ⊆ F' implies I_F ⊆ I_F'
    std::mt19937 rng(3);
    for (int k = 0; k < 40; ++k) {
        const auto J = corpus::random_ideal(rng, {4, 4, 3, false});
        const int d = J.dim();
        for (std::uint32_t f = 0; f < (1u << d); ++f)
            for (std::uint32_t g = f;; g = (g + 1) | f) {
                if (g >= (1u << d)) break;
                CHECK(is_subset(project(J, VertexSet(f)), project(J, VertexSet(g))));
            }
    }
}

TEST_CASE("saturate_irrelevant") {
    SUBCASE("principal ideal is saturated") {
        // (x2) ∩ (x1) = (x1 x2): check the one colon step on the exponent box
        const auto I = parse_ideal("x1*x2", 2);
        const auto inter = oracle::ideal_from_predicate(2, {3, 3}, [](const std::vector<int>& b) {
            return b[1] >= 1 && b[0] >= 1;
        });
        CHECK(inter == I);
        CHECK(colon_maximal(I) == I);
        CHECK(saturate_irrelevant(I) == I);
    }
    SUBCASE("m-primary saturates to the unit ideal") {
        CHECK(saturate_irrelevant(power(MonomialIdeal::maximal(2), 2)).is_unit());
    }
    SUBCASE("5-cycle: saturation of I^2 is the intersection of squared primes") {
        const auto sat = saturate_irrelevant(power(corpus::cycle_ideal(5), 2));
        CHECK(sat == oracle::cycle_symbolic_power(5, 2));
    }
    SUBCASE("cycles up to 7 and n up to 4") {
        for (int d = 5; d <= 7; ++d)
            for (int n = 1; n <= 4; ++n)
                CHECK(saturate_irrelevant(power(corpus::cycle_ideal(d), n)) == oracle::cycle_symbolic_power(d, n));
    }
    SUBCASE("agrees with the colon fixpoint, contains I, idempotent") {
        std::mt19937 rng(5);
        for (int k = 0; k < 60; ++k) {
            const auto I = corpus::random_ideal(rng, {4, 4, 3, false});
            const auto s = saturate_irrelevant(I);
            CHECK(s == oracle::saturate_by_colon(I));
            CHECK(is_subset(I, s));
            CHECK(saturate_irrelevant(s) == s);
        }
    }
    SUBCASE("squarefree ideals without m-primary support are saturated") {
        std::mt19937 rng(6);
        for (int k = 0; k < 60; ++k) {
            const auto I = corpus::random_ideal(rng, {5, 4, 3, true});
            if (krull_dimension(I) == 0) continue;
            CHECK(saturate_irrelevant(I) == I);
        }
    }
}

TEST_CASE("radical") {
    CHECK(radical(parse_ideal("x1^2*x2", 2)) == parse_ideal("x1*x2", 2));
    CHECK(radical(corpus::cycle_ideal(5)) == corpus::cycle_ideal(5));
    CHECK(radical(power(MonomialIdeal::maximal(3), 2)) == MonomialIdeal::maximal(3));
    std::mt19937 rng(9);
    for (int k = 0; k < 40; ++k) {
        const auto I = corpus::random_ideal(rng, {4, 4, 3, false});
        const auto r = radical(I);
        CHECK(r.is_squarefree());
        CHECK(radical(r) == r);
        for (int n = 2; n <= 4; ++n) CHECK(radical(power(I, n)) == r);
    }
}

TEST_CASE("var_degree_bounds") {
    CHECK(var_degree_bounds(parse_ideal("x1^2, x1*x2^3", 2)).rho == std::vector<int>{2, 3});
    CHECK(var_degree_bounds(corpus::cycle_ideal(5)).rho == std::vector<int>(5, 1));
    CHECK(var_degree_bounds(power(MonomialIdeal::maximal(2), 2)).rho == std::vector<int>{2, 2});
    CHECK(var_degree_bounds(MonomialIdeal::zero(3)).rho == std::vector<int>(3, 0));
    CHECK(var_degree_bounds(MonomialIdeal::unit(3)).rho == std::vector<int>(3, 0));
}

TEST_CASE("hilbert_function") {
    const auto m = MonomialIdeal::maximal(2);
    CHECK(hilbert_function(m, 0) == 1);
    for (int t = 1; t < 5; ++t) CHECK(hilbert_function(m, t) == 0);
    for (int t = 0; t < 6; ++t) CHECK(hilbert_function(MonomialIdeal::zero(2), t) == static_cast<std::uint64_t>(t + 1));
    CHECK(hilbert_function(parse_ideal("x1*x2", 2), 3) == 2);
    CHECK_THROWS_AS(hilbert_function(MonomialIdeal::unit(2), 1), DomainError);
    CHECK_THROWS_AS(hilbert_function(m, -1), DomainError);

    // both counting routes agree on a random corpus
    std::mt19937 rng(13);
    for (int k = 0; k < 120; ++k) {
        const auto I = corpus::random_ideal(rng, {5, 5, 4, false});
        for (int t = 0; t <= 8; ++t) {
            CHECK(hilbert_function_inclusion_exclusion(I, t) == hilbert_function_enumerate(I, t));
        }
    }
}

TEST_CASE("krull_dimension") {
    CHECK(krull_dimension(power(MonomialIdeal::maximal(3), 2)) == 0);
    CHECK(krull_dimension(corpus::cycle_ideal(5)) == 2);
    CHECK(krull_dimension(parse_ideal("x1*x2", 2)) == 1);
    CHECK(krull_dimension(MonomialIdeal::zero(4)) == 4);
    CHECK_THROWS_AS(krull_dimension(MonomialIdeal::unit(2)), DomainError);
}
