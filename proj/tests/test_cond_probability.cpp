#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rieszprob/classical.hpp"
#include "rieszprob/cond_probability.hpp"

#include <random>

using namespace rieszprob;

namespace {

struct Gen {
    std::mt19937_64 rng{31337};
    Band band(const SpacePtr& space) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < space->size(); ++i) {
            if (rng() % 2) members.push_back(i);
        }
        return Band::from_indices(space, std::move(members));
    }
    Element positive_element(const SpacePtr& space) {
        std::vector<Rational> coords;
        for (std::size_t i = 0; i < space->size(); ++i) {
            coords.emplace_back(1 + static_cast<long>(rng() % 9));
        }
        return Element(space, std::move(coords));
    }
};

}  // namespace

TEST_CASE("classical example: P(A|B) = 1/2 on the uniform 4-point space") {
    auto space = FiniteSampleSpace::uniform(4);
    CondExpectation t{Partition::one_block(space)};
    Band b1 = Band::from_indices(space, {0, 1});  // {1,2}
    Band b2 = Band::from_indices(space, {1, 2});  // {2,3}

    // oracle: P(A and B)/P(B) = (1/4)/(1/2)
    ClassicalOracle oracle(space);
    CHECK(oracle.cond_prob(b1.members(), b2.members()) == Rational(1, 2));

    CondProbResult result = cond_prob(t, b1, b2, unit_e(space));
    CHECK(result.value == scalar_mul(Rational(1, 2), unit_e(space)));
}

TEST_CASE("full band as B1 gives the unit") {
    auto space = FiniteSampleSpace::uniform(4);
    CondExpectation t{Partition::one_block(space)};
    Gen gen;
    for (int i = 0; i < 20; ++i) {
        Band b2 = gen.band(space);
        Element f = gen.positive_element(space);
        if (!is_invertible(t.apply(project(b2, f)))) continue;
        CHECK(cond_prob(t, Band::full(space), b2, f).value == unit_e(space));
    }
}

TEST_CASE("probability one given itself") {
    auto space = FiniteSampleSpace::uniform(4);
    CondExpectation t{Partition::one_block(space)};
    Band b = Band::from_indices(space, {0, 2});
    CHECK(cond_prob(t, b, b, unit_e(space)).value == unit_e(space));
}

TEST_CASE("proviso failure raises NotInvertible with the outcome label") {
    auto space = FiniteSampleSpace::uniform(4);
    // T with two blocks; B2 misses block {2,3} entirely, so T P_{B2}(e)
    // vanishes there.
    CondExpectation t{Partition::from_blocks(space, {{0, 1}, {2, 3}})};
    Band b1 = Band::from_indices(space, {0});
    Band b2 = Band::from_indices(space, {0, 1});
    try {
        cond_prob(t, b1, b2, unit_e(space));
        FAIL("expected NotInvertibleError");
    } catch (const NotInvertibleError& e) {
        CHECK(e.index == 2);
        CHECK(e.label == "3");
    }
}

TEST_CASE("order of the two projections is irrelevant") {
    Gen gen;
    for (int trial = 0; trial < 100; ++trial) {
        auto space = FiniteSampleSpace::uniform(3 + trial % 4);
        CondExpectation t{Partition::one_block(space)};
        Band b1 = gen.band(space);
        Band b2 = gen.band(space);
        Element f = gen.positive_element(space);
        Element denom = t.apply(project(b2, f));
        if (!is_invertible(denom)) continue;

        CondProbResult result = cond_prob(t, b1, b2, f);
        Element swapped = mul(t.apply(project(b1, project(b2, f))), invert(denom));
        CHECK(result.value == swapped);

        // certificate
        CHECK(mul(result.value, result.denominator) == result.numerator);
    }
}

TEST_CASE("with f = e and one-block T the value is a probability") {
    Gen gen;
    auto space = FiniteSampleSpace::uniform(5);
    CondExpectation t{Partition::one_block(space)};
    ClassicalOracle oracle(space);
    for (int trial = 0; trial < 50; ++trial) {
        Band b1 = gen.band(space);
        Band b2 = gen.band(space);
        if (b2.is_empty()) continue;
        CondProbResult result = cond_prob(t, b1, b2, unit_e(space));
        CHECK(leq(zero_element(space), result.value));
        CHECK(leq(result.value, unit_e(space)));
        Rational classical = oracle.cond_prob(b1.members(), b2.members());
        CHECK(result.value == scalar_mul(classical, unit_e(space)));
    }
}

TEST_CASE("independence of cylinder bands on a product space") {
    // Omega = {1,2} x {1,2} with product weights (1/3,2/3) x (1/4,3/4)
    auto space = FiniteSampleSpace::create(
        {"11", "12", "21", "22"},
        {Rational(1, 12), Rational(3, 12), Rational(2, 12), Rational(6, 12)});
    CondExpectation t{Partition::one_block(space)};
    Band row1 = Band::from_indices(space, {0, 1});  // first coordinate = 1
    Band col1 = Band::from_indices(space, {0, 2});  // second coordinate = 1
    CHECK(independent(t, row1, col1));
    CHECK(independent(t, col1, row1));
    CHECK(independent_strong(t, row1, col1));

    ClassicalOracle oracle(space);
    CHECK(oracle.independent(row1.members(), col1.members()));
}

TEST_CASE("a proper band is not independent of itself") {
    auto space = FiniteSampleSpace::uniform(4);
    CondExpectation t{Partition::one_block(space)};
    Band b = Band::from_indices(space, {0, 1});
    // classical oracle: P(B) != P(B)^2 when 0 < P(B) < 1
    ClassicalOracle oracle(space);
    Rational p = oracle.prob(b.members());
    REQUIRE(p > 0);
    REQUIRE(p < 1);
    CHECK(p != p * p);
    CHECK_FALSE(independent(t, b, b));
}

TEST_CASE("everything is independent of the full band") {
    auto space = FiniteSampleSpace::uniform(4);
    CondExpectation t{Partition::one_block(space)};
    Gen gen;
    for (int i = 0; i < 20; ++i) {
        CHECK(independent(t, gen.band(space), Band::full(space)));
    }
}

TEST_CASE("independence is symmetric") {
    Gen gen;
    for (int trial = 0; trial < 100; ++trial) {
        auto space = FiniteSampleSpace::uniform(3 + trial % 4);
        CondExpectation t{Partition::one_block(space)};
        Band b1 = gen.band(space);
        Band b2 = gen.band(space);
        CHECK(independent(t, b1, b2) == independent(t, b2, b1));
    }
}
