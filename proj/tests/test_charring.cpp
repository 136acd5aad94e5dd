#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <modchar/charring.hpp>
#include <modchar/json_io.hpp>

#include <random>

using namespace modchar;

namespace {

Character random_character(std::mt19937& rng, int rank, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long long> coord(-5, 5);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::vector<Character::Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Weight w(static_cast<std::size_t>(rank));
        for (int j = 0; j < rank; ++j) w[j] = coord(rng);
        terms.push_back({w, coeff(rng)});
    }
    return Character::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("add: examples") {
    auto e = [](long long k) { return Character::unit(Weight{k}); };
    CHECK(add(e(1), e(1)) == scale(e(1), 2));
    Character x = add(e(3), negate(e(0)));
    CHECK(add(x, Character()) == x);
    CHECK(add(e(1), negate(e(1))).is_zero());
}

TEST_CASE("multiply: examples") {
    auto e = [](long long k) { return Character::unit(Weight{k}); };
    CHECK(multiply(e(2), e(3)) == e(5));
    Character chi1 = add(e(1), e(-1));
    Character sq = multiply(chi1, chi1);
    CHECK(sq == Character::from_terms({{Weight{2}, 1}, {Weight{0}, 2}, {Weight{-2}, 1}}));
    CHECK(multiply(chi1, Character()).is_zero());
}

TEST_CASE("translate: examples") {
    auto e = [](long long k) { return Character::unit(Weight{k}); };
    CHECK(translate(e(0), Weight{5}) == e(5));
    Character x = Character::from_terms({{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}});
    CHECK(translate(x, Weight{-2}) ==
          Character::from_terms({{Weight{0}, 1}, {Weight{-2}, 1}, {Weight{-4}, 1}}));
    CHECK(translate(x, Weight{0}) == x);
    CHECK(translate(x, Weight{-2}) == multiply(x, e(-2)));
}

TEST_CASE("frobenius_twist: examples") {
    Character chi1 = Character::from_terms({{Weight{1}, 1}, {Weight{-1}, 1}});
    CHECK(frobenius_twist(chi1, 3, 0) == chi1);
    CHECK(frobenius_twist(chi1, 3, 1) ==
          Character::from_terms({{Weight{3}, 1}, {Weight{-3}, 1}}));
    CHECK(frobenius_twist(Character(), 5, 2).is_zero());
    CHECK_THROWS_AS(frobenius_twist(chi1, 1, 1), std::invalid_argument);
}

TEST_CASE("is_weyl_invariant: examples") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(is_weyl_invariant(a1, Character::from_terms({{Weight{1}, 1}, {Weight{-1}, 1}})));
    CHECK_FALSE(is_weyl_invariant(a1, Character::from_terms({{Weight{1}, 1}, {Weight{-3}, 1}})));
    CHECK(is_weyl_invariant(a1, Character()));
}

TEST_CASE("max_weight: examples") {
    auto a1 = RootSystem::build('A', 1);
    Character x = Character::from_terms({{Weight{3}, 1}, {Weight{1}, 2}});
    CHECK(*max_weight(a1, x) == Weight{3});
    CHECK_FALSE(max_weight(a1, Character()).has_value());
    auto a2 = RootSystem::build('A', 2);
    Character y = Character::from_terms({{Weight{1, 0}, 1}, {Weight{0, 1}, 1}});
    CHECK(*max_weight(a2, y) == Weight{1, 0});  // equal height, lex tie-break
}

TEST_CASE("max_weight is dominance-maximal in the support") {
    std::mt19937 rng(99);
    auto b2 = RootSystem::build('B', 2);
    for (int trial = 0; trial < 300; ++trial) {
        Character x = random_character(rng, 2, 12);
        if (x.is_zero()) continue;
        Weight m = *max_weight(b2, x);
        for (const auto& t : x.terms())
            if (t.weight != m) CHECK_FALSE(b2.dominance_leq(m, t.weight));
    }
}

TEST_CASE("ring laws on random characters") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 60; ++trial) {
        Character x = random_character(rng, 2, 6);
        Character y = random_character(rng, 2, 6);
        Character z = random_character(rng, 2, 6);
        CHECK(multiply(x, y) == multiply(y, x));
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        CHECK(add(x, y) == add(y, x));
        CHECK(multiply(x, add(y, z)) == add(multiply(x, y), multiply(x, z)));
    }
}

TEST_CASE("mass and twist are multiplicative; translation composes") {
    std::mt19937 rng(868);
    for (int trial = 0; trial < 80; ++trial) {
        Character x = random_character(rng, 2, 8);
        Character y = random_character(rng, 2, 8);
        CHECK(multiply(x, y).total_mass() == x.total_mass() * y.total_mass());
        CHECK(frobenius_twist(multiply(x, y), 3, 1) ==
              multiply(frobenius_twist(x, 3, 1), frobenius_twist(y, 3, 1)));
        Weight a{2, -1}, b{-3, 4};
        CHECK(translate(x, a + b) == translate(translate(x, a), b));
    }
}

TEST_CASE("json round-trip is bit-exact") {
    auto b2 = RootSystem::build('B', 2);
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        Character x = random_character(rng, 2, 10);
        auto j = character_to_json(b2, x);
        CHECK(character_from_json(j, b2, "test") == x);
        CHECK(character_to_json(b2, character_from_json(j, b2, "test")).dump() == j.dump());
    }
    // coefficients beyond 64 bits travel as decimal strings
    Int big = pow_int(Int(10), 30);
    Character huge = scale(Character::unit(Weight{1, 1}), big);
    auto j = character_to_json(b2, huge);
    CHECK(j[0]["coeff"].is_string());
    CHECK(character_from_json(j, b2, "test") == huge);
}

TEST_CASE("json rejects inexact and malformed coefficients") {
    auto a1 = RootSystem::build('A', 1);
    using nlohmann::json;
    CHECK_THROWS(character_from_json(json::parse(R"([{"weight":[1],"coeff":1.5}])"), a1, "t"));
    CHECK_THROWS(character_from_json(json::parse(R"([{"weight":[1],"coeff":1e30}])"), a1, "t"));
    CHECK_THROWS(character_from_json(json::parse(R"([{"weight":[1],"coeff":"12x"}])"), a1, "t"));
    CHECK_THROWS(character_from_json(
        json::parse(R"([{"weight":[1],"coeff":1},{"weight":[1],"coeff":2}])"), a1, "t"));
    CHECK_THROWS(character_from_json(json::parse(R"([{"weight":[1,2],"coeff":1}])"), a1, "t"));
}

TEST_CASE("pretty rendering in canonical order") {
    auto a1 = RootSystem::build('A', 1);
    Character x = Character::from_terms(
        {{Weight{-1}, 2}, {Weight{3}, 1}, {Weight{1}, 2}, {Weight{-3}, 1}});
    CHECK(pretty(a1, x) == "e[3] + 2e[1] + 2e[-1] + e[-3]");
    CHECK(pretty(a1, Character()) == "0");
    CHECK(pretty(a1, negate(Character::unit(Weight{2}))) == "-e[2]");
}
