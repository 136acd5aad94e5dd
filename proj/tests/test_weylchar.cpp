#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <modchar/weylchar.hpp>

#include <random>
#include <thread>

using namespace modchar;

TEST_CASE("weyl_character: rank-1 closed form") {
    auto a1 = RootSystem::build('A', 1);
    for (long long n : {0, 1, 2, 5, 8}) {
        Character chi = weyl_character(a1, Weight{n});
        CHECK(chi.support_size() == static_cast<std::size_t>(n + 1));
        for (long long k = -n; k <= n; k += 2) CHECK(chi.coeff_at(Weight{k}) == 1);
        CHECK(chi.total_mass() == n + 1);
    }
}

TEST_CASE("weyl_character: A2 adjoint") {
    auto a2 = RootSystem::build('A', 2);
    Character adj = weyl_character(a2, Weight{1, 1});
    CHECK(adj.total_mass() == 8);
    CHECK(adj.coeff_at(Weight{0, 0}) == 2);
    CHECK(adj.coeff_at(Weight{1, 1}) == 1);
    CHECK(adj.support_size() == 7);
    CHECK(is_weyl_invariant(a2, adj));
}

TEST_CASE("weyl_character: trivial weight and rejection of non-dominant input") {
    for (const char* spec : {"A1", "B2", "G2"}) {
        auto rs = RootSystem::build(spec[0], spec[1] - '0');
        CHECK(weyl_character(rs, Weight(static_cast<std::size_t>(rs.rank()))) ==
              Character::unit(Weight(static_cast<std::size_t>(rs.rank()))));
    }
    auto a1 = RootSystem::build('A', 1);
    CHECK_THROWS_AS(weyl_character(a1, Weight{-1}), std::invalid_argument);
    CHECK_THROWS_AS(weyl_character_altsum(a1, Weight{-1}), std::invalid_argument);
}

TEST_CASE("weyl_character_altsum: examples and rank guard") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(weyl_character_altsum(a1, Weight{3}) ==
          Character::from_terms({{Weight{3}, 1}, {Weight{1}, 1}, {Weight{-1}, 1},
                                 {Weight{-3}, 1}}));
    auto a2 = RootSystem::build('A', 2);
    Character v = weyl_character_altsum(a2, Weight{1, 0});
    CHECK(v.support_size() == 3);
    CHECK(v.total_mass() == 3);
    CHECK(weyl_character_altsum(a2, Weight{0, 0}) == Character::unit(Weight{0, 0}));
    auto d4 = RootSystem::build('D', 4);
    CHECK_THROWS_AS(weyl_character_altsum(d4, Weight{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("Freudenthal equals the alternating sum for all small weights, rank <= 2") {
    for (const char* spec : {"A1", "A2", "B2", "C2", "G2"}) {
        auto rs = RootSystem::build(spec[0], spec[1] - '0');
        CAPTURE(spec);
        // all dominant lambda of height <= 8
        std::vector<Weight> lams;
        for (long long c0 = 0; c0 <= 20; ++c0) {
            for (long long c1 = 0; c1 <= 20; ++c1) {
                if (rs.rank() == 1 && c1 > 0) break;
                Weight lam = rs.rank() == 1 ? Weight{c0} : Weight{c0, c1};
                if (rs.height(lam) <= Rational(8)) lams.push_back(lam);
            }
        }
        CHECK(lams.size() > 3);
        for (const auto& lam : lams)
            CHECK(weyl_character(rs, lam) == weyl_character_altsum(rs, lam));
    }
}

TEST_CASE("mass equals the Weyl dimension formula on random dominant weights") {
    std::mt19937 rng(314159);
    for (const char* spec : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4", "F4"}) {
        auto rs = RootSystem::build(spec[0], spec[1] - '0');
        CAPTURE(spec);
        long long hi = rs.rank() <= 2 ? 5 : 2;
        std::uniform_int_distribution<long long> dist(0, hi);
        for (int trial = 0; trial < 5; ++trial) {
            Weight lam(static_cast<std::size_t>(rs.rank()));
            for (int i = 0; i < rs.rank(); ++i) lam[i] = dist(rng);
            CHECK(weyl_character(rs, lam).total_mass() == weyl_dimension(rs, lam));
        }
    }
}

TEST_CASE("weyl_dimension: classical fundamental representation dimensions") {
    struct Row { const char* name; std::vector<long long> w; long long dim; };
    for (const Row& r : std::vector<Row>{
             {"A2", {1, 0}, 3},          {"A2", {1, 1}, 8},
             {"A3", {0, 1, 0}, 6},       {"A4", {0, 1, 0, 0}, 10},
             {"B2", {1, 0}, 5},          {"B2", {0, 1}, 4},
             {"B3", {1, 0, 0}, 7},       {"B3", {0, 0, 1}, 8},
             {"C2", {1, 0}, 4},          {"C2", {0, 1}, 5},
             {"C3", {1, 0, 0}, 6},       {"C3", {0, 1, 0}, 14},
             {"D4", {1, 0, 0, 0}, 8},    {"D4", {0, 0, 1, 0}, 8},
             {"D4", {0, 0, 0, 1}, 8},    {"D4", {0, 1, 0, 0}, 28},
             {"D5", {1, 0, 0, 0, 0}, 10}, {"D5", {0, 0, 0, 0, 1}, 16},
             {"G2", {1, 0}, 7},          {"G2", {0, 1}, 14},
             {"F4", {0, 0, 0, 1}, 26},   {"F4", {1, 0, 0, 0}, 52},
             {"E6", {1, 0, 0, 0, 0, 0}, 27},    {"E6", {0, 1, 0, 0, 0, 0}, 78},
             {"E7", {0, 0, 0, 0, 0, 0, 1}, 56}, {"E7", {1, 0, 0, 0, 0, 0, 0}, 133},
             {"E8", {0, 0, 0, 0, 0, 0, 0, 1}, 248}}) {
        auto rs = RootSystem::build(r.name[0], r.name[1] - '0');
        CAPTURE(r.name);
        CHECK(weyl_dimension(rs, Weight(r.w)) == r.dim);
    }
}

TEST_CASE("steinberg_character: examples") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(steinberg_character(a1, 3, 1) ==
          Character::from_terms({{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}}));
    CHECK(steinberg_character(a1, 2, 2) == weyl_character(a1, Weight{3}));
    CHECK(steinberg_character(a1, 2, 2).total_mass() == 4);
    auto a2 = RootSystem::build('A', 2);
    CHECK(steinberg_character(a2, 2, 1).total_mass() == 8);  // 2^|Phi+|
    CHECK_THROWS_AS(steinberg_character(a1, 2, 0), std::invalid_argument);
}

TEST_CASE("baby_verma_character: examples and leading term") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(baby_verma_character(a1, 3, 1, Weight{1}) ==
          Character::from_terms({{Weight{1}, 1}, {Weight{-1}, 1}, {Weight{-3}, 1}}));
    CHECK(baby_verma_character(a1, 2, 1, Weight{2}) ==
          Character::from_terms({{Weight{2}, 1}, {Weight{0}, 1}}));
    CHECK(baby_verma_character(a1, 3, 1, Weight{2}) == steinberg_character(a1, 3, 1));

    for (const char* spec : {"A1", "B2", "G2"}) {
        auto rs = RootSystem::build(spec[0], spec[1] - '0');
        for (long long p : {2, 3}) {
            Weight lam(static_cast<std::size_t>(rs.rank()));
            lam[0] = -2;
            Character z = baby_verma_character(rs, p, 1, lam);
            CHECK(*max_weight(rs, z) == lam);
            CHECK(z.coeff_at(lam) == 1);
            CHECK(z.total_mass() ==
                  pow_int(Int(p), static_cast<unsigned>(rs.positive_roots().size())));
            CHECK_FALSE(is_weyl_invariant(rs, z));
        }
    }
}

TEST_CASE("weyl characters are Weyl-invariant with top coefficient 1") {
    for (const char* spec : {"A2", "B2", "G2"}) {
        auto rs = RootSystem::build(spec[0], spec[1] - '0');
        for (Weight lam : {Weight{2, 0}, Weight{1, 2}, Weight{3, 1}}) {
            Character chi = weyl_character(rs, lam);
            CHECK(is_weyl_invariant(rs, chi));
            CHECK(chi.coeff_at(lam) == 1);
            CHECK(*max_weight(rs, chi) == lam);
            // support below lambda after dominant conjugation
            for (const auto& t : chi.terms())
                CHECK(rs.dominance_leq(rs.dominant_conjugate(t.weight), lam));
        }
    }
}

TEST_CASE("cache: concurrent readers agree with serial computation") {
    auto g2 = RootSystem::build('G', 2);
    WeylCharacterCache cache(g2);
    std::vector<Weight> lams = {Weight{1, 0}, Weight{0, 1}, Weight{1, 1},
                                Weight{2, 0}, Weight{2, 1}, Weight{0, 2}};
    std::vector<Character> expected;
    for (const auto& lam : lams) expected.push_back(weyl_character(g2, lam));

    std::vector<std::thread> workers;
    std::vector<int> failures(4, 0);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (int round = 0; round < 20; ++round)
                for (std::size_t i = 0; i < lams.size(); ++i)
                    if (cache.weyl(lams[i]) != expected[i]) ++failures[t];
        });
    }
    for (auto& w : workers) w.join();
    for (int f : failures) CHECK(f == 0);
    CHECK(cache.steinberg(2, 1) == steinberg_character(g2, 2, 1));
}
