/**
 * @file test_group.cpp
 * @brief Unit tests for finite abelian group arithmetic, subgroup closures,
 *        coset transversals, Haar measure bookkeeping, and the Weil
 *        measure-splitting identity.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numbers>

#include "frozen_values.hpp"
#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

using namespace gdl;
using frozen::cd;

TEST_CASE("make_group validates its order list") {
    CHECK_THROWS_AS(make_group({}), InvalidInputError);
    CHECK_THROWS_AS(make_group({0}), InvalidInputError);
    CHECK_THROWS_AS(make_group({4, -2}), InvalidInputError);

    const GroupSpec g = make_group({2, 3});
    CHECK(g.rank() == 2);
    CHECK(g.size() == 6);
    CHECK(make_group({1}).size() == 1);
}

TEST_CASE("rank and unrank are lexicographic inverses") {
    const GroupSpec g = make_group({2, 3});
    CHECK(rank_of(g, {1, 2}) == 5);  // first coordinate is most significant
    CHECK(rank_of(g, {0, 2}) == 2);
    CHECK(unrank(g, 4) == GroupElement{1, 1});
    for (std::int64_t r = 0; r < g.size(); ++r) CHECK(rank_of(g, unrank(g, r)) == r);
    // unrank enumerates in lexicographic order.
    for (std::int64_t r = 0; r + 1 < g.size(); ++r) CHECK(unrank(g, r) < unrank(g, r + 1));
}

TEST_CASE("addition and negation act componentwise modulo the orders") {
    const GroupSpec g = make_group({2, 3});
    CHECK(add(g, {1, 2}, {1, 2}) == GroupElement{0, 1});
    CHECK(negate(g, {1, 2}) == GroupElement{1, 1});
    CHECK(negate(g, {0, 0}) == GroupElement{0, 0});
    CHECK(zero_of(g) == GroupElement{0, 0});
    for (const auto& a : all_elements(g)) CHECK(add(g, a, negate(g, a)) == zero_of(g));
}

TEST_CASE("all_elements lists the group in lexicographic order") {
    const GroupSpec g = make_group({2, 3});
    const auto pts = all_elements(g);
    REQUIRE(pts.size() == 6);
    CHECK(pts.front() == GroupElement{0, 0});
    CHECK(pts.back() == GroupElement{1, 2});
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("characters pair elements through exact rational angles") {
    const GroupSpec g4 = make_group({4});
    // ⟨2, 2⟩ = 4/4 ≡ 0: the phase factor is exactly one.
    CHECK(character_angle(g4, {2}, {2}).is_zero());
    CHECK(std::abs(character(g4, {1}, {1}) - cd(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(character(g4, {2}, {1}) - cd(-1.0, 0.0)) < 1e-15);

    const GroupSpec g6 = make_group({6});
    for (std::int64_t x = 0; x < 6; ++x)
        for (std::int64_t w = 0; w < 6; ++w) {
            CHECK(character_angle(g6, {x}, {w}) == RationalAngle::from_fraction(x * w, 6));
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(x * w % 6) / 6.0;
            CHECK(std::abs(character(g6, {x}, {w}) - cd(std::cos(theta), std::sin(theta))) <
                  1e-12);
        }

    // Bilinearity holds exactly on the angle level.
    const GroupSpec g23 = make_group({2, 3});
    for (const auto& x : all_elements(g23))
        for (const auto& w1 : all_elements(g23))
            for (const auto& w2 : all_elements(g23))
                CHECK(character_angle(g23, x, add(g23, w1, w2)) ==
                      character_angle(g23, x, w1) + character_angle(g23, x, w2));
}

TEST_CASE("subgroup closure builds sorted, closed element lists") {
    const GroupSpec plane = plane_of(make_group({6}));
    const Subgroup lat = subgroup_closure(plane, {{2, 0}, {0, 3}});
    CHECK(lat.elements == frozen::kLatticeZ6);
    CHECK(lat.weight == 1.0);
    CHECK(lat.contains({4, 3}));
    CHECK_FALSE(lat.contains({1, 0}));
    CHECK(lat.index_of({2, 3}) == 3);
    CHECK_THROWS_AS(lat.index_of({1, 1}), InvalidInputError);

    // Closure of nothing is the trivial subgroup.
    const Subgroup trivial = subgroup_closure(plane, {});
    CHECK(trivial.elements == std::vector<GroupElement>{{0, 0}});

    CHECK_THROWS_AS(subgroup_closure(plane, {{2, 0}}, 0.0), InvalidInputError);
    CHECK_THROWS_AS(subgroup_closure(plane, {{2, 0}}, -1.0), InvalidInputError);
    CHECK_THROWS_AS(subgroup_closure(plane, {{6, 0}}), InvalidInputError);
    CHECK_THROWS_AS(subgroup_closure(plane, {{0}}), InvalidInputError);
}

TEST_CASE("coset transversals pick the lex-least representative of each coset") {
    const GroupSpec plane = plane_of(make_group({6}));
    const Subgroup lat = subgroup_closure(plane, {{2, 0}, {0, 3}});
    const auto reps = coset_transversal(all_elements(plane), lat);
    REQUIRE(reps.size() == 6);  // 36 / 6 cosets
    CHECK(reps.front() == GroupElement{0, 0});
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    // Each representative is lexicographically minimal within its coset.
    for (const auto& r : reps)
        for (const auto& lam : lat.elements) CHECK(r <= add(plane, r, lam));

    // Transversal of the trivial subgroup inside a supergroup lists it all.
    const Subgroup trivial = subgroup_closure(plane, {});
    const Subgroup four = subgroup_closure(plane, {{0, 3}, {3, 0}});
    const auto all = coset_transversal(four.elements, trivial);
    CHECK(all == four.elements);
}

TEST_CASE("haar_mass reads the base mass off a doubled spec") {
    CHECK(haar_mass(plane_of(make_group({6}))) == 6);
    CHECK(haar_mass(plane_of(make_group({2, 3}))) == 6);
    CHECK(haar_mass(make_group({2, 2})) == 2);  // a valid doubling of Z_2
    CHECK_THROWS_AS(haar_mass(make_group({2, 3})), InvalidInputError);
    CHECK_THROWS_AS(haar_mass(make_group({4})), InvalidInputError);
}

TEST_CASE("covolume counts mass per lattice point, exactly when asked") {
    const GroupSpec plane6 = plane_of(make_group({6}));
    const Subgroup l6 = subgroup_closure(plane6, {{2, 0}, {0, 3}});
    CHECK(covolume(plane6, l6) == 1.0);
    CHECK(covolume_exact(plane6, l6) == std::pair<std::int64_t, std::int64_t>{1, 1});

    const GroupSpec plane4 = plane_of(make_group({4}));
    const Subgroup l4 = subgroup_closure(plane4, {{1, 0}, {0, 2}});
    CHECK(covolume(plane4, l4) == 0.5);
    CHECK(covolume_exact(plane4, l4) == std::pair<std::int64_t, std::int64_t>{1, 2});

    // A weight-2 two-element lattice on the Z_4 plane has covolume 1.
    const Subgroup weighted = subgroup_closure(plane4, {{0, 2}}, 2.0);
    CHECK(covolume(plane4, weighted) == 1.0);
    CHECK_THROWS_AS(covolume_exact(plane4, weighted), InvalidInputError);
}

TEST_CASE("Weil's measure-splitting identity holds for deterministic functions") {
    const GroupSpec base = make_group({6});
    const GroupSpec plane = plane_of(base);
    const Signal F = frozen::make_signals(plane, 1)[0];  // a function on the plane
    const Subgroup l6 = subgroup_closure(plane, {{2, 0}, {0, 3}});
    CHECK(weil_verify(plane, l6, F) < 1e-10);

    // Also with a non-unit weight and on a different plane.
    const GroupSpec plane4 = plane_of(make_group({4}));
    const Signal F4 = frozen::make_signals_alt(plane4, 1)[0];
    const Subgroup weighted = subgroup_closure(plane4, {{0, 2}}, 2.0);
    CHECK(weil_verify(plane4, weighted, F4) < 1e-10);
    const Subgroup full = subgroup_closure(plane4, {{1, 0}, {0, 1}});
    CHECK(weil_verify(plane4, full, F4) < 1e-10);
}
