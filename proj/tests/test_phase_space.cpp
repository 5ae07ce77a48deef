/**
 * @file test_phase_space.cpp
 * @brief Unit tests for phase-space doubling, cocycles, time-frequency
 *        shifts, the short-time Fourier transform, the symplectic Fourier
 *        transform, and adjoint subgroups.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "frozen_values.hpp"
#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

using namespace gdl;
using frozen::cd;

TEST_CASE("plane_of doubles the orders and base_of undoes it") {
    const GroupSpec base = make_group({2, 3});
    const GroupSpec plane = plane_of(base);
    CHECK(plane.orders == std::vector<std::int64_t>{2, 3, 2, 3});
    CHECK(base_of(plane) == base);
    CHECK_THROWS_AS(base_of(make_group({2, 3, 2})), InvalidInputError);   // odd rank
    CHECK_THROWS_AS(base_of(make_group({2, 3, 2, 4})), InvalidInputError);  // mismatched halves
}

TEST_CASE("the cocycle is the conjugated character pairing") {
    const GroupSpec g4 = make_group({4});
    // c((x1,ω1),(x2,ω2)) = exp(−2πi⟨x1,ω2⟩): here ⟨1,1⟩ = 1/4 → −i.
    CHECK(std::abs(cocycle(g4, {1, 0}, {0, 1}) - cd(0.0, -1.0)) < 1e-15);
    CHECK(cocycle_angle(g4, {0, 1}, {1, 0}).is_zero());  // no pairing the other way

    const GroupSpec plane = plane_of(g4);
    const auto pts = all_elements(plane);
    for (const auto& a : pts)
        for (const auto& b : pts)
            CHECK(cocycle_angle(g4, a, b) == RationalAngle::from_fraction(-a[0] * b[1], 4));

    // 2-cocycle identity c(a,b)·c(a+b,c) = c(a,b+c)·c(b,c), exact on angles.
    const GroupSpec g2 = make_group({2});
    const GroupSpec plane2 = plane_of(g2);
    const auto pts2 = all_elements(plane2);
    for (const auto& a : pts2)
        for (const auto& b : pts2)
            for (const auto& c : pts2)
                CHECK(cocycle_angle(g2, a, b) + cocycle_angle(g2, add(plane2, a, b), c) ==
                      cocycle_angle(g2, a, add(plane2, b, c)) + cocycle_angle(g2, b, c));
}

TEST_CASE("the symplectic cocycle is antisymmetric and combines both pairings") {
    const GroupSpec g4 = make_group({4});
    // c_s(χ1,χ2) = exp(2πi(⟨x2,ω1⟩ − ⟨x1,ω2⟩)).
    CHECK(std::abs(symplectic_cocycle(g4, {1, 0}, {0, 1}) - cd(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(symplectic_cocycle(g4, {0, 1}, {1, 0}) - cd(0.0, 1.0)) < 1e-15);

    const auto pts = all_elements(plane_of(g4));
    for (const auto& a : pts) {
        CHECK(symplectic_cocycle_angle(g4, a, a).is_zero());
        for (const auto& b : pts) {
            CHECK(symplectic_cocycle_angle(g4, a, b) ==
                  RationalAngle::from_fraction(b[0] * a[1] - a[0] * b[1], 4));
            CHECK(symplectic_cocycle_angle(g4, a, b) == -symplectic_cocycle_angle(g4, b, a));
        }
    }
}

TEST_CASE("time-frequency shifts translate then modulate") {
    const GroupSpec g4 = make_group({4});
    const Signal d0 = frozen::delta(4, 0);

    // Pure translation moves the delta.
    CHECK((tf_shift(g4, {1, 0}, d0) - frozen::delta(4, 1)).cwiseAbs().maxCoeff() < 1e-15);

    // Pure modulation multiplies pointwise by the character.
    Signal ones(4);
    ones.setOnes();
    const Signal mod = tf_shift(g4, {0, 1}, ones);
    for (std::int64_t t = 0; t < 4; ++t)
        CHECK(std::abs(mod(t) - character(g4, {t}, {1})) < 1e-14);

    // The matrix form agrees with the functional form.
    const GroupSpec g6 = make_group({6});
    const Signal f = frozen::make_signals(g6, 1)[0];
    const Eigen::MatrixXcd m = tf_shift_matrix(g6, {2, 3});
    CHECK((m * f - tf_shift(g6, {2, 3}, f)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("shift composition and adjoint follow the cocycle laws") {
    const GroupSpec g4 = make_group({4});
    const GroupSpec plane = plane_of(g4);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    for (const auto& a : all_elements(plane)) {
        const Eigen::MatrixXcd pa = tf_shift_matrix(g4, a);
        // Unitarity.
        CHECK((pa.adjoint() * pa - id).cwiseAbs().maxCoeff() < 1e-14);
        // π(χ)* = c(χ,χ)·π(−χ).
        const Eigen::MatrixXcd adj =
            cocycle(g4, a, a) * tf_shift_matrix(g4, negate(plane, a));
        CHECK((pa.adjoint() - adj).cwiseAbs().maxCoeff() < 1e-14);
        for (const auto& b : all_elements(plane)) {
            // π(a)π(b) = c(a,b)·π(a+b).
            const Eigen::MatrixXcd lhs = pa * tf_shift_matrix(g4, b);
            const Eigen::MatrixXcd rhs =
                cocycle(g4, a, b) * tf_shift_matrix(g4, add(plane, a, b));
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("the STFT of a delta against itself fills exactly the zero-shift column") {
    const GroupSpec g4 = make_group({4});
    const Signal d0 = frozen::delta(4, 0);
    const Eigen::VectorXcd table = stft(g4, d0, d0);
    REQUIRE(table.size() == 16);
    for (std::int64_t r = 0; r < 16; ++r) {
        if (r < 4)  // plane rank = x_rank·|G| + ω_rank, so x = 0 is the first block
            CHECK(std::abs(table(r) - cd(1.0, 0.0)) < 1e-14);
        else
            CHECK(std::abs(table(r)) < 1e-14);
    }
}

TEST_CASE("the STFT satisfies the Moyal energy identity") {
    const GroupSpec g6 = make_group({6});
    const auto f = frozen::make_signals(g6, 2);
    const Eigen::VectorXcd table = stft(g6, f[0], f[1]);
    const double lhs = table.squaredNorm() / 6.0;
    const double rhs = f[0].squaredNorm() * f[1].squaredNorm();
    CHECK(std::abs(lhs - rhs) < 1e-10 * rhs);
}

TEST_CASE("the symplectic Fourier transform is involutive") {
    const GroupSpec g6 = make_group({6});
    const GroupSpec plane = plane_of(g6);
    const Signal F = frozen::make_signals(plane, 1)[0];
    const Eigen::VectorXcd twice = symplectic_fourier(g6, symplectic_fourier(g6, F));
    CHECK((twice - F).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("adjoint subgroups match hand calculations") {
    const GroupSpec g6 = make_group({6});
    const GroupSpec plane6 = plane_of(g6);
    const Subgroup l6 = subgroup_closure(plane6, {{2, 0}, {0, 3}});
    const Subgroup adj6 = adjoint_subgroup(g6, l6);
    CHECK(adj6.elements == frozen::kLatticeZ6);  // self-adjoint at covolume 1
    CHECK(adj6.weight == 1.0);

    const GroupSpec g4 = make_group({4});
    const GroupSpec plane4 = plane_of(g4);
    const Subgroup l4 = subgroup_closure(plane4, {{1, 0}, {0, 2}});
    const Subgroup adj4 = adjoint_subgroup(g4, l4);
    CHECK(adj4.elements == frozen::kAdjointZ4);
    CHECK(adj4.weight == doctest::Approx(2.0));  // 1/s with s = 1/2
    CHECK(l4.elements.size() * adj4.elements.size() == 16);

    const Subgroup line = subgroup_closure(plane4, {{1, 0}});
    CHECK(adjoint_subgroup(g4, line).elements == frozen::kAdjointZ4Line);

    const GroupSpec g2 = make_group({2});
    const Subgroup diag = subgroup_closure(plane_of(g2), {{1, 1}});
    CHECK(adjoint_subgroup(g2, diag).elements == frozen::kAdjointZ2Diag);

    const GroupSpec g24 = make_group({2, 4});
    const Subgroup l24 =
        subgroup_closure(plane_of(g24), {{1, 0, 0, 2}, {0, 2, 1, 0}});
    CHECK(l24.elements == frozen::kLatticeZ2xZ4);
    const Subgroup adj24 = adjoint_subgroup(g24, l24);
    CHECK(adj24.elements == frozen::kAdjointZ2xZ4);
    CHECK(l24.elements.size() * adj24.elements.size() == 64);
}

TEST_CASE("the adjoint is an involution carrying reciprocal weights") {
    const GroupSpec g4 = make_group({4});
    const GroupSpec plane4 = plane_of(g4);
    const Subgroup l4 = subgroup_closure(plane4, {{1, 0}, {0, 2}});
    const Subgroup adj = adjoint_subgroup(g4, l4);
    const Subgroup back = adjoint_subgroup(g4, adj);
    CHECK(back.elements == l4.elements);
    CHECK(back.weight == doctest::Approx(1.0));

    // Trivial lattice ↔ full plane with reciprocal weights.
    const Subgroup trivial = subgroup_closure(plane4, {});
    const Subgroup full = adjoint_subgroup(g4, trivial);
    CHECK(full.elements.size() == 16);
    CHECK(full.weight == doctest::Approx(0.25));  // 1/s with s(Λ = {0}) = 4
    const Subgroup back_triv = adjoint_subgroup(g4, full);
    CHECK(back_triv.elements == trivial.elements);
    CHECK(back_triv.weight == doctest::Approx(1.0));
}

TEST_CASE("adjoint membership agrees with the brute-force annihilator") {
    const GroupSpec g6 = make_group({6});
    const GroupSpec plane = plane_of(g6);
    const auto pts = all_elements(plane);
    for (const auto& gens : std::vector<std::vector<GroupElement>>{
             {}, {{1, 1}}, {{2, 3}}, {{1, 0}, {0, 1}}, {{3, 0}, {0, 3}}}) {
        const Subgroup lat = subgroup_closure(plane, gens);
        const Subgroup adj = adjoint_subgroup(g6, lat);
        std::vector<GroupElement> brute;
        for (const auto& chi : pts) {
            bool ok = true;
            for (const auto& lam : lat.elements)
                if (!symplectic_cocycle_angle(g6, chi, lam).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) brute.push_back(chi);
        }
        CHECK(adj.elements == brute);
    }
}
