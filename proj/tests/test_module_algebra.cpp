/**
 * @file test_module_algebra.cpp
 * @brief Unit tests for the twisted group algebras on a lattice and its
 *        adjoint: twisted convolution, involution, integrated
 *        representation, module-valued inner products, traces, block
 *        (matrix-valued) inner products, idempotents, and module norms.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "frozen_values.hpp"
#include "gdl/gabor.hpp"
#include "gdl/group.hpp"
#include "gdl/module_algebra.hpp"
#include "gdl/phase_space.hpp"

using namespace gdl;
using frozen::cd;

namespace {

struct Fixture {
    GroupSpec group = make_group({6});
    Subgroup lattice = subgroup_closure(plane_of(group), {{2, 0}, {0, 3}});
    Subgroup adjoint = adjoint_subgroup(group, lattice);
    Signal s1 = frozen::make_signals(group, 1)[0];
    Signal s2 = frozen::make_signals_alt(group, 1)[0];
};

/// Deterministic non-commuting coefficient pair on a full Z_2 plane.
std::pair<TwistedCoefficients, TwistedCoefficients> noncomm_pair(const Subgroup& lattice,
                                                                 AlgebraSide side) {
    const auto& pts = lattice.elements;
    Eigen::VectorXcd v1(static_cast<Eigen::Index>(pts.size()));
    Eigen::VectorXcd v2(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::int64_t a = pts[i][0], b = pts[i][1];
        v1(static_cast<Eigen::Index>(i)) =
            cd(1 + (3 * a + b) % 4, (1 + a + 2 * b) % 3);
        v2(static_cast<Eigen::Index>(i)) =
            cd(2 + (a + b * b) % 3, (2 * a + b) % 5);
    }
    return {TwistedCoefficients{lattice, v1, side}, TwistedCoefficients{lattice, v2, side}};
}

/// Family laid out as one long vector in (k, j, t) order.
Eigen::VectorXcd vec_of(const WindowFamily& fam) {
    const std::int64_t N = fam.group.size();
    Eigen::VectorXcd out(N * fam.d * fam.n);
    for (std::int64_t k = 0; k < fam.d; ++k)
        for (std::int64_t j = 0; j < fam.n; ++j)
            out.segment((k * fam.n + j) * N, N) =
                fam.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return out;
}

}  // namespace

TEST_CASE("twisted convolution reproduces the frozen value and checks shapes") {
    const Fixture fx;
    const TwistedCoefficients f1 = lhs_inner(fx.s1, fx.s2, fx.lattice);
    const TwistedCoefficients f2 = lhs_inner(fx.s2, fx.s1, fx.lattice);
    const TwistedCoefficients prod = twisted_convolve(f1, f2);
    CHECK(std::abs(prod.values(0) - frozen::kI1TwistedAAtZero) < 1e-12);
    CHECK(prod.side == AlgebraSide::A);

    // Mismatched lattices or sides are rejected.
    const Subgroup other = subgroup_closure(plane_of(fx.group), {{3, 0}, {0, 3}});
    const TwistedCoefficients alien = lhs_inner(fx.s1, fx.s2, other);
    CHECK_THROWS_AS(twisted_convolve(f1, alien), InvalidInputError);
    TwistedCoefficients wrong_side = f2;
    wrong_side.side = AlgebraSide::B;
    CHECK_THROWS_AS(twisted_convolve(f1, wrong_side), InvalidInputError);
    TwistedCoefficients short_values = f2;
    short_values.values = Eigen::VectorXcd::Zero(3);
    CHECK_THROWS_AS(twisted_convolve(f1, short_values), InvalidInputError);
}

TEST_CASE("the A-side representation is a straight homomorphism") {
    const GroupSpec g2 = make_group({2});
    const Subgroup full = subgroup_closure(plane_of(g2), {{1, 0}, {0, 1}}, 0.25);
    const auto [f1, f2] = noncomm_pair(full, AlgebraSide::A);
    const Eigen::MatrixXcd r1 = represent(f1);
    const Eigen::MatrixXcd r2 = represent(f2);
    const Eigen::MatrixXcd rp = represent(twisted_convolve(f1, f2));
    CHECK((rp - r1 * r2).cwiseAbs().maxCoeff() < 1e-12);
    // The mirrored pairing fails by a fixed amount: the algebra is
    // genuinely non-commutative, so the orientation is observable.
    CHECK((rp - r2 * r1).norm() ==
          doctest::Approx(frozen::kNoncommAMirroredFailure).epsilon(1e-9));
}

TEST_CASE("the B-side representation is an anti-homomorphism") {
    const GroupSpec g2 = make_group({2});
    const Subgroup full = subgroup_closure(plane_of(g2), {{1, 0}, {0, 1}}, 0.5);
    const auto [f1, f2] = noncomm_pair(full, AlgebraSide::B);
    const Eigen::MatrixXcd r1 = represent(f1);
    const Eigen::MatrixXcd r2 = represent(f2);
    const Eigen::MatrixXcd rp = represent(twisted_convolve(f1, f2));
    CHECK((rp - r2 * r1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((rp - r1 * r2).norm() ==
          doctest::Approx(frozen::kNoncommBStraightFailure).epsilon(1e-9));
}

TEST_CASE("the involution realizes the operator adjoint on both sides") {
    const GroupSpec g2 = make_group({2});
    for (const AlgebraSide side : {AlgebraSide::A, AlgebraSide::B}) {
        const double w = side == AlgebraSide::A ? 0.25 : 0.5;
        const Subgroup full = subgroup_closure(plane_of(g2), {{1, 0}, {0, 1}}, w);
        const auto [f1, f2] = noncomm_pair(full, side);
        for (const auto& f : {f1, f2}) {
            const TwistedCoefficients star = twisted_involution(f);
            CHECK((represent(star) - represent(f).adjoint()).cwiseAbs().maxCoeff() < 1e-12);
            // The involution is its own inverse.
            const TwistedCoefficients back = twisted_involution(star);
            CHECK((back.values - f.values).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
}

TEST_CASE("traces recover inner products and are tracial") {
    const Fixture fx;
    const TwistedCoefficients a = lhs_inner(fx.s1, fx.s2, fx.lattice);
    CHECK(std::abs(trace_A(a) - frozen::kI1TraceA) < 1e-14);

    const TwistedCoefficients b = rhs_inner(fx.s1, fx.s2, fx.adjoint);
    CHECK(std::abs(trace_B(b) - std::conj(frozen::kI1TraceA)) < 1e-14);

    // trace(F ♮ G) = trace(G ♮ F).
    const TwistedCoefficients f = lhs_inner(fx.s1, fx.s2, fx.lattice);
    const TwistedCoefficients g = lhs_inner(fx.s2, fx.s1, fx.lattice);
    CHECK(std::abs(trace_A(twisted_convolve(f, g)) - trace_A(twisted_convolve(g, f))) <
          1e-12);
}

TEST_CASE("module inner products satisfy the associativity bridge") {
    const Fixture fx;
    CHECK(associativity_residual(fx.s1, fx.s2, frozen::delta(6, 1), fx.lattice) < 1e-12);
    // A few more deterministic triples.
    CHECK(associativity_residual(fx.s2, fx.s1, fx.s2, fx.lattice) < 1e-12);
    const Subgroup small = subgroup_closure(plane_of(fx.group), {{3, 3}});
    CHECK(associativity_residual(fx.s1, fx.s2, fx.s1, small) < 1e-12);
}

TEST_CASE("block inner products bridge the two sides on families") {
    const GroupSpec g6 = make_group({6});
    const Subgroup lat = subgroup_closure(plane_of(g6), {{2, 0}, {0, 3}});
    const WindowFamily g = frozen::make_windows(g6, 2, 2);
    const WindowFamily h = frozen::make_windows_alt(g6, 2, 2);
    const auto base = frozen::make_signals(g6, 2);
    WindowFamily famh{g6, 2, 2, {}};
    famh.data.resize(2);
    for (std::int64_t k = 0; k < 2; ++k)
        for (std::int64_t j = 0; j < 2; ++j)
            famh.data[static_cast<std::size_t>(k)].push_back(
                base[static_cast<std::size_t>(k)] * (cd(1.0, 0.0) + cd(0.0, 0.5) * double(j)));

    const BlockInnerProduct lhs = matrix_lhs(g, h, lat);
    const BlockInnerProduct rhs = matrix_rhs(h, famh, lat);
    CHECK(lhs.side() == AlgebraSide::A);
    CHECK(rhs.side() == AlgebraSide::B);
    const Eigen::VectorXcd left = lhs.realized() * vec_of(famh);
    const Eigen::VectorXcd right = rhs.realized() * vec_of(g);
    CHECK((left - right).cwiseAbs().maxCoeff() < 1e-12);

    // The grid diagonal at the identity sums the family inner products.
    const BlockInnerProduct gg = matrix_lhs(g, h, lat);
    cd direct{0.0, 0.0};
    for (std::int64_t k = 0; k < 2; ++k)
        for (std::int64_t j = 0; j < 2; ++j) {
            const auto& u = g.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            const auto& v = h.data[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            direct += v.dot(u);  // ⟨u, v⟩, linear in the first argument
        }
    CHECK(std::abs(gg.trace() - direct) < 1e-13);

    // Self inner products realize Hermitian positive operators.
    const Eigen::MatrixXcd p = matrix_lhs(g, g, lat).realized();
    CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the canonical dual yields an idempotent block inner product") {
    const GroupSpec g6 = make_group({6});
    const Subgroup lat = subgroup_closure(plane_of(g6), {{2, 0}, {0, 3}});
    const WindowFamily g = frozen::make_windows(g6, 2, 2);
    const WindowFamily dual = canonical_dual({g, lat});
    const Eigen::MatrixXcd p = matrix_lhs(g, dual, lat).realized();
    CHECK(idempotent_residual(p) < 1e-12);
    CHECK(idempotent_residual(0.5 * p) > 0.1);
    CHECK_THROWS_AS(idempotent_residual(Eigen::MatrixXcd::Zero(2, 3)), InvalidInputError);
}

TEST_CASE("module norms agree on both sides and square to the Bessel bound") {
    const GroupSpec g6 = make_group({6});
    const Subgroup lat6 = subgroup_closure(plane_of(g6), {{2, 0}, {0, 3}});
    const WindowFamily g = frozen::make_windows(g6, 2, 2);
    CHECK(module_norm(g, lat6) == doctest::Approx(frozen::kI1ModuleNorm).epsilon(1e-9));

    const ModuleNormReport report = module_norm_check(g, lat6);
    CHECK(report.norm_primal == doctest::Approx(frozen::kI1ModuleNorm).epsilon(1e-9));
    CHECK(report.norm_adjoint == doctest::Approx(frozen::kI1ModuleNormAdjoint).epsilon(1e-9));
    CHECK(report.agrees);
    CHECK(report.residual < 1e-9 * std::max(1.0, report.norm_primal));

    const GroupSpec g4 = make_group({4});
    const Subgroup lat4 = subgroup_closure(plane_of(g4), {{1, 0}, {0, 2}});
    const double norm = module_norm(frozen::make_windows(g4, 1, 1), lat4);
    CHECK(norm * norm == doctest::Approx(frozen::kI2ModuleNormSquared).epsilon(1e-9));
}
