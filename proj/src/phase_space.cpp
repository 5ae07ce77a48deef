/**
 * @file phase_space.cpp
 * @brief Implementation of phase-space shifts, cocycles, the STFT, the
 *        symplectic Fourier transform, and adjoint subgroups.
 */
#include "gdl/phase_space.hpp"

#include <stdexcept>

namespace gdl {

GroupSpec plane_of(const GroupSpec& base) {
    std::vector<std::int64_t> doubled = base.orders;
    doubled.insert(doubled.end(), base.orders.begin(), base.orders.end());
    return make_group(doubled);
}

GroupSpec base_of(const GroupSpec& phase) {
    const std::size_t k2 = phase.orders.size();
    if (k2 == 0 || k2 % 2 != 0) {
        throw InvalidInputError("phase-space spec must have even, positive rank");
    }
    const std::size_t k = k2 / 2;
    for (std::size_t i = 0; i < k; ++i) {
        if (phase.orders[i] != phase.orders[k + i]) {
            throw InvalidInputError("phase-space spec must duplicate the base orders");
        }
    }
    return make_group(std::vector<std::int64_t>(phase.orders.begin(),
                                                phase.orders.begin() + static_cast<std::ptrdiff_t>(k)));
}

namespace {

/// Splits a phase point into (x, ω) halves; validates length.
void split_point(const GroupSpec& base, const PhasePoint& chi, GroupElement& x, GroupElement& omega) {
    const std::size_t k = base.orders.size();
    if (chi.size() != 2 * k) {
        throw InvalidInputError("phase-space point has wrong rank for group");
    }
    x.assign(chi.begin(), chi.begin() + static_cast<std::ptrdiff_t>(k));
    omega.assign(chi.begin() + static_cast<std::ptrdiff_t>(k), chi.end());
}

}  // namespace

RationalAngle cocycle_angle(const GroupSpec& base, const PhasePoint& chi1, const PhasePoint& chi2) {
    GroupElement x1, w1, x2, w2;
    split_point(base, chi1, x1, w1);
    split_point(base, chi2, x2, w2);
    // c(χ1,χ2) = conj(ω2(x1)): negate the character angle ⟨x1, ω2⟩.
    return -character_angle(base, x1, w2);
}

std::complex<double> cocycle(const GroupSpec& base, const PhasePoint& chi1, const PhasePoint& chi2) {
    return cocycle_angle(base, chi1, chi2).to_complex();
}

RationalAngle symplectic_cocycle_angle(const GroupSpec& base, const PhasePoint& chi1,
                                       const PhasePoint& chi2) {
    GroupElement x1, w1, x2, w2;
    split_point(base, chi1, x1, w1);
    split_point(base, chi2, x2, w2);
    // c_s(χ1,χ2) = c(χ1,χ2)·conj(c(χ2,χ1)): angle ⟨x2, ω1⟩ − ⟨x1, ω2⟩.
    return character_angle(base, x2, w1) - character_angle(base, x1, w2);
}

std::complex<double> symplectic_cocycle(const GroupSpec& base, const PhasePoint& chi1,
                                        const PhasePoint& chi2) {
    return symplectic_cocycle_angle(base, chi1, chi2).to_complex();
}

Signal tf_shift(const GroupSpec& base, const PhasePoint& chi, const Signal& f) {
    const std::int64_t n = base.size();
    if (f.size() != n) {
        throw InvalidInputError("signal length does not match group size");
    }
    GroupElement x, omega;
    split_point(base, chi, x, omega);
    Signal out(n);
    for (std::int64_t t_rank = 0; t_rank < n; ++t_rank) {
        const GroupElement t = unrank(base, t_rank);
        GroupElement shifted(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::int64_t N = base.orders[i];
            shifted[i] = ((t[i] - x[i]) % N + N) % N;
        }
        out[t_rank] = character(base, t, omega) * f[rank_of(base, shifted)];
    }
    return out;
}

Eigen::MatrixXcd tf_shift_matrix(const GroupSpec& base, const PhasePoint& chi) {
    const std::int64_t n = base.size();
    GroupElement x, omega;
    split_point(base, chi, x, omega);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (std::int64_t t_rank = 0; t_rank < n; ++t_rank) {
        const GroupElement t = unrank(base, t_rank);
        GroupElement shifted(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            const std::int64_t N = base.orders[i];
            shifted[i] = ((t[i] - x[i]) % N + N) % N;
        }
        M(t_rank, rank_of(base, shifted)) = character(base, t, omega);
    }
    return M;
}

Eigen::VectorXcd stft(const GroupSpec& base, const Signal& g, const Signal& f) {
    const std::int64_t n = base.size();
    if (f.size() != n || g.size() != n) {
        throw InvalidInputError("signal length does not match group size");
    }
    const GroupSpec plane = plane_of(base);
    const std::int64_t plane_size = plane.size();
    Eigen::VectorXcd V(plane_size);
    for (std::int64_t r = 0; r < plane_size; ++r) {
        const Signal shifted = tf_shift(base, unrank(plane, r), g);
        // ⟨f, π(χ)g⟩, linear in the first argument: Eigen's dot() conjugates
        // its *first* operand, so the math inner product is shifted.dot(f).
        V[r] = shifted.dot(f);
    }
    return V;
}

Eigen::VectorXcd symplectic_fourier(const GroupSpec& base, const Eigen::VectorXcd& F) {
    const GroupSpec plane = plane_of(base);
    const std::int64_t plane_size = plane.size();
    if (F.size() != plane_size) {
        throw InvalidInputError("phase-space function length does not match plane size");
    }
    const double mass = static_cast<double>(base.size());
    std::vector<PhasePoint> pts(static_cast<std::size_t>(plane_size));
    for (std::int64_t r = 0; r < plane_size; ++r) {
        pts[static_cast<std::size_t>(r)] = unrank(plane, r);
    }
    Eigen::VectorXcd out(plane_size);
    for (std::int64_t r = 0; r < plane_size; ++r) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t s = 0; s < plane_size; ++s) {
            acc += F[s] * symplectic_cocycle(base, pts[static_cast<std::size_t>(s)],
                                             pts[static_cast<std::size_t>(r)]);
        }
        out[r] = acc / mass;
    }
    return out;
}

Subgroup adjoint_subgroup(const GroupSpec& base, const Subgroup& lattice) {
    const GroupSpec plane = plane_of(base);
    if (!(lattice.ambient == plane)) {
        throw InvalidInputError("lattice must live on the phase space of the group");
    }
    // Membership is χ ↦ c_s(χ,λ) = 1 for all λ ∈ Λ; testing the generators
    // suffices because the angle is biadditive. Exact rational-angle test.
    const std::vector<GroupElement>& probes =
        lattice.generators.empty() ? lattice.elements : lattice.generators;
    std::vector<GroupElement> members;
    const std::int64_t plane_size = plane.size();
    for (std::int64_t r = 0; r < plane_size; ++r) {
        const PhasePoint chi = unrank(plane, r);
        bool commutes = true;
        for (const auto& lam : probes) {
            if (!symplectic_cocycle_angle(base, chi, lam).is_zero()) {
                commutes = false;
                break;
            }
        }
        if (commutes) {
            members.push_back(chi);
        }
    }
    const double s = covolume(plane, lattice);
    Subgroup adj = subgroup_closure(plane, members, 1.0 / s);
    return adj;
}

}  // namespace gdl
