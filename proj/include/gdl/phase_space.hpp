/**
 * @file phase_space.hpp
 * @brief Time-frequency shifts, cocycles, the short-time Fourier transform,
 *        the symplectic Fourier transform, and adjoint subgroups on the
 *        phase space G × Ĝ of a finite abelian group.
 *
 * Mathematical background:
 *   A phase-space point χ = (x, ω) acts on signals by the time-frequency
 *   shift (π(x,ω)f)(t) = ω(t)·f(t−x) (modulation after translation). Two
 *   shifts compose up to a phase: π(χ1)π(χ2) = c(χ1,χ2)·π(χ1+χ2) with the
 *   cocycle c(χ1,χ2) = conj(ω2(x1)). The symplectic cocycle
 *   c_s(χ1,χ2) = c(χ1,χ2)·conj(c(χ2,χ1)) measures non-commutativity:
 *   π(χ1)π(χ2) = c_s(χ1,χ2)·π(χ2)π(χ1). The adjoint Λ° of a subgroup Λ is
 *   the set of points whose shifts commute with every shift from Λ, i.e.
 *   c_s(χ,λ) = 1 for all λ ∈ Λ — an exact rational-angle test here.
 *
 * Conventions:
 *   - Phase-space functions are stored as Eigen vectors indexed by the
 *     lexicographic rank of χ in the doubled-order group (x before ω).
 *   - The symplectic Fourier transform is
 *     (F_s F)(χ) = (1/|G|) Σ_{χ'} F(χ')·c_s(χ',χ); it is involutive.
 *   - adjoint_subgroup assigns Λ° the orthogonal weight 1/s(Λ), the unique
 *     normalization that makes Fourier inversion between Λ° and the quotient
 *     (G×Ĝ)/Λ hold.
 */
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gdl/group.hpp"

namespace gdl {

/// A phase-space point (x, ω), stored as one tuple of length 2k over the
/// doubled-order group.
using PhasePoint = GroupElement;

/// A signal on G: a complex vector indexed by lexicographic group rank.
using Signal = Eigen::VectorXcd;

/// The phase space of `base`: the group with duplicated order vector.
GroupSpec plane_of(const GroupSpec& base);

/// Recovers the base group from a doubled phase-space spec.
GroupSpec base_of(const GroupSpec& phase);

/// Exact angle of the cocycle c(χ1,χ2) = conj(ω2(x1)).
RationalAngle cocycle_angle(const GroupSpec& base, const PhasePoint& chi1,
                            const PhasePoint& chi2);

/// Cocycle value c(χ1,χ2), a unit complex number.
std::complex<double> cocycle(const GroupSpec& base, const PhasePoint& chi1,
                             const PhasePoint& chi2);

/// Exact angle of the symplectic cocycle c_s(χ1,χ2) = c(χ1,χ2)·conj(c(χ2,χ1)).
RationalAngle symplectic_cocycle_angle(const GroupSpec& base, const PhasePoint& chi1,
                                       const PhasePoint& chi2);

/// Symplectic cocycle value c_s(χ1,χ2), a unit complex number.
std::complex<double> symplectic_cocycle(const GroupSpec& base, const PhasePoint& chi1,
                                        const PhasePoint& chi2);

/// Applies the time-frequency shift π(χ) to a signal:
/// (π(x,ω)f)(t) = ω(t)·f(t−x).
Signal tf_shift(const GroupSpec& base, const PhasePoint& chi, const Signal& f);

/// The |G|×|G| unitary matrix of π(χ).
Eigen::MatrixXcd tf_shift_matrix(const GroupSpec& base, const PhasePoint& chi);

/// Short-time Fourier transform V_g f(χ) = ⟨f, π(χ)g⟩, indexed by
/// phase-space rank. Inner products are linear in the first argument.
Eigen::VectorXcd stft(const GroupSpec& base, const Signal& g, const Signal& f);

/// Symplectic Fourier transform (F_s F)(χ) = (1/|G|) Σ_{χ'} F(χ')·c_s(χ',χ).
Eigen::VectorXcd symplectic_fourier(const GroupSpec& base, const Eigen::VectorXcd& F);

/// Adjoint subgroup Λ° = {χ : c_s(χ,λ) = 1 ∀λ ∈ Λ}, computed by the exact
/// rational-angle test against the generators (falling back to all elements
/// when no generators are stored). Carries the orthogonal weight 1/s(Λ).
Subgroup adjoint_subgroup(const GroupSpec& base, const Subgroup& lattice);

}  // namespace gdl
