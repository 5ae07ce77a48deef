/**
 * @file duality.hpp
 * @brief Duality verifiers: the fundamental identity of Gabor analysis
 *        (FIGA), the Janssen-type phase-space function and its lattice
 *        periodization, Wexler-Raz relations, the frame↔Riesz duality
 *        certificate, and Bessel duality.
 *
 * Mathematical background:
 *   For windows g, h and signals f1, f2, the function
 *   ψ(χ) = Σ_j (C_g f1)(χ,j)·conj((C_h f2)(χ,j)) on the phase space has an
 *   explicit symplectic Fourier transform
 *   F_sψ(χ) = Σ_{k,l} ⟨f1_k, π(χ)f2_l⟩ · Σ_j ⟨π(χ)h_{l,j}, g_{k,j}⟩.
 *   Summing ψ over a lattice Λ against its weight and F_sψ over the adjoint
 *   Λ° against the orthogonal weight gives the fundamental identity
 *   (Poisson summation for ψ). The Wexler-Raz relations characterize dual
 *   window pairs by the value of these adjoint-lattice sums:
 *   Σ_j ⟨h_{l,j}, π(λ°)g_{k,j}⟩ = s(Λ)·δ_{λ°,0}·δ_{k,l}. The duality
 *   principle exchanges the frame property of the Λ-system with the Riesz
 *   property of the adjoint system over Λ° — the vectors ⊕_j π(λ°)g_{k,j}
 *   labeled by (λ°, k), so the super and window indices trade roles — with
 *   equal bounds under the covolume normalization; Bessel duality equates
 *   the optimal upper bounds on the two sides.
 */
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gdl/gabor.hpp"
#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

namespace gdl {

/// The Janssen-type function ψ and its symplectic Fourier transform via the
/// closed form, both indexed by phase-space rank.
struct JanssenFunctions {
    Eigen::VectorXcd psi;
    Eigen::VectorXcd f_s_psi;
};

/// Residuals of the two independent routes to F_sψ.
struct JanssenReport {
    /// max |closed form − symplectic_fourier(ψ)| over the plane.
    double closed_form_residual = 0.0;
    /// max over λ° of |quotient transform of the Λ-periodization − F_sψ(λ°)|.
    double periodization_residual = 0.0;
};

/// Both sides of the fundamental identity plus their absolute difference.
struct FigaCheck {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double residual = 0.0;
};

/// Wexler-Raz residual and verdict.
struct WexlerRazCheck {
    double residual = 0.0;
    bool is_dual_pair = false;  ///< residual < 1e-9.
};

/// Frame bounds over Λ against Riesz bounds of the adjoint system over Λ°
/// (vectors labeled (λ°, k), stacked over j).
struct DualityCertificate {
    BoundsReport frame;      ///< (A, B) of the Λ-system.
    BoundsReport riesz;      ///< (A_R, B_R) of the adjoint Λ°-system.
    double covolume = 0.0;   ///< s(Λ), the Riesz reference covolume.
    double max_deviation = 0.0;  ///< max(|A_R−A|, |B_R−B|).
    std::string verdict;     ///< "pass" iff max_deviation < 1e-8·max(1,B).
};

/// Optimal Bessel bounds on the two sides of the duality.
struct BesselDuality {
    double bound_primal = 0.0;   ///< λ_max of the frame operator over Λ.
    double bound_adjoint = 0.0;  ///< λ_max over Λ° (orthogonal weight).
    double residual = 0.0;       ///< |difference|.
};

/// Computes ψ(χ) = Σ_j (C_g f1)(χ,j)·conj((C_h f2)(χ,j)) over the full
/// plane together with its symplectic Fourier transform by the closed form
/// F_sψ(χ) = Σ_{k,l} ⟨f1_k, π(χ)f2_l⟩ · Σ_j ⟨π(χ)h_{l,j}, g_{k,j}⟩.
JanssenFunctions janssen_psi(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                             const WindowFamily& g, const WindowFamily& h);

/// Cross-validates the closed form against the direct transform and the
/// quotient-periodization route restricted to Λ°.
JanssenReport janssen_report(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                             const WindowFamily& g, const WindowFamily& h,
                             const Subgroup& lattice);

/// Fundamental identity: LHS = w_Λ Σ_{λ,j} (C_g f1)(λ,j)·conj((C_h f2)(λ,j)),
/// RHS = (1/s(Λ)) Σ_{λ°,k,l} ⟨π(λ°)f1_k, f2_l⟩·Σ_j ⟨h_{l,j}, π(λ°)g_{k,j}⟩.
FigaCheck figa_check(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                     const WindowFamily& g, const WindowFamily& h, const Subgroup& lattice);

/// Absolute FIGA residual |LHS − RHS|.
double figa_residual(const std::vector<Signal>& f1, const std::vector<Signal>& f2,
                     const WindowFamily& g, const WindowFamily& h, const Subgroup& lattice);

/// Wexler-Raz: residual = max over (λ°,k,l) of
/// |Σ_j ⟨h_{l,j}, π(λ°)g_{k,j}⟩ − s(Λ)·δ_{λ°,0}·δ_{k,l}|.
WexlerRazCheck wexler_raz_check(const WindowFamily& g, const WindowFamily& h,
                                const Subgroup& lattice);

/// Duality certificate: frame bounds of sys against Riesz bounds of the
/// same family over the adjoint lattice with reference covolume s(Λ).
DualityCertificate duality_certificate(const GaborSystem& sys);

/// Bessel duality: optimal upper bound of the Λ-system equals that of the
/// adjoint Λ°-system carrying the orthogonal weight (computed by stacking
/// over the window index, i.e. the frame operator of the index-swapped
/// family).
BesselDuality bessel_duality_check(const WindowFamily& g, const Subgroup& lattice);

}  // namespace gdl
