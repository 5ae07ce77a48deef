/**
 * @file gabor.hpp
 * @brief Multi-window super Gabor systems on finite abelian groups:
 *        analysis/synthesis operators, frame operators, frame and Riesz
 *        bounds, canonical dual and tight windows, density necessary
 *        conditions, and biorthogonality residuals.
 *
 * Mathematical background:
 *   A window family is a d×n array {g_{k,j}} of signals on G; together with
 *   a subgroup Λ ⊆ G×Ĝ carrying a weight w it generates the n-multi-window
 *   d-super Gabor system {π(λ)g_{·,j}}. The analysis operator maps a
 *   d-block signal f to coefficients C f(λ,j) = Σ_k ⟨f_k, π(λ)g_{k,j}⟩ and
 *   the synthesis operator is its μ_Λ-adjoint D c = w Σ_{λ,j} c(λ,j)π(λ)g.
 *   The frame operator S = D∘C is Hermitian positive semidefinite; its
 *   extreme eigenvalues are the optimal frame bounds, and the system is a
 *   frame precisely when λ_min exceeds the relative tolerance 1e-9·λ_max.
 *   The canonical dual windows are S^{-1}g, the canonical tight windows
 *   S^{-1/2}g. Riesz bounds of a system over the adjoint lattice are read
 *   off the Gram matrix divided by a reference covolume, the normalization
 *   under which the duality principle becomes an equality of bounds.
 *
 * Conventions:
 *   - Inner products are linear in the first argument.
 *   - Coefficients are stored row-major: lattice index outer (lex order of
 *     Λ's element list), window index j inner.
 *   - d-block signals are stored as std::vector<Signal> of length d.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

namespace gdl {

/// A d×n array of windows on a common group. data[k][j] is window (k,j);
/// k < d indexes the super (block) direction, j < n the multi-window
/// direction.
struct WindowFamily {
    GroupSpec group;
    std::int64_t d = 0;
    std::int64_t n = 0;
    std::vector<std::vector<Signal>> data;

    /// Swaps the roles of the two indices: result.data[j][k] = data[k][j].
    WindowFamily transpose() const;

    /// Stacks column j into a single vector of length |G|·d (block k major).
    Signal stack(std::int64_t j) const;

    /// Throws InvalidInputError unless shapes are consistent.
    void validate() const;
};

/// A window family together with a weighted phase-space subgroup.
struct GaborSystem {
    WindowFamily windows;
    Subgroup lattice;

    /// Throws InvalidInputError unless the lattice lives on the phase space
    /// of the window group.
    void validate() const;
};

/// Spectrum summary of a frame operator or Gram matrix.
struct BoundsReport {
    double lower = 0.0;              ///< A = min(spectrum), clamped at 0.
    double upper = 0.0;              ///< B = max(spectrum).
    std::vector<double> spectrum;    ///< Sorted ascending.
    std::string kind;                ///< "frame" | "riesz" | "bessel".

    /// Relative frame test: lower > 1e-9 · upper.
    bool is_frame() const { return lower > 1e-9 * upper; }
};

/// Analysis operator: row λ (lex order of sys.lattice.elements), column j,
/// entry Σ_k ⟨f_k, π(λ)g_{k,j}⟩. f must have d blocks of length |G|.
Eigen::MatrixXcd analysis(const GaborSystem& sys, const std::vector<Signal>& f);

/// Synthesis operator: block k of the output is
/// w_Λ Σ_{λ,j} c(λ,j)·π(λ)g_{k,j}. c must be |Λ|×n.
std::vector<Signal> synthesis(const GaborSystem& sys, const Eigen::MatrixXcd& c);

/// (Mixed) frame operator on C^{|G|·d}: S = w_Λ Σ_{λ,j} v_h v_g^H where
/// v_g is the stacked vector ⊕_k π(λ)g_{k,j}. With mixed == nullptr, h = g
/// and S is Hermitian PSD. S f = w Σ_{λ,j} ⟨f, π(λ)g_{·,j}⟩ π(λ)h_{·,j},
/// i.e. analysis with sys and synthesis with *mixed.
Eigen::MatrixXcd frame_operator(const GaborSystem& sys, const GaborSystem* mixed = nullptr);

/// Optimal frame bounds: spectrum of the Hermitian frame operator, kind
/// "frame". Tiny negative rounding artifacts are clamped to zero.
BoundsReport frame_bounds(const GaborSystem& sys);

/// Riesz bounds of a system over an adjoint lattice: Gram matrix
/// Γ[(λ°,k),(μ°,l)] = Σ_j ⟨π(μ°)g_{l,j}, π(λ°)g_{k,j}⟩, spectrum divided by
/// reference_covolume, kind "riesz". The division makes the duality
/// principle an equality of bounds with the Λ-side frame bounds.
BoundsReport riesz_bounds(const GaborSystem& sys, double reference_covolume);

/// Canonical dual windows S^{-1}g_{k,j}. Throws NumericError when the
/// system is not a frame (λ_min ≤ 1e-9·λ_max).
WindowFamily canonical_dual(const GaborSystem& sys);

/// Canonical tight windows S^{-1/2}g_{k,j}, via eigendecomposition of S
/// with no eigenvalue clamping. Throws NumericError when not a frame.
WindowFamily canonical_tight(const GaborSystem& sys);

/// One necessary condition checked by density_check.
struct DensityCondition {
    std::string description;
    bool holds = false;
};

/// Report of the density necessary conditions for frames and Riesz
/// sequences. Covolume comparisons use the counting weight (w = 1) and are
/// exact integer tests on |G|·d vs n·|Λ|.
struct DensityReport {
    std::vector<DensityCondition> conditions;
    std::string verdict;         ///< "frame impossible" | "Riesz impossible" | "open".
    bool basis_candidate = false;  ///< d·s(Λ) = n exactly (counting weight).
};

/// Checks the lattice-size necessary conditions: counting covolume
/// s_c = |G|/|Λ| must satisfy s_c·d ≤ n for a frame and s_c·d ≥ n for a
/// Riesz sequence; a frame additionally needs the synthesis rank to reach
/// |G|·d (tested via the frame-operator spectrum).
DensityReport density_check(const GaborSystem& sys);

/// Max absolute deviation of Σ_k ⟨π(λ°)g_{k,j}, π(μ°)h_{k,j'}⟩ from
/// δ_{(λ°,j),(μ°,j')} over all index pairs. In the duality setting this is
/// applied to the transposed families over Λ° with h = canonical dual
/// divided by s(Λ).
double biorthogonality_residual(const WindowFamily& g, const WindowFamily& h,
                                const Subgroup& adjoint_lattice);

}  // namespace gdl
