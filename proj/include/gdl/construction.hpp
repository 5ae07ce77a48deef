/**
 * @file construction.hpp
 * @brief Constructive frame existence: Gram-Schmidt preparation,
 *        full-phase-space tight frames, the lattice-refinement multi-window
 *        construction, deterministic window generators, and a clearly
 *        labeled heuristic search for few-window frames.
 *
 * Mathematical background:
 *   Over the full phase space with weight 1/|G| every nonzero window is
 *   tight, so d ≤ |G| orthonormal windows give a d-super tight frame with
 *   bounds (1,1). For an arbitrary subgroup Λ the constructive route walks
 *   a chain of supergroups Λ = Λ_1 ⊆ Λ_2 ⊆ … until the adjoint of the
 *   current member is sparse enough that the per-pair overlap sum
 *   Σ_{λ°≠0} |⟨g_k, π(λ°)g_{k'}⟩| drops below 1/d; at that point the
 *   rescaled windows g̃ = √s(Λ_N)·g generate a frame over Λ_N with
 *   ‖Id − S‖ < 1 (a Neumann-series certificate), and translating g̃ by a
 *   coset transversal of Λ in Λ_N turns it into an n-multi-window frame
 *   over Λ itself, n = [Λ_N : Λ].
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdl/gabor.hpp"
#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

namespace gdl {

/// Orthonormalizes signals in order, preserving span. Throws NumericError
/// when the input is linearly dependent (residual norm ≤ 1e-12).
std::vector<Signal> gram_schmidt(const std::vector<Signal>& windows);

/// Frame bounds of a constructed system plus the Neumann-series margin.
struct ConstructionCertificate {
    BoundsReport bounds;      ///< Frame bounds of the constructed system.
    double neumann = 0.0;     ///< max_i |1 − λ_i(S)| = ‖Id − S‖ for the Λ_N system.
    bool is_frame = false;    ///< bounds.lower > 1e-9·bounds.upper.
};

/// A tight d-super system over the full phase space with weight 1/|G|:
/// windows are the orthonormalized first d deltas; bounds (1,1).
struct FullPlaneTight {
    GaborSystem system;
    ConstructionCertificate certificate;
};

/// Builds the full-phase-space tight frame. Throws InvalidInputError when
/// d > |G|.
FullPlaneTight full_plane_tight(const GroupSpec& group, std::int64_t d);

/// When the supergroup chain stops: the proof's overlap criterion, or the
/// sharper spectral test λ_min(S) > 0 (optional mode).
enum class StopRule { Criterion, Spectral };

/// Output of the lattice-refinement construction.
struct RefinementResult {
    WindowFamily windows;           ///< h_{k,j} = π(χ_j)·√s(Λ_N)·g_k, n = [Λ_N:Λ].
    Subgroup refined_lattice;       ///< Λ_N, the chain's final member (weight of Λ).
    std::vector<Subgroup> chain;    ///< Λ = Λ_1 ⊆ … ⊆ Λ_N.
    std::vector<GroupElement> transversal;  ///< Coset reps of Λ in Λ_N, lex-least first.
    ConstructionCertificate certificate;    ///< Bounds of the n-multi-window system over Λ.
    std::int64_t n = 0;             ///< Window count = |Λ_N|/|Λ| exactly.
};

/// Walks supergroups of `lattice` (each step adjoins one element, choosing
/// the candidate minimal by (size, element list, adjoined element)) until
/// the stop rule is satisfied, then assembles the multi-window family over
/// the coset transversal. The seed family must be column-orthonormal
/// ({g_k} orthonormal, n = 1); throws InvalidInputError otherwise.
RefinementResult refine_until_frame(const WindowFamily& seed, const Subgroup& lattice,
                                    StopRule rule = StopRule::Criterion);

/// Per-pair overlap sum: max over (k,k') of Σ_{λ°≠0} |⟨g_k, π(λ°)g_{k'}⟩|.
/// The construction stops when this is < 1/d.
double overlap_criterion(const WindowFamily& seed, const Subgroup& adjoint_lattice);

/// Deterministic signal generators.
enum class WindowKind { Delta, Constant, DiscreteGaussian, Random };

/// Makes a window: delta at 0, normalized constant, periodized discrete
/// Gaussian exp(−π t²/σ²) (shift range |m| ≤ 64, then normalized), or
/// seeded pseudo-random complex Gaussian entries (bit-reproducible),
/// normalized. σ applies to DiscreteGaussian (must be > 0), seed to Random.
Signal window_generator(WindowKind kind, const GroupSpec& group, double sigma = 1.0,
                        std::uint64_t seed = 0);

/// Heuristic (not an optimality guarantee): searches for an n-multi-window
/// frame over `lattice` with the smallest n it can certify, starting at the
/// density lower bound ⌈d·s(Λ)⌉ (counting weight) and growing n, trying
/// `attempts` seeded random window draws per n.
struct MinimalWindowSearch {
    bool found = false;
    WindowFamily windows;       ///< Valid only when found.
    BoundsReport bounds;        ///< Bounds of the certified system.
    std::int64_t n = 0;         ///< Certified window count.
    std::string note;           ///< Reminder that this is a heuristic search.
};

MinimalWindowSearch minimal_window_search(const GroupSpec& group, const Subgroup& lattice,
                                          std::int64_t d, std::int64_t max_n,
                                          std::int64_t attempts = 8,
                                          std::uint64_t seed = 1);

}  // namespace gdl
