/**
 * @file module_algebra.hpp
 * @brief Twisted group algebras on a lattice and its adjoint, module-valued
 *        inner products, traces, block (matrix-valued) inner products,
 *        module norms, and idempotent residuals.
 *
 * Mathematical background:
 *   Coefficient functions on a weighted lattice Λ form an involutive algebra
 *   under the twisted convolution (F1 ♮ F2)(λ) = w Σ_μ F1(μ)F2(λ−μ)c(μ,λ−μ)
 *   (the A side); on the adjoint lattice Λ° the conjugate cocycle is used
 *   instead (the B side). Each side acts on signals through its integrated
 *   representation — w_Λ Σ F(λ)π(λ) on the A side and w_{Λ°} Σ F(λ°)π(λ°)*
 *   on the B side, each lattice carrying its own measure weight (the adjoint
 *   lattice the orthogonal weight 1/s(Λ)). The representation is an algebra
 *   homomorphism on the A side and reverses products on the B side, which is
 *   exactly what a right module action requires.
 *
 *   The module-valued inner products lhs_inner(f,g)(λ) = ⟨f, π(λ)g⟩ and
 *   rhs_inner(f,g)(λ°) = ⟨g, π(λ°)*f⟩ tie signals to the two algebras; the
 *   associativity identity represent(⟨f,g⟩_Λ)·h = ⟨g,h⟩_{Λ°}-action on f is
 *   the Janssen representation. For window families the inner products
 *   become block matrices over the algebras (an n×n grid on the A side, d×d
 *   on the B side), realized as block-diagonal operators on C^{|G|·d·n}
 *   with index order (k, j, t). Traces are evaluation at the lattice
 *   identity; block traces sum the grid diagonal (the normalized trace over
 *   the replicated realization collapses to that sum). The module norm
 *   ‖g‖ = √λ_max of the realized ⟨g,g⟩ equals the square root of the
 *   optimal Bessel bound, on both sides.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gdl/gabor.hpp"
#include "gdl/group.hpp"
#include "gdl/phase_space.hpp"

namespace gdl {

/// Which twisted algebra a coefficient function lives in: A uses the
/// cocycle c on Λ, B the conjugate cocycle on Λ°.
enum class AlgebraSide { A, B };

/// A coefficient function on a weighted lattice, entry i corresponding to
/// lattice.elements[i].
struct TwistedCoefficients {
    Subgroup lattice;
    Eigen::VectorXcd values;
    AlgebraSide side = AlgebraSide::A;

    /// Throws InvalidInputError unless values matches the lattice size.
    void validate() const;
};

/// Twisted convolution of two coefficient functions on the same lattice and
/// side, with the lattice weight as summation measure.
TwistedCoefficients twisted_convolve(const TwistedCoefficients& F1,
                                     const TwistedCoefficients& F2);

/// Involution: A side F*(λ) = c(λ,λ)·conj(F(−λ)); B side
/// F*(λ°) = conj(c(λ°,λ°)·F(−λ°)). Satisfies represent(F*) = represent(F)^H.
TwistedCoefficients twisted_involution(const TwistedCoefficients& F);

/// Integrated representation on C^{|G|}: A side w Σ F(λ)π(λ); B side
/// w Σ F(λ°)π(λ°)*, with w the lattice's own weight (the orthogonal weight
/// 1/s(Λ) for an adjoint lattice). A-side products map to matrix products
/// in order; B-side products map to matrix products in reversed order.
Eigen::MatrixXcd represent(const TwistedCoefficients& F);

/// A-valued inner product: coefficients λ ↦ ⟨f, π(λ)g⟩ on `lattice`.
TwistedCoefficients lhs_inner(const Signal& f, const Signal& g, const Subgroup& lattice);

/// B-valued inner product: coefficients λ° ↦ ⟨g, π(λ°)*f⟩ on
/// `adjoint_lattice`.
TwistedCoefficients rhs_inner(const Signal& f, const Signal& g,
                              const Subgroup& adjoint_lattice);

/// Trace: the coefficient at the lattice identity. Valid for either side;
/// the two names document intent.
std::complex<double> trace_A(const TwistedCoefficients& F);
std::complex<double> trace_B(const TwistedCoefficients& F);

/// ‖represent(lhs_inner(f,g))·h − right-action of rhs_inner(g,h) on f‖₂,
/// the Janssen-representation associativity residual. The adjoint lattice
/// is derived from `lattice` with the orthogonal weight.
double associativity_residual(const Signal& f, const Signal& g, const Signal& h,
                              const Subgroup& lattice);

/// Matrix-valued inner product of two window families: a grid of
/// coefficient functions over one lattice, together with its lazily
/// realized block-diagonal operator on C^{|G|·d·n}, index order (k, j, t).
class BlockInnerProduct {
  public:
    /// grid is n×n (A side, functions on Λ) or d×d (B side, functions on
    /// Λ°); grid[p][q] holds the coefficient vector of block (p,q).
    BlockInnerProduct(std::int64_t d, std::int64_t n, AlgebraSide side, Subgroup lattice,
                      std::vector<std::vector<Eigen::VectorXcd>> grid);

    std::int64_t d() const { return d_; }
    std::int64_t n() const { return n_; }
    AlgebraSide side() const { return side_; }
    const Subgroup& lattice() const { return lattice_; }
    const std::vector<std::vector<Eigen::VectorXcd>>& grid() const { return grid_; }

    /// Block (p,q) as a coefficient function on the lattice.
    TwistedCoefficients block(std::int64_t p, std::int64_t q) const;

    /// The realized operator (cached after the first call): A side places
    /// w Σ_λ A_{j,j'}(λ)π(λ) at block row (k,j), column (k,j') for every k;
    /// B side places w Σ_μ B_{k',k}(μ)π(μ)* at block row (k,j), column
    /// (k',j) for every j — the matrix of the right action.
    const Eigen::MatrixXcd& realized() const;

    /// Grid-diagonal sum of the coefficients at the lattice identity; for
    /// inner products of families this is the total inner product ⟨f,g⟩.
    std::complex<double> trace() const;

  private:
    std::int64_t d_;
    std::int64_t n_;
    AlgebraSide side_;
    Subgroup lattice_;
    std::vector<std::vector<Eigen::VectorXcd>> grid_;
    mutable std::optional<Eigen::MatrixXcd> realized_;
};

/// A-side block inner product of families f, g over Λ: grid entry (j,j')
/// is λ ↦ Σ_k ⟨f_{k,j}, π(λ)g_{k,j'}⟩.
BlockInnerProduct matrix_lhs(const WindowFamily& f, const WindowFamily& g,
                             const Subgroup& lattice);

/// B-side block inner product of families f, g over Λ° (derived from
/// `lattice` with the orthogonal weight): grid entry (i,k) is
/// μ° ↦ Σ_j ⟨g_{k,j}, π(μ°)*f_{i,j}⟩.
BlockInnerProduct matrix_rhs(const WindowFamily& f, const WindowFamily& g,
                             const Subgroup& lattice);

/// Operator-norm residual ‖P² − P‖ of a realized square operator.
double idempotent_residual(const Eigen::MatrixXcd& P);

/// Module norm ‖g‖ = √λ_max(realized matrix_lhs(g,g)); the square root of
/// the optimal Bessel bound.
double module_norm(const WindowFamily& g, const Subgroup& lattice);

/// Numerical check of the equality of the module norms computed on the two
/// sides (primal over Λ, adjoint over Λ°).
struct ModuleNormReport {
    double norm_primal = 0.0;    ///< √λ_max of realized matrix_lhs(g,g).
    double norm_adjoint = 0.0;   ///< √λ_max of realized matrix_rhs(g,g).
    double residual = 0.0;       ///< |norm_primal − norm_adjoint|.
    bool agrees = false;         ///< residual ≤ 1e-9·max(1, norm_primal).
};

/// Computes both module norms and flags (without failing) any discrepancy
/// beyond the relative tolerance.
ModuleNormReport module_norm_check(const WindowFamily& g, const Subgroup& lattice);

}  // namespace gdl
