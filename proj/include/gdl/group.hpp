/**
 * @file group.hpp
 * @brief Finite abelian groups Z_{N1} x ... x Z_{Nk}: elements, characters,
 *        subgroups, coset transversals, covolumes, and the Weil measure
 *        identity on phase spaces.
 *
 * Mathematical background:
 *   Every finite abelian group G is a product of cyclic groups. Its dual Ĝ is
 *   isomorphic to G via ω(x) = exp(2πi Σ_i x_i ω_i / N_i), so the phase space
 *   G × Ĝ is modeled as the group with the duplicated order vector. Elements
 *   are integer coordinate tuples ordered lexicographically; that order fixes
 *   ranks, subgroup element lists, and coefficient layouts everywhere else.
 *
 * Measure conventions (used consistently across the library):
 *   - μ_G is counting measure, so |G| is the total mass of G.
 *   - μ_{G×Ĝ} is (1/|G|)·counting, so the phase space also has total mass |G|.
 *   - A subgroup Λ of the phase space carries a weight w (its measure is
 *     w·counting); its covolume is s(Λ) = |G| / (w·|Λ|).
 */
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gdl/rational_angle.hpp"

namespace gdl {

/// Thrown for structurally invalid inputs (bad shapes, non-subgroups, ...).
class InvalidInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerically well-posed answer does not exist
/// (e.g. canonical dual of a non-frame).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of Z_{N1} x ... x Z_{Nk}, one coordinate per cyclic factor.
using GroupElement = std::vector<std::int64_t>;

/// A finite abelian group, described by its cyclic factor orders.
struct GroupSpec {
  std::vector<std::int64_t> orders;

  /// Number of cyclic factors.
  std::size_t rank() const { return orders.size(); }

  /// |G| = Π N_i.
  std::int64_t size() const {
    std::int64_t s = 1;
    for (const auto n : orders) s *= n;
    return s;
  }

  bool operator==(const GroupSpec&) const = default;
};

/// Validates orders (all ≥ 1, nonempty) and builds the spec.
/// @throws InvalidInputError on non-positive orders or an empty list.
GroupSpec make_group(const std::vector<std::int64_t>& orders);

/// Lexicographic rank of an element (first coordinate most significant).
std::int64_t rank_of(const GroupSpec& g, const GroupElement& e);

/// Inverse of rank_of.
GroupElement unrank(const GroupSpec& g, std::int64_t r);

/// Componentwise sum mod orders.
GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);

/// Componentwise negation mod orders.
GroupElement negate(const GroupSpec& g, const GroupElement& a);

/// The identity element (all zeros).
GroupElement zero_of(const GroupSpec& g);

/// All |G| elements in lexicographic order.
std::vector<GroupElement> all_elements(const GroupSpec& g);

/// Exact character pairing angle: ⟨x,ω⟩ = Σ_i x_i ω_i / N_i (mod 1).
RationalAngle character_angle(const GroupSpec& g, const GroupElement& x,
                              const GroupElement& omega);

/// Character value ω(x) = exp(2πi⟨x,ω⟩), a unit complex number.
std::complex<double> character(const GroupSpec& g, const GroupElement& x,
                               const GroupElement& omega);

/// A subgroup of an ambient finite abelian group, with a measure weight.
/// `elements` is always the full element list, lexicographically sorted and
/// deduplicated; `weight` is the mass each element carries (w·counting).
struct Subgroup {
  GroupSpec ambient;
  std::vector<GroupElement> generators;
  std::vector<GroupElement> elements;
  double weight = 1.0;

  /// Membership test by binary search over the sorted element list.
  bool contains(const GroupElement& e) const;

  /// Index of an element in `elements`. @throws InvalidInputError if absent.
  std::size_t index_of(const GroupElement& e) const;
};

/// Closure of the generators under addition; elements sorted lex.
/// @throws InvalidInputError if weight ≤ 0 or a generator is out of range.
Subgroup subgroup_closure(const GroupSpec& ambient,
                          const std::vector<GroupElement>& generators,
                          double weight = 1.0);

/// One representative per coset of `sub` within `ambient_elements` (which
/// must be a union of cosets, e.g. a supergroup's element list): the lex-least
/// member of each coset, sorted; the first representative is the identity
/// whenever `ambient_elements` contains it.
std::vector<GroupElement> coset_transversal(const std::vector<GroupElement>& ambient_elements,
                                            const Subgroup& sub);

/// Phase-space specs are built by doubling a base group's orders; this
/// recovers the base-group total mass M = |G| from such a spec.
/// @throws InvalidInputError if the spec is not a doubled order vector.
std::int64_t haar_mass(const GroupSpec& phase);

/// Covolume s(Λ) = M / (w·|Λ|) of a phase-space subgroup, where M = |G| is
/// the phase space's total Haar mass.
double covolume(const GroupSpec& phase, const Subgroup& sub);

/// Exact covolume as a reduced fraction, defined when weight == 1
/// (counting measure). @throws InvalidInputError otherwise.
std::pair<std::int64_t, std::int64_t> covolume_exact(const GroupSpec& phase,
                                                     const Subgroup& sub);

/// Weil's measure-splitting identity: ∫_{G×Ĝ} F dμ must equal the iterated
/// sum μ_Q Σ_{cosets} w Σ_Λ F over a transversal, with the quotient mass
/// μ_Q = M / (#cosets · w · |Λ|). Returns |lhs − rhs|; F is indexed by
/// phase-space rank.
double weil_verify(const GroupSpec& phase, const Subgroup& sub,
                   const Eigen::VectorXcd& F);

}  // namespace gdl
