/**
 * @file group.cpp
 * @brief Implementation of finite abelian group machinery.
 */
#include "gdl/group.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace gdl {

GroupSpec make_group(const std::vector<std::int64_t>& orders) {
  if (orders.empty()) throw InvalidInputError("group: order list is empty");
  for (const auto n : orders) {
    if (n < 1) throw InvalidInputError("group: orders must be positive");
  }
  return GroupSpec{orders};
}

std::int64_t rank_of(const GroupSpec& g, const GroupElement& e) {
  if (e.size() != g.rank()) throw InvalidInputError("element rank mismatch");
  std::int64_t r = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= g.orders[i]) throw InvalidInputError("element out of range");
    r = r * g.orders[i] + e[i];
  }
  return r;
}

GroupElement unrank(const GroupSpec& g, std::int64_t r) {
  GroupElement e(g.rank());
  for (std::size_t i = g.rank(); i-- > 0;) {
    e[i] = r % g.orders[i];
    r /= g.orders[i];
  }
  return e;
}

GroupElement add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  GroupElement c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) c[i] = (a[i] + b[i]) % g.orders[i];
  return c;
}

GroupElement negate(const GroupSpec& g, const GroupElement& a) {
  GroupElement c(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) c[i] = (g.orders[i] - a[i]) % g.orders[i];
  return c;
}

GroupElement zero_of(const GroupSpec& g) { return GroupElement(g.rank(), 0); }

std::vector<GroupElement> all_elements(const GroupSpec& g) {
  std::vector<GroupElement> out;
  const std::int64_t n = g.size();
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) out.push_back(unrank(g, r));
  return out;
}

RationalAngle character_angle(const GroupSpec& g, const GroupElement& x,
                              const GroupElement& omega) {
  if (x.size() != g.rank() || omega.size() != g.rank())
    throw InvalidInputError("character: element rank mismatch");
  RationalAngle a;
  for (std::size_t i = 0; i < g.rank(); ++i)
    a = a + RationalAngle::from_fraction(x[i] * omega[i], g.orders[i]);
  return a;
}

std::complex<double> character(const GroupSpec& g, const GroupElement& x,
                               const GroupElement& omega) {
  return character_angle(g, x, omega).to_complex();
}

bool Subgroup::contains(const GroupElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::size_t Subgroup::index_of(const GroupElement& e) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e)
    throw InvalidInputError("subgroup: element not in subgroup");
  return static_cast<std::size_t>(it - elements.begin());
}

Subgroup subgroup_closure(const GroupSpec& ambient,
                          const std::vector<GroupElement>& generators,
                          double weight) {
  if (!(weight > 0.0)) throw InvalidInputError("subgroup: weight must be positive");
  for (const auto& gen : generators) rank_of(ambient, gen);  // validates range

  std::unordered_set<std::int64_t> seen;
  std::vector<GroupElement> frontier{zero_of(ambient)};
  seen.insert(0);
  std::vector<GroupElement> elems{zero_of(ambient)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& a : frontier) {
      for (const auto& gen : generators) {
        GroupElement b = add(ambient, a, gen);
        const std::int64_t r = rank_of(ambient, b);
        if (seen.insert(r).second) {
          elems.push_back(b);
          next.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{ambient, generators, std::move(elems), weight};
}

std::vector<GroupElement> coset_transversal(const std::vector<GroupElement>& ambient_elements,
                                            const Subgroup& sub) {
  std::set<GroupElement> remaining(ambient_elements.begin(), ambient_elements.end());
  std::vector<GroupElement> reps;
  while (!remaining.empty()) {
    const GroupElement rep = *remaining.begin();  // lex-least of its coset
    reps.push_back(rep);
    for (const auto& s : sub.elements) remaining.erase(add(sub.ambient, rep, s));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::int64_t haar_mass(const GroupSpec& phase) {
  const std::size_t k2 = phase.rank();
  if (k2 == 0 || k2 % 2 != 0)
    throw InvalidInputError("phase space: order vector must have even length");
  const std::size_t k = k2 / 2;
  std::int64_t m = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (phase.orders[i] != phase.orders[i + k])
      throw InvalidInputError("phase space: orders must be a doubled vector");
    m *= phase.orders[i];
  }
  return m;
}

double covolume(const GroupSpec& phase, const Subgroup& sub) {
  const double m = static_cast<double>(haar_mass(phase));
  return m / (sub.weight * static_cast<double>(sub.elements.size()));
}

std::pair<std::int64_t, std::int64_t> covolume_exact(const GroupSpec& phase,
                                                     const Subgroup& sub) {
  if (sub.weight != 1.0)
    throw InvalidInputError("covolume_exact: defined only for counting weight 1");
  std::int64_t num = haar_mass(phase);
  std::int64_t den = static_cast<std::int64_t>(sub.elements.size());
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

double weil_verify(const GroupSpec& phase, const Subgroup& sub,
                   const Eigen::VectorXcd& F) {
  if (F.size() != phase.size()) throw InvalidInputError("weil_verify: F size mismatch");
  const double m = static_cast<double>(haar_mass(phase));
  const double plane_measure = m / static_cast<double>(phase.size());

  std::complex<double> lhs = 0.0;
  for (Eigen::Index i = 0; i < F.size(); ++i) lhs += plane_measure * F[i];

  const auto reps = coset_transversal(all_elements(phase), sub);
  const double mu_q =
      m / (static_cast<double>(reps.size()) * sub.weight *
           static_cast<double>(sub.elements.size()));
  std::complex<double> rhs = 0.0;
  for (const auto& q : reps) {
    std::complex<double> inner = 0.0;
    for (const auto& lam : sub.elements)
      inner += sub.weight * F[rank_of(phase, add(phase, q, lam))];
    rhs += mu_q * inner;
  }
  return std::abs(lhs - rhs);
}

}  // namespace gdl
