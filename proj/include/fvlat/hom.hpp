#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/config.hpp"
#include "fvlat/formal_sum.hpp"
#include "fvlat/lattice.hpp"
#include "fvlat/linalg.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

/// A finite-dimensional rational vector space ordered coordinatewise.
struct OrderedTarget {
  std::size_t dimension;

  explicit OrderedTarget(std::size_t dim) : dimension(dim) {
    if (dim == 0) throw DomainError("target dimension must be positive");
  }
};

using TargetVector = std::vector<Rational>;

inline TargetVector target_add(const TargetVector& a, const TargetVector& b) {
  TargetVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline TargetVector target_scale(const Rational& factor,
                                 const TargetVector& a) {
  TargetVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = factor * a[i];
  return out;
}

inline TargetVector target_min(const TargetVector& a, const TargetVector& b) {
  TargetVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

inline TargetVector target_max(const TargetVector& a, const TargetVector& b) {
  TargetVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

inline bool target_is_zero(const TargetVector& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& v) { return v == 0; });
}

inline bool target_is_nonnegative(const TargetVector& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& v) { return v >= 0; });
}

/// A total map from a small algebra into a coordinatewise-ordered target,
/// stored by element bitmask. Immutable once built.
class ElementMap {
public:
  ElementMap(BooleanAlgebra algebra, OrderedTarget target,
             std::vector<TargetVector> values_by_mask)
      : algebra_(std::move(algebra)),
        target_(target),
        values_(std::move(values_by_mask)) {
    const std::size_t n = algebra_.atom_count();
    if (n > 64) throw SizeError("element maps need at most 64 atoms");
    if (values_.size() != (std::size_t{1} << n))
      throw DomainError("element map must cover all " +
                        std::to_string(std::size_t{1} << n) + " elements");
    for (const auto& v : values_)
      if (v.size() != target_.dimension)
        throw DomainError("element map value of wrong dimension");
  }

  /// Builds from (element, value) pairs, requiring each element exactly once.
  static ElementMap from_values(
      const BooleanAlgebra& algebra, OrderedTarget target,
      const std::vector<std::pair<BaElement, TargetVector>>& values) {
    const std::size_t n = algebra.atom_count();
    if (n > 64) throw SizeError("element maps need at most 64 atoms");
    const std::size_t total = std::size_t{1} << n;
    std::vector<TargetVector> by_mask(total);
    std::vector<bool> seen(total, false);
    for (const auto& [element, value] : values) {
      if (!element.algebra().same_as(algebra))
        throw DomainError("element map entry from a different algebra");
      const auto mask = element.mask();
      if (seen[mask])
        throw DomainError("element map lists " + element.describe() +
                          " twice");
      seen[mask] = true;
      by_mask[mask] = value;
    }
    for (std::size_t m = 0; m < total; ++m)
      if (!seen[m])
        throw DomainError("element map is not total: the element with atom mask " +
                          std::to_string(m) + " is missing");
    return ElementMap(algebra, target, std::move(by_mask));
  }

  const BooleanAlgebra& algebra() const { return algebra_; }
  const OrderedTarget& target() const { return target_; }
  std::size_t dimension() const { return target_.dimension; }

  const TargetVector& value(const BaElement& element) const {
    if (!element.algebra().same_as(algebra_))
      throw DomainError("element map applied across algebras");
    return values_[element.mask()];
  }

  const TargetVector& value_at_mask(unsigned long long mask) const {
    return values_.at(mask);
  }

  /// True when no two elements share a value.
  bool injective() const {
    std::set<TargetVector> distinct(values_.begin(), values_.end());
    return distinct.size() == values_.size();
  }

private:
  BooleanAlgebra algebra_;
  OrderedTarget target_;
  std::vector<TargetVector> values_;
};

/// Checks that a map with nonnegative values and zero at bottom is
/// additive on disjoint pairs and sends them to disjoint vectors.
/// Nonnegativity and the zero at bottom are preconditions, not findings:
/// violating them throws DomainError instead of returning false.
inline bool verify_disjointness_additive(const ElementMap& psi,
                                         const Limits& limits = {}) {
  const std::size_t n = psi.algebra().atom_count();
  if (n > limits.quantifier_max_atoms)
    throw SizeError("disjointness check is capped at " +
                    std::to_string(limits.quantifier_max_atoms) + " atoms");
  const unsigned long long total = 1ull << n;

  if (!target_is_zero(psi.value_at_mask(0)))
    throw DomainError("map must send the bottom element to zero");
  for (unsigned long long m = 0; m < total; ++m)
    if (!target_is_nonnegative(psi.value_at_mask(m)))
      throw DomainError("map values must lie in the positive cone");

  const unsigned long long full = total - 1;
  for (unsigned long long a = 0; a <= full; ++a) {
    const unsigned long long rest = full & ~a;
    unsigned long long b = rest;
    while (true) {
      if (!target_is_zero(
              target_min(psi.value_at_mask(a), psi.value_at_mask(b))))
        return false;
      if (psi.value_at_mask(a | b) !=
          target_add(psi.value_at_mask(a), psi.value_at_mask(b)))
        return false;
      if (b == 0) break;
      b = (b - 1) & rest;
    }
  }
  return true;
}

/// The linear lattice homomorphism extending a verified disjointness-
/// additive map: a lattice element with valuation v goes to
/// sum_i v[i] * psi(atom_i), and a formal sum representative gives the
/// same vector via sum_k alpha_k * psi(a_k).
class HomExtension {
public:
  explicit HomExtension(ElementMap psi, const Limits& limits = {})
      : psi_(std::move(psi)) {
    if (!verify_disjointness_additive(psi_, limits))
      throw DomainError(
          "map is not disjointness-additive; it does not extend");
    const std::size_t n = psi_.algebra().atom_count();
    atom_images_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      atom_images_.push_back(psi_.value_at_mask(1ull << i));
    psi_injective_ = psi_.injective();
    injective_ = matrix_rank(atom_images_) == n;
  }

  const ElementMap& psi() const { return psi_; }
  std::size_t dimension() const { return psi_.dimension(); }
  const TargetVector& atom_image(std::size_t atom) const {
    return atom_images_.at(atom);
  }

  TargetVector apply(const LatticeElement& f) const {
    if (!f.algebra().same_as(psi_.algebra()))
      throw DomainError("extension applied across algebras");
    TargetVector out(dimension(), 0);
    for (std::size_t i = 0; i < atom_images_.size(); ++i) {
      const Rational& v = f.value_at(i);
      if (v == 0) continue;
      for (std::size_t c = 0; c < out.size(); ++c)
        out[c] += v * atom_images_[i][c];
    }
    return out;
  }

  /// Evaluation on any representative; agrees with apply on the class.
  TargetVector apply(const FormalSum& e) const {
    if (!e.algebra().same_as(psi_.algebra()))
      throw DomainError("extension applied across algebras");
    TargetVector out(dimension(), 0);
    for (const auto& [element, coeff] : e.terms()) {
      const TargetVector& value = psi_.value(element);
      for (std::size_t c = 0; c < out.size(); ++c)
        out[c] += coeff * value[c];
    }
    return out;
  }

  bool psi_injective() const { return psi_injective_; }

  /// Injectivity of the extension: the atom images span independently.
  bool injective() const { return injective_; }

private:
  ElementMap psi_;
  std::vector<TargetVector> atom_images_;
  bool psi_injective_ = false;
  bool injective_ = false;
};

inline HomExtension extend_hom(ElementMap psi, const Limits& limits = {}) {
  return HomExtension(std::move(psi), limits);
}

}  // namespace fvlat
