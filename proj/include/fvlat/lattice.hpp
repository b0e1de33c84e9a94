#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/cone.hpp"
#include "fvlat/formal_sum.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

/// An element of the free vector lattice over a finite Boolean algebra in
/// canonical form: one rational per atom. Ordering, lattice operations
/// and linear structure are all atomwise.
class LatticeElement {
public:
  LatticeElement(BooleanAlgebra algebra, std::vector<Rational> valuation)
      : algebra_(std::move(algebra)), valuation_(std::move(valuation)) {
    if (valuation_.size() != algebra_.atom_count())
      throw DomainError("valuation length does not match the atom count");
  }

  static LatticeElement zero(const BooleanAlgebra& algebra) {
    return LatticeElement(algebra,
                          std::vector<Rational>(algebra.atom_count(), 0));
  }

  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<Rational>& valuation() const { return valuation_; }
  const Rational& value_at(std::size_t atom) const {
    algebra_.require_atom(atom);
    return valuation_[atom];
  }

  bool is_zero() const {
    return std::all_of(valuation_.begin(), valuation_.end(),
                       [](const Rational& v) { return v == 0; });
  }
  bool is_positive() const {
    return std::all_of(valuation_.begin(), valuation_.end(),
                       [](const Rational& v) { return v >= 0; });
  }

  LatticeElement operator+(const LatticeElement& other) const {
    return zip(other, [](const Rational& a, const Rational& b) { return a + b; });
  }
  LatticeElement operator-(const LatticeElement& other) const {
    return zip(other, [](const Rational& a, const Rational& b) { return a - b; });
  }
  LatticeElement operator-() const { return scaled(Rational(-1)); }
  LatticeElement scaled(const Rational& factor) const {
    return map([&](const Rational& v) { return factor * v; });
  }

  LatticeElement abs() const {
    return map([](const Rational& v) { return v < 0 ? -v : v; });
  }
  LatticeElement pos_part() const {
    return map([](const Rational& v) { return v < 0 ? Rational(0) : v; });
  }
  LatticeElement meet(const LatticeElement& other) const {
    return zip(other,
               [](const Rational& a, const Rational& b) { return std::min(a, b); });
  }
  LatticeElement join(const LatticeElement& other) const {
    return zip(other,
               [](const Rational& a, const Rational& b) { return std::max(a, b); });
  }

  bool leq(const LatticeElement& other) const {
    require_same(other);
    for (std::size_t i = 0; i < valuation_.size(); ++i)
      if (valuation_[i] > other.valuation_[i]) return false;
    return true;
  }

  bool operator==(const LatticeElement& other) const {
    require_same(other);
    return valuation_ == other.valuation_;
  }
  bool operator!=(const LatticeElement& other) const {
    return !(*this == other);
  }

private:
  BooleanAlgebra algebra_;
  std::vector<Rational> valuation_;

  void require_same(const LatticeElement& other) const {
    if (!algebra_.same_as(other.algebra_))
      throw DomainError("operation between elements of distinct lattices");
  }

  template <typename F>
  LatticeElement map(F&& f) const {
    std::vector<Rational> out;
    out.reserve(valuation_.size());
    for (const auto& v : valuation_) out.push_back(f(v));
    return LatticeElement(algebra_, std::move(out));
  }

  template <typename F>
  LatticeElement zip(const LatticeElement& other, F&& f) const {
    require_same(other);
    std::vector<Rational> out;
    out.reserve(valuation_.size());
    for (std::size_t i = 0; i < valuation_.size(); ++i)
      out.push_back(f(valuation_[i], other.valuation_[i]));
    return LatticeElement(algebra_, std::move(out));
  }
};

inline LatticeElement operator*(const Rational& factor,
                                const LatticeElement& f) {
  return f.scaled(factor);
}

/// Quotient map: the canonical form of a formal sum assigns to each atom
/// the coefficient sum of the terms dominating it.
inline LatticeElement canonicalize(const FormalSum& e) {
  const std::size_t n = e.algebra().atom_count();
  std::vector<Rational> valuation(n, 0);
  for (const auto& [element, coeff] : e.terms())
    for (auto i = element.atoms().find_first(); i != AtomSet::npos;
         i = element.atoms().find_next(i))
      valuation[i] += coeff;
  return LatticeElement(e.algebra(), std::move(valuation));
}

/// Two formal sums represent the same lattice element exactly when their
/// difference lies in the cone both ways.
inline bool equivalent(const FormalSum& e, const FormalSum& f) {
  const FormalSum d = e - f;
  return cone_contains_atoms(d) && cone_contains_atoms(-d);
}

/// Embedding of the algebra: a goes to the class of the single term 1 * a.
inline LatticeElement embed_phi(const BaElement& a) {
  return canonicalize(FormalSum::term(a, Rational(1)));
}

/// Least n >= 0 with |f| <= n * embed_phi(top): the ceiling of the largest
/// absolute valuation entry.
inline Integer strong_unit_bound(const LatticeElement& f) {
  Rational max_abs = 0;
  for (const auto& v : f.valuation())
    if (abs_rational(v) > max_abs) max_abs = abs_rational(v);
  return ceil_rational(max_abs);
}

/// Joint rewriting of several formal sums over one disjoint family: row k
/// reconstructs input k as a combination of family members.
struct DisjointRepresentation {
  DisjointFamily family;
  std::vector<std::vector<Rational>> coefficients;

  FormalSum reconstruct(std::size_t row) const {
    std::vector<std::pair<BaElement, Rational>> terms;
    const auto& coeffs = coefficients.at(row);
    for (std::size_t i = 0; i < family.size(); ++i)
      terms.emplace_back(family.member(i), coeffs[i]);
    return FormalSum(family.algebra(), terms);
  }
};

/// Rewrites every input over the disjoint refinement of the union of the
/// supports. Each reconstructed row is equivalent to its input. Inputs
/// that are all zero give the empty family.
inline DisjointRepresentation common_disjoint_representation(
    const std::vector<FormalSum>& inputs) {
  if (inputs.empty())
    throw DomainError("common disjoint representation needs inputs");
  const BooleanAlgebra& algebra = inputs.front().algebra();
  for (const auto& e : inputs)
    if (!e.algebra().same_as(algebra))
      throw DomainError("representation inputs from distinct algebras");

  std::vector<BaElement> support;
  {
    std::set<BaElement, BaElementLess> seen;
    for (const auto& e : inputs)
      for (const auto& [element, coeff] : e.terms()) seen.insert(element);
    support.assign(seen.begin(), seen.end());
  }

  if (support.empty()) {
    return DisjointRepresentation{
        DisjointFamily(algebra),
        std::vector<std::vector<Rational>>(inputs.size())};
  }

  DisjointFamily family = disjoint_refinement(support);
  std::vector<std::vector<Rational>> coefficients;
  coefficients.reserve(inputs.size());
  for (const auto& e : inputs) {
    std::vector<Rational> row;
    row.reserve(family.size());
    for (const auto& member : family.members()) {
      Rational sum = 0;
      for (const auto& [element, coeff] : e.terms())
        if (member.leq(element)) sum += coeff;
      row.push_back(std::move(sum));
    }
    coefficients.push_back(std::move(row));
  }
  return DisjointRepresentation{std::move(family), std::move(coefficients)};
}

/// Supremum of f ∧ n*h over all n >= 1, for positive f and h: keeps the
/// value of f on the support of h and vanishes elsewhere. The sequence
/// stabilizes once n reaches ppp_stabilization_bound.
inline LatticeElement ppp_sup(const LatticeElement& f,
                              const LatticeElement& h) {
  if (!f.algebra().same_as(h.algebra()))
    throw DomainError("operation between elements of distinct lattices");
  if (!f.is_positive() || !h.is_positive())
    throw DomainError("the principal projection supremum needs positive inputs");
  std::vector<Rational> out;
  out.reserve(f.valuation().size());
  for (std::size_t i = 0; i < f.valuation().size(); ++i)
    out.push_back(h.value_at(i) > 0 ? f.value_at(i) : Rational(0));
  return LatticeElement(f.algebra(), std::move(out));
}

/// Smallest n with f ∧ n*h equal to the supremum (0 when f or h vanish):
/// the ceiling of max(f) over the smallest positive value of h.
inline Integer ppp_stabilization_bound(const LatticeElement& f,
                                       const LatticeElement& h) {
  if (!f.algebra().same_as(h.algebra()))
    throw DomainError("operation between elements of distinct lattices");
  if (!f.is_positive() || !h.is_positive())
    throw DomainError("the principal projection supremum needs positive inputs");
  Rational max_f = 0;
  for (const auto& v : f.valuation())
    if (v > max_f) max_f = v;
  Rational min_h = 0;
  bool has_positive = false;
  for (const auto& v : h.valuation()) {
    if (v > 0 && (!has_positive || v < min_h)) {
      min_h = v;
      has_positive = true;
    }
  }
  if (max_f == 0 || !has_positive) return 0;
  return ceil_rational(max_f / min_h);
}

}  // namespace fvlat
