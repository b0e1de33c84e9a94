#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

using TermMap = std::map<BaElement, Rational, BaElementLess>;

/// A finitely supported rational combination of algebra elements.
/// Terms with coefficient zero and terms at the bottom element are pruned
/// at construction, so the support always lists nonzero elements with
/// nonzero coefficients.
class FormalSum {
public:
  explicit FormalSum(BooleanAlgebra algebra) : algebra_(std::move(algebra)) {}

  FormalSum(BooleanAlgebra algebra,
            const std::vector<std::pair<BaElement, Rational>>& terms)
      : algebra_(std::move(algebra)) {
    for (const auto& [element, coeff] : terms) insert(element, coeff);
  }

  /// Single term coeff * element.
  static FormalSum term(const BaElement& element, const Rational& coeff) {
    FormalSum e(element.algebra());
    e.insert(element, coeff);
    return e;
  }

  const BooleanAlgebra& algebra() const { return algebra_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const BaElement& element) const {
    auto it = terms_.find(element);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::vector<BaElement> support() const {
    std::vector<BaElement> out;
    out.reserve(terms_.size());
    for (const auto& [element, coeff] : terms_) out.push_back(element);
    return out;
  }

  FormalSum operator+(const FormalSum& other) const {
    require_same(other);
    FormalSum out = *this;
    for (const auto& [element, coeff] : other.terms_)
      out.insert(element, coeff);
    return out;
  }

  FormalSum operator-(const FormalSum& other) const {
    require_same(other);
    FormalSum out = *this;
    for (const auto& [element, coeff] : other.terms_)
      out.insert(element, -coeff);
    return out;
  }

  FormalSum operator-() const { return scaled(Rational(-1)); }

  FormalSum scaled(const Rational& factor) const {
    FormalSum out(algebra_);
    if (factor == 0) return out;
    for (const auto& [element, coeff] : terms_)
      out.terms_.emplace(element, factor * coeff);
    return out;
  }

  bool operator==(const FormalSum& other) const {
    require_same(other);
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [element, coeff] : terms_) {
      if (element != it->first || coeff != it->second) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const FormalSum& other) const { return !(*this == other); }

private:
  BooleanAlgebra algebra_;
  TermMap terms_;

  void insert(const BaElement& element, const Rational& coeff) {
    if (!element.algebra().same_as(algebra_))
      throw DomainError("formal sum term from a different algebra");
    if (coeff == 0 || element.is_bottom()) return;
    auto [it, inserted] = terms_.try_emplace(element, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_same(const FormalSum& other) const {
    if (!algebra_.same_as(other.algebra_))
      throw DomainError("operation between formal sums of distinct algebras");
  }
};

inline FormalSum operator*(const Rational& factor, const FormalSum& e) {
  return e.scaled(factor);
}

}  // namespace fvlat
