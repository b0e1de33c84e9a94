#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fvlat/rational.hpp"
#include "fvlat/stone.hpp"

namespace fvlat {

/// A linear functional on simple functions over a finite point set,
/// determined by one weight per point.
class FiniteFunctional {
public:
  FiniteFunctional(std::size_t point_count, std::vector<Rational> weights)
      : weights_(std::move(weights)) {
    if (point_count == 0)
      throw DomainError("a functional needs at least one point");
    if (weights_.size() != point_count)
      throw DomainError("weight list does not match the point count");
  }

  std::size_t points() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t point) const {
    return weights_.at(point);
  }

  bool is_positive() const {
    for (const auto& w : weights_)
      if (w < 0) return false;
    return true;
  }

  Rational apply(const SimpleFunction& f) const {
    if (f.points() != weights_.size())
      throw DomainError("function on a different point set");
    Rational out = 0;
    for (std::size_t p = 0; p < weights_.size(); ++p)
      out += weights_[p] * f.value(p);
    return out;
  }

  FiniteFunctional operator+(const FiniteFunctional& other) const {
    if (other.points() != points())
      throw DomainError("functionals on different point sets");
    const std::size_t n = weights_.size();
    std::vector<Rational> out(weights_);
    for (std::size_t p = 0; p < n; ++p) out[p] += other.weights_[p];
    return FiniteFunctional(n, std::move(out));
  }

  FiniteFunctional scaled(const Rational& factor) const {
    const std::size_t n = weights_.size();
    std::vector<Rational> out(weights_);
    for (auto& w : out) w *= factor;
    return FiniteFunctional(n, std::move(out));
  }

  bool operator==(const FiniteFunctional& other) const {
    return weights_ == other.weights_;
  }

private:
  std::vector<Rational> weights_;
};

/// A nonnegative mass per point; measures subsets by summation.
class FiniteMeasure {
public:
  FiniteMeasure(std::size_t point_count, std::vector<Rational> masses)
      : masses_(std::move(masses)) {
    if (point_count == 0)
      throw DomainError("a measure needs at least one point");
    if (masses_.size() != point_count)
      throw DomainError("mass list does not match the point count");
    for (std::size_t p = 0; p < masses_.size(); ++p)
      if (masses_[p] < 0)
        throw DomainError("measure mass at point " + std::to_string(p) +
                          " is negative");
  }

  std::size_t points() const { return masses_.size(); }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& mass(std::size_t point) const { return masses_.at(point); }

  Rational measure_of(const std::vector<std::size_t>& subset) const {
    Rational out = 0;
    for (auto p : subset) {
      if (p >= masses_.size())
        throw DomainError("point " + std::to_string(p) + " out of range");
      out += masses_[p];
    }
    return out;
  }

  Rational total() const {
    Rational out = 0;
    for (const auto& m : masses_) out += m;
    return out;
  }

  bool operator==(const FiniteMeasure& other) const {
    return masses_ == other.masses_;
  }

private:
  std::vector<Rational> masses_;
};

/// A positive functional determines a measure through the masses it gives
/// the point indicators. Rejects functionals with a negative weight.
inline FiniteMeasure functional_to_measure(const FiniteFunctional& xi) {
  for (std::size_t p = 0; p < xi.points(); ++p)
    if (xi.weight(p) < 0)
      throw DomainError("functional is not positive: weight at point " +
                        std::to_string(p) + " is " +
                        rational_to_string(xi.weight(p)));
  return FiniteMeasure(xi.points(), xi.weights());
}

inline FiniteFunctional measure_to_functional(const FiniteMeasure& mu) {
  return FiniteFunctional(mu.points(), mu.masses());
}

/// Integral of a simple function: sum of value times mass over the points.
inline Rational integrate(const SimpleFunction& f, const FiniteMeasure& mu) {
  if (f.points() != mu.points())
    throw DomainError("function on a different point set");
  Rational out = 0;
  for (std::size_t p = 0; p < f.points(); ++p)
    out += f.value(p) * mu.mass(p);
  return out;
}

/// Norm as an operator on sup-normed functions: the total variation of
/// the weights. For positive functionals this is the value at the
/// constant one function.
inline Rational operator_norm(const FiniteFunctional& xi) {
  Rational out = 0;
  for (const auto& w : xi.weights()) out += abs_rational(w);
  return out;
}

struct AlNormReport {
  Rational norm_left;
  Rational norm_right;
  Rational norm_sum;
  bool additive = false;
};

/// For positive functionals the norm is evaluation at one, so it adds up
/// under sums. Rejects non-positive inputs.
inline AlNormReport al_norm_check(const FiniteFunctional& nu,
                                  const FiniteFunctional& mu) {
  if (nu.points() != mu.points())
    throw DomainError("functionals on different point sets");
  if (!nu.is_positive() || !mu.is_positive())
    throw DomainError("norm additivity only holds for positive functionals");
  const SimpleFunction one =
      SimpleFunction::constant(nu.points(), Rational(1));
  AlNormReport report{nu.apply(one), mu.apply(one), (nu + mu).apply(one),
                      false};
  report.additive = report.norm_sum == report.norm_left + report.norm_right;
  return report;
}

}  // namespace fvlat
