#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/lattice.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

/// The dual space of a finite Boolean algebra: one point per atom, with
/// the discrete topology, so every subset is clopen. clopen_of is the
/// algebra isomorphism onto the power set of the points.
class StoneSpace {
public:
  explicit StoneSpace(BooleanAlgebra source) : source_(std::move(source)) {}

  const BooleanAlgebra& source() const { return source_; }
  std::size_t point_count() const { return source_.atom_count(); }

  std::vector<std::size_t> clopen_of(const BaElement& element) const {
    if (!element.algebra().same_as(source_))
      throw DomainError("element of a different algebra");
    return element.atom_indices();
  }

  BaElement element_of(const std::vector<std::size_t>& clopen) const {
    return source_.element(clopen);
  }

  std::string point_label(std::size_t point) const {
    source_.require_atom(point);
    return source_.atom_label(point);
  }

private:
  BooleanAlgebra source_;
};

/// A rational-valued function on a finite point set, held pointwise.
class SimpleFunction {
public:
  SimpleFunction(std::size_t point_count, std::vector<Rational> values)
      : values_(std::move(values)) {
    if (point_count == 0)
      throw DomainError("a simple function needs at least one point");
    if (values_.size() != point_count)
      throw DomainError("value list does not match the point count");
  }

  static SimpleFunction constant(std::size_t points, const Rational& value) {
    return SimpleFunction(points, std::vector<Rational>(points, value));
  }
  static SimpleFunction zero(std::size_t points) {
    return constant(points, Rational(0));
  }
  static SimpleFunction indicator(std::size_t points,
                                  const std::vector<std::size_t>& subset) {
    std::vector<Rational> values(points, 0);
    for (auto p : subset) {
      if (p >= points)
        throw DomainError("indicator point " + std::to_string(p) +
                          " out of range");
      values[p] = 1;
    }
    return SimpleFunction(points, std::move(values));
  }

  std::size_t points() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(std::size_t point) const { return values_.at(point); }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < values_.size(); ++p)
      if (values_[p] != 0) out.push_back(p);
    return out;
  }

  Rational max_abs() const {
    Rational out = 0;
    for (const auto& v : values_)
      if (abs_rational(v) > out) out = abs_rational(v);
    return out;
  }

  bool is_positive() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v >= 0; });
  }

  SimpleFunction operator+(const SimpleFunction& other) const {
    return zip(other, [](const Rational& a, const Rational& b) { return a + b; });
  }
  SimpleFunction operator-(const SimpleFunction& other) const {
    return zip(other, [](const Rational& a, const Rational& b) { return a - b; });
  }
  SimpleFunction operator-() const { return scaled(Rational(-1)); }
  SimpleFunction scaled(const Rational& factor) const {
    return map([&](const Rational& v) { return factor * v; });
  }
  SimpleFunction meet(const SimpleFunction& other) const {
    return zip(other,
               [](const Rational& a, const Rational& b) { return std::min(a, b); });
  }
  SimpleFunction join(const SimpleFunction& other) const {
    return zip(other,
               [](const Rational& a, const Rational& b) { return std::max(a, b); });
  }
  SimpleFunction abs() const {
    return map([](const Rational& v) { return v < 0 ? -v : v; });
  }
  SimpleFunction pos_part() const {
    return map([](const Rational& v) { return v < 0 ? Rational(0) : v; });
  }

  bool leq(const SimpleFunction& other) const {
    require_same(other);
    for (std::size_t p = 0; p < values_.size(); ++p)
      if (values_[p] > other.values_[p]) return false;
    return true;
  }

  bool operator==(const SimpleFunction& other) const {
    require_same(other);
    return values_ == other.values_;
  }
  bool operator!=(const SimpleFunction& other) const {
    return !(*this == other);
  }

private:
  std::vector<Rational> values_;

  void require_same(const SimpleFunction& other) const {
    if (values_.size() != other.values_.size())
      throw DomainError("operation between functions on different point sets");
  }

  template <typename F>
  SimpleFunction map(F&& f) const {
    const std::size_t n = values_.size();
    std::vector<Rational> out;
    out.reserve(n);
    for (const auto& v : values_) out.push_back(f(v));
    return SimpleFunction(n, std::move(out));
  }

  template <typename F>
  SimpleFunction zip(const SimpleFunction& other, F&& f) const {
    require_same(other);
    const std::size_t n = values_.size();
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t p = 0; p < n; ++p)
      out.push_back(f(values_[p], other.values_[p]));
    return SimpleFunction(n, std::move(out));
  }
};

/// Transport of a lattice element to the function on the dual space that
/// takes the valuation entry at each point. A lattice isomorphism; the
/// inverse is from_simple_function.
inline SimpleFunction to_simple_function(const StoneSpace& space,
                                         const LatticeElement& f) {
  if (!f.algebra().same_as(space.source()))
    throw DomainError("lattice element of a different algebra");
  return SimpleFunction(space.point_count(), f.valuation());
}

inline LatticeElement from_simple_function(const StoneSpace& space,
                                           const SimpleFunction& f) {
  if (f.points() != space.point_count())
    throw DomainError("function on a different point set");
  return LatticeElement(space.source(), f.values());
}

/// min(max(3h - 1, 0), 1). Whenever some g with 1_L <= g <= 1_U lies
/// within distance 1/3 of h in the sup norm, the result is again between
/// the two indicators.
inline SimpleFunction urysohn_truncation(const SimpleFunction& h) {
  const SimpleFunction one = SimpleFunction::constant(h.points(), Rational(1));
  const SimpleFunction zero = SimpleFunction::zero(h.points());
  return (h.scaled(Rational(3)) - one).join(zero).meet(one);
}

struct SimplePppCase {
  SimpleFunction f;
  SimpleFunction h;
  SimpleFunction sup;
  std::uint64_t stabilized_at = 0;
  bool ok = false;
};

struct SimplePppReport {
  std::vector<SimplePppCase> cases;
  bool all_ok = false;
};

/// Supremum of f ∧ n*h over n >= 1 for positive simple functions, found
/// by iterating until the sequence stops moving. Returns the limit and
/// the n where it stabilized.
inline std::pair<SimpleFunction, std::uint64_t> simple_ppp_sup(
    const SimpleFunction& f, const SimpleFunction& h) {
  if (!f.is_positive() || !h.is_positive())
    throw DomainError("the principal projection supremum needs positive inputs");
  SimpleFunction current = f.meet(h);
  std::uint64_t n = 1;
  while (true) {
    SimpleFunction next = f.meet(h.scaled(Rational(n + 1)));
    if (next == current) return {std::move(current), n};
    current = std::move(next);
    ++n;
  }
}

/// Samples positive pairs on the dual space and confirms that the
/// iterated supremum equals f restricted to the support of h.
inline SimplePppReport verify_simple_ppp(const StoneSpace& space,
                                         std::size_t samples = 25,
                                         std::uint64_t seed = 20260817u) {
  std::mt19937_64 rng(seed);
  const std::size_t points = space.point_count();
  const auto random_function = [&]() {
    std::vector<Rational> values(points);
    for (auto& v : values) {
      if (rng() % 3 == 0) {
        v = 0;
      } else {
        const auto num = static_cast<long long>(rng() % 12);
        const auto den = static_cast<long long>(rng() % 4) + 1;
        v = Rational(num, den);
      }
    }
    return SimpleFunction(points, std::move(values));
  };

  SimplePppReport report;
  report.all_ok = true;
  for (std::size_t i = 0; i < samples; ++i) {
    SimpleFunction f = random_function();
    SimpleFunction h = random_function();
    auto [sup, stabilized_at] = simple_ppp_sup(f, h);

    std::vector<Rational> masked(points, 0);
    for (std::size_t p = 0; p < points; ++p)
      if (h.value(p) > 0) masked[p] = f.value(p);
    const bool ok = sup == SimpleFunction(points, std::move(masked));

    report.all_ok = report.all_ok && ok;
    report.cases.push_back(SimplePppCase{std::move(f), std::move(h),
                                         std::move(sup), stabilized_at, ok});
  }
  return report;
}

}  // namespace fvlat
