// Functionals on the dual space: measures, integration, operator norms,
// and the urysohn truncation.

#include <iostream>

#include "fvlat/fvlat.hpp"

int main() {
  using namespace fvlat;

  auto [algebra, gens] = free_boolean_algebra(2);
  const StoneSpace space(algebra);

  const FiniteFunctional xi(space.point_count(),
                            {Rational(2), Rational(1), Rational(0),
                             Rational(1, 2)});
  const FiniteMeasure mu = functional_to_measure(xi);
  std::cout << "weights -> masses, total " << rational_to_string(mu.total())
            << "\n";
  std::cout << "measure of clopen(g1): "
            << rational_to_string(mu.measure_of(space.clopen_of(gens[0])))
            << "\n";

  const SimpleFunction f(space.point_count(),
                         {Rational(1), Rational(-1), Rational(2),
                          Rational(0)});
  std::cout << "integral of f: " << rational_to_string(integrate(f, mu))
            << ", functional value: " << rational_to_string(xi.apply(f))
            << "\n";
  std::cout << "operator norm: " << rational_to_string(operator_norm(xi))
            << "\n";

  const FiniteFunctional nu(space.point_count(),
                            {Rational(1), Rational(0), Rational(3),
                             Rational(1)});
  const AlNormReport report = al_norm_check(xi, nu);
  std::cout << "norm additivity: " << rational_to_string(report.norm_left)
            << " + " << rational_to_string(report.norm_right) << " = "
            << rational_to_string(report.norm_sum)
            << (report.additive ? " (additive)" : " (not additive)") << "\n";

  const SimpleFunction h(3, {Rational(5, 6), Rational(1, 2), Rational(1, 6)});
  const SimpleFunction u = urysohn_truncation(h);
  std::cout << "urysohn truncation of (5/6, 1/2, 1/6): ("
            << rational_to_string(u.value(0)) << ", "
            << rational_to_string(u.value(1)) << ", "
            << rational_to_string(u.value(2)) << ")\n";
  return 0;
}
