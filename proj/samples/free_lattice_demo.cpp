// Walks one element of the free vector lattice on two generators through
// canonical forms, cone membership, a certificate, and a disjointness-
// additive extension.

#include <iostream>

#include "fvlat/fvlat.hpp"

int main() {
  using namespace fvlat;

  auto [algebra, gens] = free_boolean_algebra(2);
  const BaElement g1 = gens[0];
  const BaElement g2 = gens[1];

  std::cout << "free algebra on 2 generators: " << algebra.atom_count()
            << " atoms\n";
  for (std::size_t i = 0; i < algebra.atom_count(); ++i)
    std::cout << "  atom " << i << " = " << algebra.atom_label(i) << "\n";

  // 2*g1 - 1*(g1 & g2) lies in the positive cone.
  const FormalSum e = FormalSum::term(g1, Rational(2)) +
                      FormalSum::term(g1.meet(g2), Rational(-1));
  std::cout << "\ncanonical form of 2*g1 - 1*(g1 & g2):";
  const LatticeElement canon = canonicalize(e);
  for (const auto& v : canon.valuation())
    std::cout << " " << rational_to_string(v);
  std::cout << "\ncone member: " << (cone_contains_atoms(e) ? "yes" : "no")
            << "\n";

  const ConeCertificate cert = cone_certificate(e);
  std::cout << "certificate terms: " << cert.terms().size()
            << ", reconstructs input: "
            << (cert.reconstruct() == e ? "yes" : "no") << "\n";

  // A map determined on the two atoms of the free algebra on one
  // generator extends to a lattice homomorphism.
  auto small = free_boolean_algebra(1);
  const ElementMap psi(small.algebra, OrderedTarget(2),
                       {{Rational(0), Rational(0)},
                        {Rational(0), Rational(2)},
                        {Rational(1), Rational(0)},
                        {Rational(1), Rational(2)}});
  const HomExtension ext = extend_hom(psi);
  const FormalSum probe =
      FormalSum::term(small.generators[0], Rational(3)) +
      FormalSum::term(small.generators[0].complement(), Rational(-1));
  const TargetVector image = ext.apply(probe);
  std::cout << "\nextension of the atom map applied to 3*g1 - 1*!g1: ("
            << rational_to_string(image[0]) << ", "
            << rational_to_string(image[1]) << ")\n";
  std::cout << "extension injective: " << (ext.injective() ? "yes" : "no")
            << "\n";
  return 0;
}
