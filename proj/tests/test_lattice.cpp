#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fvlat/fvlat.hpp"
#include "support/generators.hpp"

using namespace fvlat;
using test::RandomSource;

TEST_CASE("canonical form of a known sum", "[lattice]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const FormalSum f = FormalSum::term(gens[0], Rational(1)) +
                      FormalSum::term(gens[1], Rational(1));
  const LatticeElement v = canonicalize(f);
  REQUIRE(v.valuation() == std::vector<Rational>{Rational(0), Rational(1),
                                                 Rational(1), Rational(2)});
  REQUIRE(canonicalize(FormalSum(algebra)).is_zero());
}

TEST_CASE("canonicalize respects sum structure", "[lattice]") {
  RandomSource rng(808);
  for (int round = 0; round < 150; ++round) {
    auto [algebra, gens] = free_boolean_algebra(1 + rng.index(3));
    const FormalSum f = rng.formal_sum(algebra, 4);
    const FormalSum g = rng.formal_sum(algebra, 4);
    const Rational c = rng.rational(-4, 4, 6);
    REQUIRE(canonicalize(f + g) == canonicalize(f) + canonicalize(g));
    REQUIRE(canonicalize(f.scaled(c)) == canonicalize(f).scaled(c));
  }
}

TEST_CASE("equivalence matches equal valuations", "[lattice]") {
  RandomSource rng(909);
  int equal_count = 0;
  for (int round = 0; round < 200; ++round) {
    auto [algebra, gens] = free_boolean_algebra(1 + rng.index(2));
    const FormalSum f = rng.formal_sum(algebra, 3);
    const FormalSum g = rng.chance(50) ? f + rng.kernel_element(algebra)
                                       : rng.formal_sum(algebra, 3);
    const bool same = canonicalize(f) == canonicalize(g);
    equal_count += same ? 1 : 0;
    REQUIRE(equivalent(f, g) == same);
  }
  REQUIRE(equal_count > 30);
  REQUIRE(equal_count < 170);
}

TEST_CASE("lattice element operations", "[lattice]") {
  BooleanAlgebra a4(4);
  const LatticeElement f(
      a4, {Rational(3), Rational(-2), Rational(0), Rational(1, 2)});
  const LatticeElement g(
      a4, {Rational(1), Rational(1), Rational(-1), Rational(1, 2)});

  REQUIRE(f.meet(g).valuation() ==
          std::vector<Rational>{Rational(1), Rational(-2), Rational(-1),
                                Rational(1, 2)});
  REQUIRE(f.join(g).valuation() ==
          std::vector<Rational>{Rational(3), Rational(1), Rational(0),
                                Rational(1, 2)});
  REQUIRE(f.abs().valuation() ==
          std::vector<Rational>{Rational(3), Rational(2), Rational(0),
                                Rational(1, 2)});
  REQUIRE(f.pos_part() == f.join(LatticeElement::zero(a4)));
  REQUIRE(!f.leq(g));
  REQUIRE(f.meet(g).leq(f));
  REQUIRE(f.meet(g).leq(g));
  REQUIRE((f + g) - g == f);
  REQUIRE((Rational(2) * f).value_at(0) == Rational(6));

  BooleanAlgebra a3(3);
  REQUIRE_THROWS_AS(f.meet(LatticeElement::zero(a3)), DomainError);
  REQUIRE_THROWS_AS(LatticeElement(a3, {Rational(1)}), DomainError);
}

TEST_CASE("lattice identities on random valuations", "[lattice]") {
  RandomSource rng(1010);
  for (int round = 0; round < 200; ++round) {
    BooleanAlgebra algebra(1 + rng.index(8));
    const LatticeElement f = rng.lattice_element(algebra);
    const LatticeElement g = rng.lattice_element(algebra);
    const LatticeElement h = rng.lattice_element(algebra);

    REQUIRE(f.meet(g) == g.meet(f));
    REQUIRE(f.join(g) == g.join(f));
    REQUIRE(f.meet(g.join(h)) == f.meet(g).join(f.meet(h)));
    REQUIRE(f + g.meet(h) == (f + g).meet(f + h));
    REQUIRE(f.abs() == f.join(-f));
    REQUIRE(f.pos_part() - (-f).pos_part() == f);
    REQUIRE(f.pos_part() + (-f).pos_part() == f.abs());
    REQUIRE(f.meet(g) + f.join(g) == f + g);
  }
}

TEST_CASE("embedding of algebra elements", "[lattice]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const LatticeElement g1 = embed_phi(gens[0]);
  REQUIRE(g1.valuation() == std::vector<Rational>{Rational(0), Rational(1),
                                                  Rational(0), Rational(1)});
  REQUIRE(embed_phi(algebra.bottom()).is_zero());

  // Injectivity and lattice-operation preservation, exhaustively on 4 atoms.
  std::vector<BaElement> all;
  for (std::size_t mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    all.push_back(algebra.element(idx));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      REQUIRE((embed_phi(a) == embed_phi(b)) == (a == b));
      REQUIRE(embed_phi(a.meet(b)) == embed_phi(a).meet(embed_phi(b)));
      REQUIRE(embed_phi(a.join(b)) == embed_phi(a).join(embed_phi(b)));
      REQUIRE(embed_phi(a).leq(embed_phi(b)) == a.leq(b));
    }
}

TEST_CASE("strong unit bound", "[lattice]") {
  BooleanAlgebra a4(4);
  const LatticeElement f(
      a4, {Rational(3), Rational(-2), Rational(7, 2), Rational(0)});
  REQUIRE(strong_unit_bound(f) == Integer(4));
  REQUIRE(strong_unit_bound(LatticeElement::zero(a4)) == Integer(0));

  RandomSource rng(1111);
  for (int round = 0; round < 100; ++round) {
    BooleanAlgebra algebra(1 + rng.index(6));
    const LatticeElement g = rng.lattice_element(algebra);
    const Integer n = strong_unit_bound(g);
    const LatticeElement unit = embed_phi(algebra.top());
    REQUIRE(g.abs().leq(unit.scaled(Rational(n))));
    if (n > 0) {
      // minimality: n-1 copies of the unit do not dominate
      REQUIRE(!g.abs().leq(unit.scaled(Rational(n - 1))));
    }
  }
}

TEST_CASE("common disjoint representation of a known pair", "[lattice]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const FormalSum f = FormalSum::term(gens[0], Rational(2));
  const FormalSum g = FormalSum::term(gens[0].meet(gens[1]), Rational(-1)) +
                      FormalSum::term(gens[1], Rational(3));

  // the family partitions top: three support blocks plus the outside block
  const DisjointRepresentation rep = common_disjoint_representation({f, g});
  REQUIRE(rep.family.size() == 4);
  REQUIRE(rep.coefficients.size() == 2);
  REQUIRE(equivalent(rep.reconstruct(0), f));
  REQUIRE(equivalent(rep.reconstruct(1), g));
  for (const auto& row : rep.coefficients)
    REQUIRE(row.size() == rep.family.size());
}

TEST_CASE("common disjoint representation properties", "[lattice]") {
  RandomSource rng(1212);
  for (int round = 0; round < 120; ++round) {
    auto [algebra, gens] = free_boolean_algebra(1 + rng.index(3));
    std::vector<FormalSum> inputs;
    const std::size_t count = 1 + rng.index(3);
    for (std::size_t k = 0; k < count; ++k)
      inputs.push_back(rng.formal_sum(algebra, 4));

    const DisjointRepresentation rep = common_disjoint_representation(inputs);
    for (std::size_t i = 0; i < rep.family.size(); ++i)
      for (std::size_t j = i + 1; j < rep.family.size(); ++j)
        REQUIRE(rep.family.member(i).disjoint_with(rep.family.member(j)));
    for (std::size_t k = 0; k < inputs.size(); ++k)
      REQUIRE(equivalent(rep.reconstruct(k), inputs[k]));
  }
}

TEST_CASE("common disjoint representation of all-zero input", "[lattice]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const DisjointRepresentation rep =
      common_disjoint_representation({FormalSum(algebra)});
  REQUIRE(rep.family.size() == 0);
  REQUIRE(rep.reconstruct(0).is_zero());
  REQUIRE_THROWS_AS(common_disjoint_representation({}), DomainError);
}

TEST_CASE("positive part supremum on knowns", "[lattice]") {
  BooleanAlgebra a4(4);
  const LatticeElement f(
      a4, {Rational(5), Rational(2), Rational(1), Rational(0)});
  const LatticeElement h(
      a4, {Rational(0), Rational(1), Rational(1), Rational(2)});

  const LatticeElement sup = ppp_sup(f, h);
  REQUIRE(sup.valuation() == std::vector<Rational>{Rational(0), Rational(2),
                                                   Rational(1), Rational(0)});
  REQUIRE(ppp_stabilization_bound(f, h) == Integer(5));
  REQUIRE_THROWS_AS(ppp_sup(f, -h), DomainError);
  REQUIRE_THROWS_AS(ppp_sup(-f, h), DomainError);
}

TEST_CASE("supremum of f against the zero divisor", "[lattice]") {
  BooleanAlgebra a2(2);
  const LatticeElement f(a2, {Rational(3), Rational(4)});
  const LatticeElement zero = LatticeElement::zero(a2);
  REQUIRE(ppp_sup(f, zero) == zero);
  REQUIRE(ppp_stabilization_bound(f, zero) == Integer(0));
  REQUIRE(ppp_sup(zero, f) == zero);
}

TEST_CASE("supremum agrees with the brute-force oracle", "[lattice]") {
  RandomSource rng(1313);
  for (int round = 0; round < 200; ++round) {
    BooleanAlgebra algebra(1 + rng.index(6));
    const LatticeElement f = rng.positive_lattice_element(algebra);
    const LatticeElement h = rng.positive_lattice_element(algebra);

    const LatticeElement sup = ppp_sup(f, h);
    const auto oracle = test::oracle_ppp_sup(f, h);
    REQUIRE(sup == oracle.first);

    const Integer bound = ppp_stabilization_bound(f, h);
    REQUIRE(Integer(oracle.second) <= std::max(bound, Integer(1)));

    // the sequence is below the supremum throughout and reaches it at the
    // stabilization bound
    REQUIRE(f.meet(h.scaled(Rational(bound))) == sup);
    for (int n = 0; n <= 4; ++n)
      REQUIRE(f.meet(h.scaled(Rational(n))).leq(sup));
  }
}

TEST_CASE("supremum is least among sampled upper bounds", "[lattice]") {
  RandomSource rng(1414);
  for (int round = 0; round < 60; ++round) {
    BooleanAlgebra algebra(1 + rng.index(5));
    const LatticeElement f = rng.positive_lattice_element(algebra);
    const LatticeElement h = rng.positive_lattice_element(algebra);
    const LatticeElement sup = ppp_sup(f, h);
    const Integer bound = ppp_stabilization_bound(f, h);
    if (Integer(6) < bound) continue;
    for (int trial = 0; trial < 40; ++trial) {
      const LatticeElement u = rng.lattice_element(algebra);
      bool bounds_all = true;
      for (int n = 0; n <= 6 && bounds_all; ++n)
        bounds_all = f.meet(h.scaled(Rational(n))).leq(u);
      // the sequence is constant past the bound, so a bound of the first
      // terms bounds the whole sequence and must dominate the supremum
      if (bounds_all) REQUIRE(sup.leq(u));
    }
  }
}
