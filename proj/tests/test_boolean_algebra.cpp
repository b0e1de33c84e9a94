#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fvlat/fvlat.hpp"
#include "support/generators.hpp"

using namespace fvlat;
using test::RandomSource;

TEST_CASE("free algebra on one generator", "[boolean]") {
  auto [algebra, gens] = free_boolean_algebra(1);
  REQUIRE(algebra.atom_count() == 2);
  REQUIRE(gens.size() == 1);
  REQUIRE(gens[0].atom_indices() == std::vector<std::size_t>{1});
  REQUIRE(gens[0].complement().atom_indices() == std::vector<std::size_t>{0});
  REQUIRE(algebra.generator_labels() == std::vector<std::string>{"g1"});
}

TEST_CASE("free algebra atoms follow sign patterns", "[boolean]") {
  // Oracle: enumerate the sign patterns directly and compare with the
  // generator atom sets.
  for (std::size_t n = 1; n <= 4; ++n) {
    auto [algebra, gens] = free_boolean_algebra(n);
    REQUIRE(algebra.atom_count() == (std::size_t{1} << n));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> expected;
      for (std::size_t i = 0; i < algebra.atom_count(); ++i)
        if ((i >> j) & 1u) expected.push_back(i);
      REQUIRE(gens[j].atom_indices() == expected);
    }
  }
}

TEST_CASE("free algebra size caps", "[boolean]") {
  REQUIRE_THROWS_AS(free_boolean_algebra(0), SizeError);
  REQUIRE_THROWS_AS(free_boolean_algebra(13), SizeError);
  Limits relaxed;
  relaxed.max_generators = 13;
  REQUIRE(free_boolean_algebra(13, relaxed).algebra.atom_count() == 8192);
  REQUIRE(free_boolean_algebra(12).algebra.atom_count() == 4096);
}

TEST_CASE("degenerate algebra is rejected", "[boolean]") {
  REQUIRE_THROWS_AS(BooleanAlgebra(0), DomainError);
  BooleanAlgebra a(3);
  REQUIRE_THROWS_AS(a.atom(3), DomainError);
  REQUIRE_THROWS_AS(a.element({0, 7}), DomainError);
}

TEST_CASE("element operations on the free algebra", "[boolean]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const BaElement g1 = gens[0];
  const BaElement g2 = gens[1];

  REQUIRE(g1.atom_indices() == std::vector<std::size_t>{1, 3});
  REQUIRE(g2.atom_indices() == std::vector<std::size_t>{2, 3});
  REQUIRE(g1.meet(g2).atom_indices() == std::vector<std::size_t>{3});
  REQUIRE(g1.meet(g1.complement()) == algebra.bottom());
  REQUIRE(g1.join(g1.complement()) == algebra.top());
  REQUIRE(g1.diff(g2).atom_indices() == std::vector<std::size_t>{1});
  REQUIRE(g1.leq(g1.join(g2)));
  REQUIRE(!g1.leq(g2));
  REQUIRE(g1.diff(g2).disjoint_with(g2));
  REQUIRE(algebra.bottom().leq(g1));
  REQUIRE(g1.leq(algebra.top()));
}

TEST_CASE("element operations across algebras are rejected", "[boolean]") {
  auto a = free_boolean_algebra(2);
  auto b = free_boolean_algebra(2);
  REQUIRE_THROWS_AS(a.generators[0].meet(b.generators[0]), DomainError);
  REQUIRE_THROWS_AS(a.generators[0].join(b.generators[0]), DomainError);
  REQUIRE_THROWS_AS(a.generators[0].leq(b.generators[0]), DomainError);
  REQUIRE_THROWS_AS(a.generators[0] == b.generators[0], DomainError);
  REQUIRE(!a.algebra.same_as(b.algebra));
}

TEST_CASE("Boolean identities hold on random elements", "[boolean]") {
  RandomSource rng(101);
  BooleanAlgebra algebra(6);
  for (int i = 0; i < 200; ++i) {
    const BaElement a = rng.element(algebra);
    const BaElement b = rng.element(algebra);
    const BaElement c = rng.element(algebra);
    REQUIRE(a.meet(b.join(c)) == a.meet(b).join(a.meet(c)));
    REQUIRE(a.join(b.meet(c)) == a.join(b).meet(a.join(c)));
    REQUIRE(a.meet(b).complement() == a.complement().join(b.complement()));
    REQUIRE(a.join(b).complement() == a.complement().meet(b.complement()));
    REQUIRE(a.diff(b) == a.meet(b.complement()));
  }
}

TEST_CASE("element order is lexicographic on index sequences", "[boolean]") {
  BooleanAlgebra algebra(3);
  std::vector<BaElement> elements = {
      algebra.element({2}),    algebra.element({0}),  algebra.element({0, 2}),
      algebra.element({0, 1}), algebra.element({1}),  algebra.bottom(),
      algebra.element({0, 1, 2}),
  };
  std::sort(elements.begin(), elements.end(), BaElementLess{});
  std::vector<std::vector<std::size_t>> got;
  for (const auto& e : elements) got.push_back(e.atom_indices());
  const std::vector<std::vector<std::size_t>> expected = {
      {}, {0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {2}};
  REQUIRE(got == expected);
}

TEST_CASE("atom labels", "[boolean]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  REQUIRE(algebra.atom_label(0) == "--");
  REQUIRE(algebra.atom_label(1) == "+-");
  REQUIRE(algebra.atom_label(2) == "-+");
  REQUIRE(algebra.atom_label(3) == "++");
  BooleanAlgebra plain(2);
  REQUIRE(plain.atom_label(1) == "a1");
}

TEST_CASE("disjoint refinement of the two generators", "[boolean]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const DisjointFamily family = disjoint_refinement({gens[0], gens[1]});
  REQUIRE(family.size() == 4);
  for (std::size_t i = 0; i < family.size(); ++i)
    REQUIRE(family.member(i).count() == 1);
}

TEST_CASE("disjoint refinement degenerate inputs", "[boolean]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const BaElement a = gens[0];

  SECTION("repeated input") {
    const DisjointFamily family = disjoint_refinement({a, a});
    REQUIRE(family.size() == 2);
    REQUIRE(family.member(0) == a.complement());
    REQUIRE(family.member(1) == a);
  }
  SECTION("complementary inputs") {
    const DisjointFamily family = disjoint_refinement({a, a.complement()});
    REQUIRE(family.size() == 2);
  }
  SECTION("bottom input") {
    const DisjointFamily family = disjoint_refinement({algebra.bottom()});
    REQUIRE(family.size() == 1);
    REQUIRE(family.member(0) == algebra.top());
  }
  SECTION("no inputs") {
    REQUIRE_THROWS_AS(disjoint_refinement({}), DomainError);
  }
  SECTION("mixed algebras") {
    auto other = free_boolean_algebra(2);
    REQUIRE_THROWS_AS(disjoint_refinement({a, other.generators[0]}),
                      DomainError);
  }
}

TEST_CASE("disjoint refinement properties", "[boolean]") {
  RandomSource rng(202);
  for (int round = 0; round < 100; ++round) {
    BooleanAlgebra algebra(2 + rng.index(6));
    std::vector<BaElement> inputs;
    const std::size_t count = 1 + rng.index(4);
    for (std::size_t k = 0; k < count; ++k) inputs.push_back(rng.element(algebra));

    const DisjointFamily family = disjoint_refinement(inputs);

    // members nonzero, sorted, pairwise disjoint
    for (std::size_t i = 0; i < family.size(); ++i) {
      REQUIRE(!family.member(i).is_bottom());
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        REQUIRE(family.member(i).disjoint_with(family.member(j)));
        REQUIRE(family.member(i).compare(family.member(j)) < 0);
      }
    }

    // every input is the join of the members below it, and each member is
    // below or disjoint from each input
    for (const auto& input : inputs) {
      BaElement join = algebra.bottom();
      for (const auto& member : family.members()) {
        const bool below = member.leq(input);
        const bool apart = member.disjoint_with(input);
        REQUIRE((below || apart));
        if (below) join = join.join(member);
      }
      REQUIRE(join == input);
    }
  }
}

TEST_CASE("disjoint family validation", "[boolean]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  REQUIRE_THROWS_AS(DisjointFamily(algebra, {gens[0], gens[1]}), DomainError);
  REQUIRE_THROWS_AS(DisjointFamily(algebra, {algebra.bottom()}), DomainError);
  REQUIRE(DisjointFamily(algebra).size() == 0);
}

TEST_CASE("ring validation accepts closed families", "[boolean][ring]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const BaElement a = gens[0];

  SECTION("full subalgebra on a generator") {
    const BooleanRing ring = validate_ring(
        {algebra.bottom(), a, a.complement(), algebra.top()});
    REQUIRE(ring.size() == 4);
    REQUIRE(ring.contains(a));
    REQUIRE(!ring.contains(gens[1]));
  }
  SECTION("ring without top") {
    const BooleanRing ring = validate_ring({algebra.bottom(), a});
    REQUIRE(ring.size() == 2);
    REQUIRE(ring.minimal_nonzero() == std::vector<BaElement>{a});
  }
  SECTION("duplicates are merged") {
    const BooleanRing ring = validate_ring({algebra.bottom(), a, a});
    REQUIRE(ring.size() == 2);
  }
}

TEST_CASE("ring validation names violations", "[boolean][ring]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const BaElement a = gens[0];
  const BaElement b = gens[1];

  SECTION("missing bottom") {
    try {
      validate_ring({a});
      FAIL("expected a validation error");
    } catch (const ValidationError& err) {
      REQUIRE(err.closure() == "bottom");
    }
  }
  SECTION("missing meet") {
    try {
      validate_ring({algebra.bottom(), a, b});
      FAIL("expected a validation error");
    } catch (const ValidationError& err) {
      REQUIRE(err.closure() == "meet");
      REQUIRE(!err.witness_a().empty());
    }
  }
  SECTION("missing relative complement") {
    try {
      validate_ring({algebra.bottom(), a, b, a.meet(b), a.join(b)});
      FAIL("expected a validation error");
    } catch (const ValidationError& err) {
      REQUIRE(err.closure() == "relative complement");
    }
  }
  SECTION("empty candidate") {
    REQUIRE_THROWS_AS(validate_ring({}), DomainError);
  }
}

TEST_CASE("ring atoms decompose every member", "[boolean][ring]") {
  RandomSource rng(303);
  for (int round = 0; round < 50; ++round) {
    BooleanAlgebra algebra(2 + rng.index(5));
    // Random rings: the sets generated by a few disjoint blocks.
    const auto blocks = rng.disjoint_blocks(algebra, 3);
    std::vector<BaElement> members = {algebra.bottom()};
    for (std::size_t mask = 1; mask < (std::size_t{1} << blocks.size());
         ++mask) {
      BaElement join = algebra.bottom();
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if ((mask >> i) & 1u) join = join.join(blocks[i]);
      members.push_back(join);
    }
    const BooleanRing ring = validate_ring(members);
    const auto atoms = ring.minimal_nonzero();
    REQUIRE(atoms.size() == blocks.size());
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i + 1; j < atoms.size(); ++j)
        REQUIRE(atoms[i].disjoint_with(atoms[j]));
    for (const auto& member : ring.members()) {
      BaElement join = algebra.bottom();
      for (const auto& atom : atoms)
        if (atom.leq(member)) join = join.join(atom);
      REQUIRE(join == member);
    }
  }
}
