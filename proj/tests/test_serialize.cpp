#include <catch2/catch_amalgamated.hpp>

#include "fvlat/fvlat.hpp"
#include "support/generators.hpp"

using namespace fvlat;
using test::RandomSource;

TEST_CASE("algebra and element encoding", "[serialize]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const Json a = algebra_to_json(algebra);
  REQUIRE(a["atoms"] == 4);
  REQUIRE(a["generators"] == Json::array({"g1", "g2"}));

  REQUIRE(element_to_json(gens[0]) == Json::array({1, 3}));
  REQUIRE(element_from_json(Json::array({1, 3}), algebra) == gens[0]);
  REQUIRE(element_from_json(Json::array({}), algebra) == algebra.bottom());
  REQUIRE_THROWS_AS(element_from_json(Json::array({9}), algebra), DomainError);
}

TEST_CASE("formal sum round trip", "[serialize]") {
  RandomSource rng(3232);
  for (int round = 0; round < 100; ++round) {
    auto [algebra, gens] = free_boolean_algebra(1 + rng.index(3));
    const FormalSum f = rng.formal_sum(algebra, 4);
    REQUIRE(formal_sum_from_json(formal_sum_to_json(f), algebra) == f);
  }
}

TEST_CASE("lattice element round trip", "[serialize]") {
  BooleanAlgebra a4(4);
  const LatticeElement f(
      a4, {Rational(0), Rational(1), Rational(1), Rational(2)});
  const Json j = lattice_element_to_json(f);
  REQUIRE(j["valuation"] == Json::array({"0", "1", "1", "2"}));
  REQUIRE(lattice_element_from_json(j, a4) == f);
  BooleanAlgebra a3(3);
  REQUIRE_THROWS_AS(lattice_element_from_json(j, a3), DomainError);
}

TEST_CASE("certificate encoding names kinds", "[serialize]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const FormalSum f = FormalSum::term(gens[0], Rational(2)) +
                      FormalSum::term(gens[0].meet(gens[1]), Rational(-1));
  const Json j = certificate_to_json(cone_certificate(f));
  REQUIRE(j.is_array());
  bool saw_merge = false;
  bool saw_single = false;
  for (const auto& term : j) {
    if (term["kind"] == "merge") {
      saw_merge = true;
      REQUIRE(term.contains("parts"));
    }
    if (term["kind"] == "single") {
      saw_single = true;
      REQUIRE(!term.contains("parts"));
    }
    REQUIRE(term.contains("weight"));
  }
  REQUIRE(saw_merge);
  REQUIRE(saw_single);

  // a negative coefficient on a decomposable element encodes as a split
  const FormalSum s =
      FormalSum::term(gens[0], Rational(-1)) +
      FormalSum::term(gens[0].meet(gens[1]), Rational(2)) +
      FormalSum::term(gens[0].meet(gens[1].complement()), Rational(2));
  bool saw_split = false;
  for (const auto& term : certificate_to_json(cone_certificate(s)))
    if (term["kind"] == "split") {
      saw_split = true;
      REQUIRE(term.contains("parts"));
    }
  REQUIRE(saw_split);
}

TEST_CASE("point map coverage validation", "[serialize]") {
  const Json good = {{"0", "1/2"}, {"1", "-3"}};
  const auto values = point_map_from_json(good);
  REQUIRE(values == std::vector<Rational>{Rational(1, 2), Rational(-3)});

  REQUIRE_THROWS_AS(point_map_from_json(Json{{"0", "1"}, {"2", "1"}}),
                    DomainError);
  REQUIRE_THROWS_AS(point_map_from_json(Json::object()), DomainError);
  REQUIRE_THROWS_AS(point_map_from_json(Json{{"x", "1"}}), DomainError);
}

TEST_CASE("simple function, functional, and measure round trips",
          "[serialize]") {
  RandomSource rng(3333);
  for (int round = 0; round < 100; ++round) {
    const std::size_t points = 1 + rng.index(6);
    const SimpleFunction f = rng.simple_function(points);
    REQUIRE(simple_function_from_json(simple_function_to_json(f)) == f);

    std::vector<Rational> weights;
    for (std::size_t p = 0; p < points; ++p)
      weights.push_back(rng.positive_rational(3, 4));
    const FiniteFunctional phi(points, weights);
    REQUIRE(functional_from_json(functional_to_json(phi)) == phi);
    const FiniteMeasure mu = functional_to_measure(phi);
    REQUIRE(measure_from_json(measure_to_json(mu)).masses() == mu.masses());
  }
}

TEST_CASE("rational strings are strict", "[serialize]") {
  REQUIRE(rational_from_string("3/4") == Rational(3, 4));
  REQUIRE(rational_from_string("-7") == Rational(-7));
  REQUIRE(rational_to_string(Rational(-8, 6)) == "-4/3");
  REQUIRE(rational_to_string(Rational(5)) == "5");
  REQUIRE_THROWS_AS(rational_from_string("1/0"), DomainError);
  REQUIRE_THROWS_AS(rational_from_string("1.5"), DomainError);
  REQUIRE_THROWS_AS(rational_from_string(""), DomainError);
  REQUIRE_THROWS_AS(rational_from_string("2/"), DomainError);
  REQUIRE_THROWS_AS(rational_from_string(" 2"), DomainError);
}

TEST_CASE("element map round trip", "[serialize]") {
  RandomSource rng(3434);
  for (int round = 0; round < 40; ++round) {
    BooleanAlgebra algebra(1 + rng.index(3));
    const std::size_t dim = algebra.atom_count() + rng.index(2);
    const ElementMap psi = rng.block_element_map(algebra, dim, rng.chance(50));
    const Json j = element_map_to_json(psi);
    const ElementMap back = element_map_from_json(j, algebra);
    for (std::size_t mask = 0; mask < (std::size_t{1} << algebra.atom_count());
         ++mask)
      REQUIRE(back.value_at_mask(mask) == psi.value_at_mask(mask));
  }
}

TEST_CASE("element map decoding validates totality", "[serialize]") {
  BooleanAlgebra algebra(1);
  Json j;
  j["dimension"] = 1;
  j["values"] = Json::array();
  j["values"].push_back({{"element", Json::array({})},
                         {"vector", Json::array({"0"})}});
  REQUIRE_THROWS_AS(element_map_from_json(j, algebra), DomainError);
  j["values"].push_back({{"element", Json::array({0})},
                         {"vector", Json::array({"2"})}});
  const ElementMap psi = element_map_from_json(j, algebra);
  REQUIRE(psi.value(algebra.top()) == TargetVector{Rational(2)});
}

TEST_CASE("stone space export", "[serialize]") {
  auto [algebra, gens] = free_boolean_algebra(2);
  const StoneSpace space(algebra);
  const Json j = stone_to_json(space);
  REQUIRE(j["points"].size() == 4);
  REQUIRE(j["points"][1]["label"] == "+-");
  REQUIRE(j["generator_clopens"]["g1"] == Json::array({1, 3}));

  const std::string dot = stone_to_dot(space);
  REQUIRE(dot.find("digraph stone") != std::string::npos);
  REQUIRE(dot.find("cluster_points") != std::string::npos);
  REQUIRE(dot.find("cluster_clopens") != std::string::npos);
  REQUIRE(dot.find("e0 -> e1") != std::string::npos);
}

TEST_CASE("stone export omits large Hasse diagrams", "[serialize]") {
  BooleanAlgebra algebra(9);
  const StoneSpace space(algebra);
  const std::string dot = stone_to_dot(space);
  REQUIRE(dot.find("cluster_clopens") == std::string::npos);
  REQUIRE(dot.find("omitted") != std::string::npos);
  REQUIRE(dot.find("p8") != std::string::npos);
}
