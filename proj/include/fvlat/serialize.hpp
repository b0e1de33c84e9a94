#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/cone.hpp"
#include "fvlat/config.hpp"
#include "fvlat/formal_sum.hpp"
#include "fvlat/hom.hpp"
#include "fvlat/lattice.hpp"
#include "fvlat/rational.hpp"
#include "fvlat/riesz.hpp"
#include "fvlat/stone.hpp"

namespace fvlat {

using Json = nlohmann::ordered_json;

/// True for any integer-valued entry that is not negative, regardless of
/// whether the parser stored it signed or unsigned.
inline bool json_is_nonnegative_integer(const Json& entry) {
  return entry.is_number_unsigned() ||
         (entry.is_number_integer() && entry.get<long long>() >= 0);
}

inline Json algebra_to_json(const BooleanAlgebra& algebra) {
  Json out;
  out["atoms"] = algebra.atom_count();
  out["generators"] = algebra.generator_labels();
  return out;
}

inline Json element_to_json(const BaElement& element) {
  return Json(element.atom_indices());
}

inline BaElement element_from_json(const Json& j,
                                   const BooleanAlgebra& algebra) {
  if (!j.is_array())
    throw DomainError("an element must be an array of atom indices");
  std::vector<std::size_t> indices;
  for (const auto& entry : j) {
    if (!json_is_nonnegative_integer(entry))
      throw DomainError("atom indices must be nonnegative integers");
    indices.push_back(entry.get<std::size_t>());
  }
  return algebra.element(indices);
}

inline Json formal_sum_to_json(const FormalSum& e) {
  Json out = Json::array();
  for (const auto& [element, coeff] : e.terms()) {
    Json term;
    term["coeff"] = rational_to_string(coeff);
    term["element"] = element_to_json(element);
    out.push_back(std::move(term));
  }
  return out;
}

inline FormalSum formal_sum_from_json(const Json& j,
                                      const BooleanAlgebra& algebra) {
  if (!j.is_array()) throw DomainError("a formal sum must be an array of terms");
  std::vector<std::pair<BaElement, Rational>> terms;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") ||
        !term.contains("element"))
      throw DomainError("each term needs 'coeff' and 'element'");
    terms.emplace_back(element_from_json(term["element"], algebra),
                       rational_from_string(term["coeff"].get<std::string>()));
  }
  return FormalSum(algebra, terms);
}

inline Json lattice_element_to_json(const LatticeElement& f) {
  Json valuation = Json::array();
  for (const auto& v : f.valuation()) valuation.push_back(rational_to_string(v));
  Json out;
  out["valuation"] = std::move(valuation);
  return out;
}

inline LatticeElement lattice_element_from_json(const Json& j,
                                                const BooleanAlgebra& algebra) {
  if (!j.is_object() || !j.contains("valuation") || !j["valuation"].is_array())
    throw DomainError("a lattice element needs a 'valuation' array");
  std::vector<Rational> valuation;
  for (const auto& entry : j["valuation"])
    valuation.push_back(rational_from_string(entry.get<std::string>()));
  return LatticeElement(algebra, std::move(valuation));
}

inline Json certificate_to_json(const ConeCertificate& certificate) {
  Json out = Json::array();
  for (const auto& term : certificate.terms()) {
    Json entry;
    switch (term.kind) {
      case CertificateTerm::Kind::single: entry["kind"] = "single"; break;
      case CertificateTerm::Kind::merge: entry["kind"] = "merge"; break;
      case CertificateTerm::Kind::split: entry["kind"] = "split"; break;
    }
    entry["element"] = element_to_json(term.element);
    if (!term.parts.empty()) {
      Json parts = Json::array();
      for (const auto& part : term.parts) parts.push_back(element_to_json(part));
      entry["parts"] = std::move(parts);
    }
    entry["weight"] = rational_to_string(term.weight);
    out.push_back(std::move(entry));
  }
  return out;
}

/// Point-keyed map: {"0": "1/2", "1": "0", ...} with every point present.
inline Json point_map_to_json(const std::vector<Rational>& values) {
  Json out;
  for (std::size_t p = 0; p < values.size(); ++p)
    out[std::to_string(p)] = rational_to_string(values[p]);
  return out;
}

inline std::vector<Rational> point_map_from_json(const Json& j) {
  if (!j.is_object() || j.empty())
    throw DomainError("expected a nonempty object keyed by point index");
  const std::size_t points = j.size();
  std::vector<Rational> values(points, 0);
  std::vector<bool> seen(points, false);
  for (const auto& [key, value] : j.items()) {
    std::size_t point = 0;
    try {
      std::size_t used = 0;
      point = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError("point key '" + key + "' is not an index");
    }
    if (point >= points)
      throw DomainError("point keys must cover exactly 0.." +
                        std::to_string(points - 1) + "; got '" + key + "'");
    seen[point] = true;
    values[point] = rational_from_string(value.get<std::string>());
  }
  for (std::size_t p = 0; p < points; ++p)
    if (!seen[p])
      throw DomainError("point " + std::to_string(p) + " is missing");
  return values;
}

inline Json simple_function_to_json(const SimpleFunction& f) {
  return point_map_to_json(f.values());
}
inline SimpleFunction simple_function_from_json(const Json& j) {
  auto values = point_map_from_json(j);
  const std::size_t n = values.size();
  return SimpleFunction(n, std::move(values));
}

inline Json functional_to_json(const FiniteFunctional& xi) {
  return point_map_to_json(xi.weights());
}
inline FiniteFunctional functional_from_json(const Json& j) {
  auto weights = point_map_from_json(j);
  const std::size_t n = weights.size();
  return FiniteFunctional(n, std::move(weights));
}

inline Json measure_to_json(const FiniteMeasure& mu) {
  return point_map_to_json(mu.masses());
}
inline FiniteMeasure measure_from_json(const Json& j) {
  auto masses = point_map_from_json(j);
  const std::size_t n = masses.size();
  return FiniteMeasure(n, std::move(masses));
}

/// {"dimension": m, "values": [{"element": [...], "vector": ["p/q", ...]}]}
/// listing every algebra element exactly once.
inline ElementMap element_map_from_json(const Json& j,
                                        const BooleanAlgebra& algebra) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("values"))
    throw DomainError("an element map needs 'dimension' and 'values'");
  if (!json_is_nonnegative_integer(j["dimension"]))
    throw DomainError("'dimension' must be a positive integer");
  const OrderedTarget target(j["dimension"].get<std::size_t>());
  if (!j["values"].is_array())
    throw DomainError("'values' must be an array");
  std::vector<std::pair<BaElement, TargetVector>> values;
  for (const auto& entry : j["values"]) {
    if (!entry.is_object() || !entry.contains("element") ||
        !entry.contains("vector"))
      throw DomainError("each value needs 'element' and 'vector'");
    TargetVector vec;
    for (const auto& coordinate : entry["vector"])
      vec.push_back(rational_from_string(coordinate.get<std::string>()));
    values.emplace_back(element_from_json(entry["element"], algebra),
                        std::move(vec));
  }
  return ElementMap::from_values(algebra, target, values);
}

inline Json element_map_to_json(const ElementMap& psi) {
  Json values = Json::array();
  const std::size_t n = psi.algebra().atom_count();
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) indices.push_back(i);
    Json entry;
    entry["element"] = Json(indices);
    Json vec = Json::array();
    for (const auto& v : psi.value_at_mask(mask))
      vec.push_back(rational_to_string(v));
    entry["vector"] = std::move(vec);
    values.push_back(std::move(entry));
  }
  Json out;
  out["dimension"] = psi.dimension();
  out["values"] = std::move(values);
  return out;
}

inline Json stone_to_json(const StoneSpace& space) {
  Json points = Json::array();
  for (std::size_t p = 0; p < space.point_count(); ++p) {
    Json point;
    point["index"] = p;
    point["label"] = space.point_label(p);
    points.push_back(std::move(point));
  }
  Json clopens;
  const BooleanAlgebra& algebra = space.source();
  for (std::size_t g = 0; g < algebra.generator_count(); ++g)
    clopens[algebra.generator_labels()[g]] =
        Json(space.clopen_of(algebra.generator(g)));
  Json out;
  out["atoms"] = space.point_count();
  out["points"] = std::move(points);
  out["generator_clopens"] = std::move(clopens);
  return out;
}

/// Graphviz export: the points of the space, and for small algebras the
/// Hasse diagram of the clopen sets (cover edges pointing upward).
inline std::string stone_to_dot(const StoneSpace& space,
                                const Limits& limits = {}) {
  const BooleanAlgebra& algebra = space.source();
  const std::size_t n = space.point_count();
  std::string out;
  out += "digraph stone {\n";
  out += "  rankdir=BT;\n";
  out += "  subgraph cluster_points {\n";
  out += "    label=\"points\";\n";
  out += "    node [shape=circle];\n";
  for (std::size_t p = 0; p < n; ++p) {
    std::string annotation;
    for (std::size_t g = 0; g < algebra.generator_count(); ++g) {
      if (algebra.generator(g).contains_atom(p)) {
        if (!annotation.empty()) annotation += ",";
        annotation += algebra.generator_labels()[g];
      }
    }
    out += "    p" + std::to_string(p) + " [label=\"p" + std::to_string(p) +
           " [" + space.point_label(p) + "]";
    if (!annotation.empty()) out += " in " + annotation;
    out += "\"];\n";
  }
  out += "  }\n";

  if (n <= limits.quantifier_max_atoms) {
    const std::size_t total = std::size_t{1} << n;
    out += "  subgraph cluster_clopens {\n";
    out += "    label=\"clopen sets\";\n";
    out += "    node [shape=box];\n";
    for (std::size_t mask = 0; mask < total; ++mask) {
      std::string label = "{";
      bool first = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!first) label += ",";
        label += std::to_string(i);
        first = false;
      }
      label += "}";
      out += "    e" + std::to_string(mask) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t mask = 0; mask < total; ++mask)
      for (std::size_t i = 0; i < n; ++i)
        if (!((mask >> i) & 1u))
          out += "    e" + std::to_string(mask) + " -> e" +
                 std::to_string(mask | (std::size_t{1} << i)) + ";\n";
    out += "  }\n";
  } else {
    out += "  // clopen lattice omitted: " + std::to_string(n) +
           " atoms exceed the cap of " +
           std::to_string(limits.quantifier_max_atoms) + "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace fvlat
