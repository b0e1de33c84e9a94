#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/lattice.hpp"
#include "fvlat/linalg.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

struct RingLatticeReport {
  std::size_t dimension = 0;
  /// The embedding commutes with the algebra inclusion on every ring
  /// member, so the image is exactly the span of the embedded ring.
  bool inclusion_commutes = false;
  bool injective = false;
  /// Lattice operations commute with the embedding: exhaustive over the
  /// embedded ring members, sampled over general lattice elements.
  bool lattice_hom = false;
  /// Suprema of f ∧ n*h computed inside the ring lattice match the ones
  /// computed in the host, on sampled positive pairs.
  bool ppp_consistent = false;
  std::size_t sampled_pairs = 0;

  bool all_ok() const {
    return inclusion_commutes && injective && lattice_hom && ppp_consistent;
  }
};

/// The vector lattice built on a Boolean ring in its own right, with the
/// embedding into the lattice of the host algebra. The ring atoms (its
/// minimal nonzero members) become the atoms of a fresh algebra.
class RingLattice {
public:
  const BooleanRing& ring() const { return ring_; }
  const BooleanAlgebra& ring_algebra() const { return ring_algebra_; }
  const std::vector<BaElement>& ring_atoms() const { return ring_atoms_; }
  const RingLatticeReport& report() const { return report_; }

  /// Ring member -> element of the ring algebra (the set of ring atoms
  /// below it). Rejects host elements outside the ring.
  BaElement ring_element_of(const BaElement& host_member) const {
    if (!ring_.contains(host_member))
      throw DomainError("element " + host_member.describe() +
                        " is not a ring member");
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < ring_atoms_.size(); ++i)
      if (ring_atoms_[i].leq(host_member)) indices.push_back(i);
    return ring_algebra_.element(indices);
  }

  /// Ring algebra element -> the ring member it denotes in the host.
  BaElement host_element_of(const BaElement& ring_element) const {
    if (!ring_element.algebra().same_as(ring_algebra_))
      throw DomainError("expected an element of the ring algebra");
    BaElement out = ring_.algebra().bottom();
    for (auto i : ring_element.atom_indices()) out = out.join(ring_atoms_[i]);
    return out;
  }

  /// The lattice embedding: spreads the value at each ring atom across
  /// the host atoms of that block.
  LatticeElement to_host(const LatticeElement& x) const {
    if (!x.algebra().same_as(ring_algebra_))
      throw DomainError("expected an element of the ring lattice");
    std::vector<Rational> valuation(ring_.algebra().atom_count(), 0);
    for (std::size_t i = 0; i < ring_atoms_.size(); ++i) {
      const Rational& v = x.value_at(i);
      if (v == 0) continue;
      for (auto a : ring_atoms_[i].atom_indices()) valuation[a] = v;
    }
    return LatticeElement(ring_.algebra(), std::move(valuation));
  }

private:
  RingLattice(BooleanRing ring, BooleanAlgebra ring_algebra,
              std::vector<BaElement> ring_atoms)
      : ring_(std::move(ring)),
        ring_algebra_(std::move(ring_algebra)),
        ring_atoms_(std::move(ring_atoms)) {}

  BooleanRing ring_;
  BooleanAlgebra ring_algebra_;
  std::vector<BaElement> ring_atoms_;
  RingLatticeReport report_;

  friend RingLattice ring_lattice(const BooleanRing&, std::size_t,
                                  std::uint64_t);
};

/// Builds the lattice of a validated ring and verifies the embedding:
/// commutation with the inclusion (exhaustive), injectivity (exact rank),
/// the lattice homomorphism laws and supremum consistency (exhaustive on
/// ring members, sampled beyond). Rejects the trivial ring, whose lattice
/// would have no atoms.
inline RingLattice ring_lattice(const BooleanRing& ring,
                                std::size_t samples = 25,
                                std::uint64_t seed = 20260817u) {
  std::vector<BaElement> atoms = ring.minimal_nonzero();
  if (atoms.empty())
    throw DomainError(
        "the trivial ring has no nonzero members and no lattice");

  BooleanAlgebra ring_algebra(atoms.size());
  RingLattice out(ring, std::move(ring_algebra), std::move(atoms));
  RingLatticeReport report;
  report.dimension = out.ring_atoms().size();

  report.inclusion_commutes = true;
  for (const auto& r : ring.members()) {
    const BaElement inside = out.ring_element_of(r);
    if (out.host_element_of(inside) != r ||
        out.to_host(embed_phi(inside)) != embed_phi(r)) {
      report.inclusion_commutes = false;
      break;
    }
  }

  {
    std::vector<std::vector<Rational>> images;
    images.reserve(report.dimension);
    for (std::size_t i = 0; i < report.dimension; ++i)
      images.push_back(
          out.to_host(embed_phi(out.ring_algebra().atom(i))).valuation());
    report.injective = matrix_rank(images) == report.dimension;
  }

  report.lattice_hom = true;
  for (const auto& r : ring.members()) {
    for (const auto& s : ring.members()) {
      const LatticeElement x = embed_phi(out.ring_element_of(r));
      const LatticeElement y = embed_phi(out.ring_element_of(s));
      if (out.to_host(x.meet(y)) != out.to_host(x).meet(out.to_host(y)) ||
          out.to_host(x.join(y)) != out.to_host(x).join(out.to_host(y))) {
        report.lattice_hom = false;
        break;
      }
    }
    if (!report.lattice_hom) break;
  }

  std::mt19937_64 rng(seed);
  const auto random_value = [&rng]() {
    const auto num = static_cast<long long>(rng() % 21) - 10;
    const auto den = static_cast<long long>(rng() % 4) + 1;
    return Rational(num, den);
  };
  const auto random_element = [&]() {
    std::vector<Rational> v(report.dimension);
    for (auto& x : v) x = random_value();
    return LatticeElement(out.ring_algebra(), std::move(v));
  };

  report.ppp_consistent = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const LatticeElement x = random_element();
    const LatticeElement y = random_element();
    if (out.to_host(x.meet(y)) != out.to_host(x).meet(out.to_host(y)) ||
        out.to_host(x.join(y)) != out.to_host(x).join(out.to_host(y)) ||
        out.to_host(x.abs()) != out.to_host(x).abs())
      report.lattice_hom = false;
    const LatticeElement f = x.abs();
    const LatticeElement h = y.abs();
    if (out.to_host(ppp_sup(f, h)) != ppp_sup(out.to_host(f), out.to_host(h)))
      report.ppp_consistent = false;
  }
  report.sampled_pairs = samples;

  out.report_ = report;
  return out;
}

}  // namespace fvlat
