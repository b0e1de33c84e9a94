#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fvlat/boolean_algebra.hpp"
#include "fvlat/config.hpp"
#include "fvlat/formal_sum.hpp"
#include "fvlat/rational.hpp"

namespace fvlat {

/// Which form of the exhaustive membership condition to evaluate. The
/// simplified form asks, below every nonzero a, for a nonzero b whose
/// dominating coefficients sum to something nonnegative; the original
/// form additionally requires that sum to be nonnegative below every
/// nonzero c under b. Both agree with the per-atom test; keeping them
/// separate lets the agreement itself be checked.
enum class QuantifierForm { simplified, original };

/// Coefficient sum over the terms of e that dominate the given atom:
/// the canonical valuation of e at that atom.
inline Rational atom_coefficient_sum(const FormalSum& e, std::size_t atom) {
  e.algebra().require_atom(atom);
  Rational sum = 0;
  for (const auto& [element, coeff] : e.terms())
    if (element.atoms().test(atom)) sum += coeff;
  return sum;
}

/// First atom whose coefficient sum is negative, or nullopt when e lies
/// in the positive cone.
inline std::optional<std::size_t> cone_negative_witness(const FormalSum& e) {
  const std::size_t n = e.algebra().atom_count();
  for (std::size_t i = 0; i < n; ++i)
    if (atom_coefficient_sum(e, i) < 0) return i;
  return std::nullopt;
}

/// Per-atom membership test: e lies in the positive cone exactly when
/// every atom sees a nonnegative coefficient sum.
inline bool cone_contains_atoms(const FormalSum& e) {
  return !cone_negative_witness(e).has_value();
}

/// Exhaustive membership test straight from the quantifier definition.
/// Cost grows exponentially with the atom count, hence the cap.
inline bool cone_contains_quantifier(const FormalSum& e,
                                     QuantifierForm form = QuantifierForm::simplified,
                                     const Limits& limits = {}) {
  const std::size_t n = e.algebra().atom_count();
  if (n > limits.quantifier_max_atoms)
    throw SizeError("quantifier membership test is capped at " +
                    std::to_string(limits.quantifier_max_atoms) +
                    " atoms; use the per-atom test instead");

  struct TermMaskCoeff {
    unsigned long long mask;
    Rational coeff;
  };
  std::vector<TermMaskCoeff> terms;
  terms.reserve(e.term_count());
  for (const auto& [element, coeff] : e.terms())
    terms.push_back({element.mask(), coeff});

  const unsigned long long full = (n == 64) ? ~0ull : (1ull << n) - 1;

  // S[b]: coefficient sum over terms whose element dominates mask b.
  std::vector<Rational> dominating(full + 1);
  for (unsigned long long b = 1; b <= full; ++b) {
    Rational sum = 0;
    for (const auto& t : terms)
      if ((b & t.mask) == b) sum += t.coeff;
    dominating[b] = std::move(sum);
  }

  if (form == QuantifierForm::simplified) {
    for (unsigned long long a = 1; a <= full; ++a) {
      bool found = false;
      for (unsigned long long b = a; b != 0; b = (b - 1) & a) {
        if (dominating[b] >= 0) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  // hereditary[b]: every nonzero c below b has a nonnegative sum. A proper
  // nonzero subset of b misses at least one bit of b, so checking b itself
  // plus all single-bit removals covers everything.
  std::vector<bool> hereditary(full + 1, false);
  for (unsigned long long b = 1; b <= full; ++b) {
    bool ok = dominating[b] >= 0;
    for (unsigned long long bits = b; ok && bits != 0; bits &= bits - 1) {
      const unsigned long long removed = b & ~(bits & (~bits + 1));
      if (removed != 0 && !hereditary[removed]) ok = false;
    }
    hereditary[b] = ok;
  }
  for (unsigned long long a = 1; a <= full; ++a) {
    bool found = false;
    for (unsigned long long b = a; b != 0; b = (b - 1) & a) {
      if (hereditary[b]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// One generator of the positive cone, tagged by shape:
///  - single: weight * (1 * element), weight >= 0
///  - merge:  weight * (1 * element - sum of 1 * part), parts disjoint
///            with join equal to element
///  - split:  the negation of a merge generator
struct CertificateTerm {
  enum class Kind { single, merge, split };

  Kind kind;
  BaElement element;
  std::vector<BaElement> parts;  // empty for single
  Rational weight;               // nonnegative

  /// The unweighted generator as a formal sum.
  FormalSum generator() const {
    FormalSum g = FormalSum::term(element, Rational(1));
    for (const auto& part : parts) g = g - FormalSum::term(part, Rational(1));
    if (kind == Kind::split) g = -g;
    return g;
  }

  FormalSum weighted() const { return weight * generator(); }
};

/// A nonnegative combination of cone generators that reconstructs a
/// member exactly, term by term.
class ConeCertificate {
public:
  ConeCertificate(BooleanAlgebra algebra, std::vector<CertificateTerm> terms)
      : algebra_(std::move(algebra)), terms_(std::move(terms)) {}

  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<CertificateTerm>& terms() const { return terms_; }

  FormalSum reconstruct() const {
    FormalSum total(algebra_);
    for (const auto& term : terms_) total = total + term.weighted();
    return total;
  }

private:
  BooleanAlgebra algebra_;
  std::vector<CertificateTerm> terms_;
};

/// Decomposes a cone member over the disjoint refinement of its support:
/// each term alpha * a becomes a merge (alpha > 0) or split (alpha < 0)
/// generator rewriting a into its refinement parts, and what remains is a
/// nonnegative combination of the refinement members themselves. Terms
/// that degenerate to zero are omitted.
///
/// Throws MembershipError carrying a witness atom when e is not a member.
inline ConeCertificate cone_certificate(const FormalSum& e) {
  if (auto witness = cone_negative_witness(e)) {
    throw MembershipError(
        "formal sum is not a cone member: atom " + std::to_string(*witness) +
            " has coefficient sum " +
            rational_to_string(atom_coefficient_sum(e, *witness)),
        *witness);
  }
  if (e.is_zero()) return ConeCertificate(e.algebra(), {});

  const DisjointFamily family = disjoint_refinement(e.support());

  std::vector<CertificateTerm> terms;
  for (const auto& [element, coeff] : e.terms()) {
    std::vector<BaElement> parts;
    for (const auto& member : family.members())
      if (member.leq(element)) parts.push_back(member);
    if (parts.size() == 1) continue;  // the element is its own refinement
    terms.push_back(CertificateTerm{coeff > 0 ? CertificateTerm::Kind::merge
                                              : CertificateTerm::Kind::split,
                                    element, std::move(parts),
                                    abs_rational(coeff)});
  }

  for (const auto& member : family.members()) {
    Rational weight = 0;
    for (const auto& [element, coeff] : e.terms())
      if (member.leq(element)) weight += coeff;
    if (weight != 0)
      terms.push_back(CertificateTerm{CertificateTerm::Kind::single, member,
                                      {}, std::move(weight)});
  }

  return ConeCertificate(e.algebra(), std::move(terms));
}

}  // namespace fvlat
