#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fvlat/config.hpp"
#include "fvlat/error.hpp"

namespace fvlat {

/// An element of a finite Boolean algebra is a set of atoms.
using AtomSet = boost::dynamic_bitset<>;

class BaElement;
struct FreeBooleanAlgebra;
FreeBooleanAlgebra free_boolean_algebra(std::size_t n,
                                        const Limits& limits = {});

namespace detail {

struct AlgebraData {
  std::size_t atom_count = 0;
  // Present only for algebras built from named generators.
  std::vector<std::string> generator_labels;
  std::vector<AtomSet> generator_sets;
};

}  // namespace detail

/// A finite Boolean algebra, identified with the power set of its atoms.
/// Copies share the underlying data; two handles denote the same algebra
/// exactly when they share it. Operations across distinct algebras are
/// rejected with DomainError.
class BooleanAlgebra {
public:
  /// Algebra with the given number of atoms and no named generators.
  explicit BooleanAlgebra(std::size_t atom_count) {
    if (atom_count == 0)
      throw DomainError("a Boolean algebra needs at least one atom");
    auto data = std::make_shared<detail::AlgebraData>();
    data->atom_count = atom_count;
    data_ = std::move(data);
  }

  std::size_t atom_count() const { return data_->atom_count; }

  std::size_t generator_count() const {
    return data_->generator_labels.size();
  }

  const std::vector<std::string>& generator_labels() const {
    return data_->generator_labels;
  }

  std::optional<std::size_t> generator_index(std::string_view name) const {
    const auto& labels = data_->generator_labels;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return i;
    return std::nullopt;
  }

  inline BaElement bottom() const;
  inline BaElement top() const;
  inline BaElement atom(std::size_t index) const;
  inline BaElement element(const std::vector<std::size_t>& atom_indices) const;
  inline BaElement element_from_atoms(AtomSet atoms) const;
  inline BaElement generator(std::size_t index) const;

  /// Identity, not isomorphism: true only for handles to one algebra.
  bool same_as(const BooleanAlgebra& other) const {
    return data_ == other.data_;
  }

  /// Sign pattern over the generators when the algebra is free ("+-+"),
  /// otherwise "a<index>".
  std::string atom_label(std::size_t index) const {
    require_atom(index);
    const std::size_t g = generator_count();
    if (g == 0) return "a" + std::to_string(index);
    std::string label(g, '-');
    for (std::size_t j = 0; j < g; ++j)
      if ((index >> j) & 1u) label[j] = '+';
    return label;
  }

  void require_atom(std::size_t index) const {
    if (index >= atom_count())
      throw DomainError("atom index " + std::to_string(index) +
                        " out of range for an algebra with " +
                        std::to_string(atom_count()) + " atoms");
  }

private:
  BooleanAlgebra() = default;
  std::shared_ptr<const detail::AlgebraData> data_;

  friend FreeBooleanAlgebra free_boolean_algebra(std::size_t, const Limits&);
};

class BaElement {
public:
  BaElement(BooleanAlgebra algebra, AtomSet atoms)
      : algebra_(std::move(algebra)), atoms_(std::move(atoms)) {
    if (atoms_.size() != algebra_.atom_count())
      throw DomainError("atom set size does not match the algebra");
  }

  const BooleanAlgebra& algebra() const { return algebra_; }
  const AtomSet& atoms() const { return atoms_; }

  bool is_bottom() const { return atoms_.none(); }
  bool is_top() const { return atoms_.all(); }
  std::size_t count() const { return atoms_.count(); }
  bool contains_atom(std::size_t index) const {
    algebra_.require_atom(index);
    return atoms_.test(index);
  }

  std::vector<std::size_t> atom_indices() const {
    std::vector<std::size_t> out;
    out.reserve(atoms_.count());
    for (auto i = atoms_.find_first(); i != AtomSet::npos;
         i = atoms_.find_next(i))
      out.push_back(i);
    return out;
  }

  /// Bitmask form; only valid for algebras with at most 64 atoms.
  unsigned long long mask() const {
    if (algebra_.atom_count() > 64)
      throw SizeError("element mask requires at most 64 atoms");
    unsigned long long m = 0;
    for (auto i = atoms_.find_first(); i != AtomSet::npos;
         i = atoms_.find_next(i))
      m |= 1ull << i;
    return m;
  }

  BaElement meet(const BaElement& other) const {
    require_same(other);
    return BaElement(algebra_, atoms_ & other.atoms_);
  }
  BaElement join(const BaElement& other) const {
    require_same(other);
    return BaElement(algebra_, atoms_ | other.atoms_);
  }
  BaElement complement() const { return BaElement(algebra_, ~atoms_); }
  /// Relative complement: this AND NOT other.
  BaElement diff(const BaElement& other) const {
    require_same(other);
    return BaElement(algebra_, atoms_ - other.atoms_);
  }
  bool leq(const BaElement& other) const {
    require_same(other);
    return atoms_.is_subset_of(other.atoms_);
  }
  bool disjoint_with(const BaElement& other) const {
    require_same(other);
    return !atoms_.intersects(other.atoms_);
  }

  /// Total order: lexicographic on the ascending atom-index sequences.
  /// Used wherever deterministic ordering of elements is needed.
  int compare(const BaElement& other) const {
    require_same(other);
    const AtomSet& a = atoms_;
    const AtomSet& b = other.atoms_;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.test(i) == b.test(i)) continue;
      if (a.test(i)) return b.find_next(i) != AtomSet::npos ? -1 : 1;
      return a.find_next(i) != AtomSet::npos ? 1 : -1;
    }
    return 0;
  }

  bool operator==(const BaElement& other) const { return compare(other) == 0; }
  bool operator!=(const BaElement& other) const { return compare(other) != 0; }

  /// "{0, 2}" or "{}"; handy in diagnostics.
  std::string describe() const {
    std::string out = "{";
    bool first = true;
    for (auto i : atom_indices()) {
      if (!first) out += ", ";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

private:
  BooleanAlgebra algebra_;
  AtomSet atoms_;

  void require_same(const BaElement& other) const {
    if (!algebra_.same_as(other.algebra_))
      throw DomainError("operation between elements of distinct algebras");
  }
};

inline BaElement BooleanAlgebra::bottom() const {
  return BaElement(*this, AtomSet(atom_count()));
}

inline BaElement BooleanAlgebra::top() const {
  AtomSet all(atom_count());
  all.set();
  return BaElement(*this, std::move(all));
}

inline BaElement BooleanAlgebra::atom(std::size_t index) const {
  require_atom(index);
  AtomSet a(atom_count());
  a.set(index);
  return BaElement(*this, std::move(a));
}

inline BaElement BooleanAlgebra::element(
    const std::vector<std::size_t>& atom_indices) const {
  AtomSet a(atom_count());
  for (auto i : atom_indices) {
    require_atom(i);
    a.set(i);
  }
  return BaElement(*this, std::move(a));
}

inline BaElement BooleanAlgebra::element_from_atoms(AtomSet atoms) const {
  return BaElement(*this, std::move(atoms));
}

inline BaElement BooleanAlgebra::generator(std::size_t index) const {
  if (index >= generator_count())
    throw DomainError("generator index out of range");
  return BaElement(*this, data_->generator_sets[index]);
}

struct BaElementLess {
  bool operator()(const BaElement& a, const BaElement& b) const {
    return a.compare(b) < 0;
  }
};

/// The free Boolean algebra on n named generators together with the
/// generator elements. Atom i carries the sign pattern given by the bits
/// of i: generator j contains atom i exactly when bit j of i is set.
struct FreeBooleanAlgebra {
  BooleanAlgebra algebra;
  std::vector<BaElement> generators;
};

inline FreeBooleanAlgebra free_boolean_algebra(std::size_t n,
                                               const Limits& limits) {
  if (n == 0)
    throw SizeError("a free Boolean algebra needs at least one generator");
  if (n > limits.max_generators)
    throw SizeError("generator count " + std::to_string(n) +
                    " exceeds the cap of " +
                    std::to_string(limits.max_generators));
  if (n >= 32) throw SizeError("generator count too large to enumerate atoms");

  const std::size_t atom_count = std::size_t{1} << n;
  auto data = std::make_shared<detail::AlgebraData>();
  data->atom_count = atom_count;
  data->generator_labels.reserve(n);
  data->generator_sets.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    data->generator_labels.push_back("g" + std::to_string(j + 1));
    AtomSet set(atom_count);
    for (std::size_t i = 0; i < atom_count; ++i)
      if ((i >> j) & 1u) set.set(i);
    data->generator_sets.push_back(std::move(set));
  }

  BooleanAlgebra algebra;
  algebra.data_ = std::move(data);
  std::vector<BaElement> generators;
  generators.reserve(n);
  for (std::size_t j = 0; j < n; ++j) generators.push_back(algebra.generator(j));
  return FreeBooleanAlgebra{std::move(algebra), std::move(generators)};
}

/// An ordered list of pairwise disjoint nonzero elements of one algebra,
/// sorted by the element order. May be empty.
class DisjointFamily {
public:
  explicit DisjointFamily(BooleanAlgebra algebra,
                          std::vector<BaElement> members = {})
      : algebra_(std::move(algebra)), members_(std::move(members)) {
    for (const auto& m : members_) {
      if (!m.algebra().same_as(algebra_))
        throw DomainError("disjoint family member from a different algebra");
      if (m.is_bottom())
        throw DomainError("disjoint family members must be nonzero");
    }
    std::sort(members_.begin(), members_.end(), BaElementLess{});
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = i + 1; j < members_.size(); ++j)
        if (!members_[i].disjoint_with(members_[j]))
          throw DomainError("family members " + members_[i].describe() +
                            " and " + members_[j].describe() +
                            " are not disjoint");
  }

  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<BaElement>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const BaElement& member(std::size_t i) const { return members_.at(i); }

private:
  BooleanAlgebra algebra_;
  std::vector<BaElement> members_;
};

/// Finest family of pairwise disjoint nonzero elements generated by the
/// inputs: the nonzero meets over all sign patterns of the inputs.
/// Every input is recovered as the join of the members below it, and each
/// member is either below or disjoint from each input.
///
/// Computed by grouping atoms by their input-membership pattern, which
/// enumerates exactly the nonzero sign meets.
inline DisjointFamily disjoint_refinement(
    const std::vector<BaElement>& inputs) {
  if (inputs.empty())
    throw DomainError("disjoint refinement needs at least one input");
  const BooleanAlgebra& algebra = inputs.front().algebra();
  for (const auto& e : inputs)
    if (!e.algebra().same_as(algebra))
      throw DomainError("refinement inputs from distinct algebras");

  std::map<std::vector<bool>, AtomSet> groups;
  const std::size_t n = algebra.atom_count();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> pattern(inputs.size());
    for (std::size_t k = 0; k < inputs.size(); ++k)
      pattern[k] = inputs[k].atoms().test(i);
    auto it = groups.try_emplace(std::move(pattern), AtomSet(n)).first;
    it->second.set(i);
  }

  std::vector<BaElement> members;
  members.reserve(groups.size());
  for (auto& [pattern, atoms] : groups)
    members.push_back(algebra.element_from_atoms(std::move(atoms)));
  return DisjointFamily(algebra, std::move(members));
}

/// A finite Boolean ring inside a host algebra: contains bottom and is
/// closed under meet, join, and relative complement. Need not contain top.
class BooleanRing {
public:
  const BooleanAlgebra& algebra() const { return algebra_; }
  const std::vector<BaElement>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const BaElement& e) const {
    return std::binary_search(members_.begin(), members_.end(), e,
                              BaElementLess{});
  }

  /// Minimal nonzero members. These are pairwise disjoint and every member
  /// is the join of the ones below it.
  std::vector<BaElement> minimal_nonzero() const {
    std::vector<BaElement> out;
    for (const auto& m : members_) {
      if (m.is_bottom()) continue;
      bool minimal = true;
      for (const auto& other : members_) {
        if (other.is_bottom() || other == m) continue;
        if (other.leq(m)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(m);
    }
    return out;
  }

private:
  BooleanRing(BooleanAlgebra algebra, std::vector<BaElement> members)
      : algebra_(std::move(algebra)), members_(std::move(members)) {}

  BooleanAlgebra algebra_;
  std::vector<BaElement> members_;  // sorted, unique

  friend BooleanRing validate_ring(const std::vector<BaElement>&);
};

/// Checks the ring closures on a candidate member list and packages it.
/// Throws ValidationError naming the violated closure and a witness pair.
inline BooleanRing validate_ring(const std::vector<BaElement>& candidate) {
  if (candidate.empty())
    throw DomainError("ring candidate must list at least one element");
  const BooleanAlgebra& algebra = candidate.front().algebra();
  for (const auto& e : candidate)
    if (!e.algebra().same_as(algebra))
      throw DomainError("ring candidate members from distinct algebras");

  std::vector<BaElement> members = candidate;
  std::sort(members.begin(), members.end(), BaElementLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const auto contains = [&](const BaElement& e) {
    return std::binary_search(members.begin(), members.end(), e,
                              BaElementLess{});
  };

  if (!contains(algebra.bottom()))
    throw ValidationError("ring does not contain the bottom element",
                          "bottom");

  const auto check = [&](const BaElement& result, const char* closure,
                         const BaElement& a, const BaElement& b) {
    if (!contains(result))
      throw ValidationError(
          std::string("ring is not closed under ") + closure + ": " +
              a.describe() + " and " + b.describe() + " give " +
              result.describe() + ", which is missing",
          closure, a.atom_indices(), b.atom_indices());
  };

  for (const auto& a : members) {
    for (const auto& b : members) {
      check(a.meet(b), "meet", a, b);
      check(a.join(b), "join", a, b);
      check(a.diff(b), "relative complement", a, b);
    }
  }
  return BooleanRing(algebra, std::move(members));
}

}  // namespace fvlat
