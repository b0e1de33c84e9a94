#pragma once

#include <cstddef>

namespace fvlat {

/// Size caps for operations whose cost grows with the element universe.
/// Callers may pass a relaxed copy; the defaults keep everything instant.
struct Limits {
  /// Free algebra construction cap: 12 generators give 4096 atoms.
  std::size_t max_generators = 12;
  /// Cap for operations that enumerate all 2^n algebra elements
  /// (quantifier cone checks, total element maps, Hasse exports).
  std::size_t quantifier_max_atoms = 8;
};

}  // namespace fvlat
