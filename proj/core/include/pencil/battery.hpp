#pragma once

// Isomorphism-invariant fingerprint of a presented group: abelianization and
// homomorphism counts into a fixed list of small groups.

#include <cstdint>
#include <string>
#include <vector>

#include "pencil/finite_group.hpp"
#include "pencil/presentation.hpp"

namespace pencil {

struct HomCount {
  std::string group;
  std::uint64_t count = 0;
  friend bool operator==(const HomCount&, const HomCount&) = default;
};

struct Battery {
  AbelianInvariants abelian;
  std::vector<HomCount> homs;
  /// Generators left after simplification (informational, not compared).
  int simplified_generators = 0;

  friend bool operator==(const Battery& a, const Battery& b) {
    return a.abelian == b.abelian && a.homs == b.homs;
  }
};

std::string to_string(const Battery& b);

/// Simplifies P with Tietze moves, then evaluates every battery group.
Battery compute_battery(const Presentation& P);

}  // namespace pencil
