#pragma once

// Finite group presentations and their abelian invariants.

#include <string>
#include <vector>

#include "pencil/free_word.hpp"

namespace pencil {

enum class Provenance { Numeric, Symbolic, Expected };
std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
  Provenance provenance = Provenance::Expected;

  int generator_count() const { return static_cast<int>(generators.size()); }
  std::size_t total_length() const;
  /// Cyclically reduces every relator and drops empty ones.
  void normalize();
  /// Throws std::invalid_argument when a relator uses an unknown generator.
  void validate() const;
  /// One relator per line, e.g. "w g2^-1 g1^-1".
  std::string to_text() const;
};

/// <g_1..g_q, w | w (g_1...g_q)^-1, [g_j, w^p]>.
Presentation expected_affine(int p, int q);
/// <g_1..g_q, w | w^p, w (g_1...g_q)^-1>.
Presentation expected_projective(int p, int q);

/// Adds `word` as a relator (the class of the line at infinity becomes trivial).
Presentation projectivize(const Presentation& affine, const FreeWord& word);

struct AbelianInvariants {
  int rank = 0;
  /// Invariant factors >= 2, each dividing the next.
  std::vector<long> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string to_string(const AbelianInvariants& a);

/// Smith normal form of the relator exponent matrix.
AbelianInvariants abelianization(const Presentation& P);

}  // namespace pencil
