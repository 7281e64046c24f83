#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pencil {

/// Word in a free group. Letters are signed 1-based generator indices:
/// +k is the generator g_k, -k its inverse. Construction does not reduce.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<int> letters) : letters_(letters) {}
  explicit FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  static FreeWord generator(int g) { return FreeWord{g}; }
  /// g^e, possibly with negative e.
  static FreeWord power(int g, int e);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  FreeWord inverse() const;
  FreeWord pow(int e) const;
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  /// Largest generator index used.
  int max_generator() const;
  /// Sum of exponents of generator g.
  int exponent_sum(int g) const;
  /// Number of occurrences of g or g^-1.
  std::size_t occurrences(int g) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Cancels adjacent x x^-1 pairs until none remain.
FreeWord free_reduce(const FreeWord& w);
/// Free reduction followed by removal of cancelling first/last letters.
FreeWord cyclic_reduce(const FreeWord& w);
/// Commutator [a, b] = a b a^-1 b^-1.
FreeWord commutator(const FreeWord& a, const FreeWord& b);
/// Substitutes images[g-1] for every g (and its inverse for g^-1), reduced.
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);
/// True when `a` equals some cyclic rotation of `b` (both cyclically reduced).
bool is_cyclic_rotation(const FreeWord& a, const FreeWord& b);
/// Canonical representative of the conjugacy class of {w, w^-1}: the
/// lexicographically least rotation of the cyclic reduction of w or w^-1.
FreeWord canonical_relator(const FreeWord& w);

/// Human-readable form, e.g. "g1 g2^-1" with default names.
std::string to_string(const FreeWord& w, const std::vector<std::string>& names = {});

}  // namespace pencil
