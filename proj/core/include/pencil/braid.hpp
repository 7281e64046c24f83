#pragma once

// Braid words, strand permutations and the Artin action on free groups.
//
// Conventions (validated end-to-end by the monodromy-at-infinity check):
//  * slot k (1-based) is the k-th strand in the projection order;
//  * sigma_k exchanges slots k and k+1, positive when the strand leaving
//    slot k passes with the larger height (a counter-clockwise half twist);
//  * generator g_k is a counter-clockwise lasso around the slot-k strand,
//    based below the fiber, so g_1 g_2 ... g_d encircles every strand;
//  * sigma_k acts by g_k -> g_k g_{k+1} g_k^-1, g_{k+1} -> g_k;
//  * a word s_1 s_2 ... s_n (in time order) acts as phi_{s_n} o ... o phi_{s_1}.

#include <span>
#include <vector>

#include "pencil/free_word.hpp"
#include "pencil/numeric.hpp"

namespace pencil {

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int exponent_sum() const;
  BraidWord inverse() const;
  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 0;
  std::vector<int> letters_;
};

/// images[i] = final 0-based slot of the strand that starts in slot i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(std::size_t n);
  std::size_t size() const { return images.size(); }
  bool is_identity() const;
  /// Apply `this` first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  /// Cycle lengths in decreasing order.
  std::vector<int> cycle_type() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Reconstructs the braid from crossing events, checking that each event
/// exchanges the labels currently at its slot pair (identity start order).
BraidWord braid_from_events(int strands, std::span<const CrossingEvent> events);

Permutation permutation_of(const BraidWord& b);

/// (sigma_1 ... sigma_{d-1})^d.
BraidWord full_twist(int strands);

/// Removes adjacent sigma_k sigma_k^-1 pairs.
BraidWord cancel_inverse_pairs(const BraidWord& b);

/// Images of g_1..g_d under the automorphism induced by `b`.
std::vector<FreeWord> artin_images(const BraidWord& b);

/// Image of `w` (over generators 1..strands) under the action of `b`.
FreeWord artin_action(const BraidWord& b, const FreeWord& w);

/// g_1 g_2 ... g_d, the boundary loop preserved by every braid.
FreeWord boundary_word(int strands);

}  // namespace pencil
