#pragma once

// Scripted reduction of the closed-form relators to the two-relation-family
// target, with every rewrite justified by a relator already established.

#include <map>
#include <string>
#include <vector>

#include "pencil/monodromy.hpp"
#include "pencil/presentation.hpp"

namespace pencil {

/// Relators known to hold, by name. A rewrite step is accepted only when its
/// premise is a cyclic rotation of a known relator or of its inverse.
class ProofContext {
 public:
  void add(const std::string& name, const FreeWord& relator);
  const FreeWord& get(const std::string& name) const;
  bool has(const std::string& name) const { return known_.count(name) > 0; }
  /// True when `word` is trivially implied by relator `name`.
  bool justifies(const std::string& name, const FreeWord& word) const;

 private:
  std::map<std::string, FreeWord> known_;
};

/// A relator being transformed step by step; each step is logged.
class Rewrite {
 public:
  Rewrite(const ProofContext& ctx, FreeWord start, std::vector<std::string>* log,
          std::vector<std::string> names);

  const FreeWord& word() const { return word_; }
  /// Replaces generator x everywhere by `image`; needs x^-1 image = e.
  Rewrite& substitute(int x, const FreeWord& image, const std::string& by);
  /// Replaces every occurrence of s (cyclically) by t; needs s^-1 t = e.
  /// Throws ReductionMismatch when s does not occur.
  Rewrite& replace(const FreeWord& s, const FreeWord& t, const std::string& by);
  /// Current word must be a rotation of `target` or its inverse.
  void conclude_equals(const FreeWord& target) const;
  /// Current word must be empty or a rotation of known relator `name`.
  void conclude_by(const std::string& name) const;

 private:
  void note(const std::string& what);
  const ProofContext& ctx_;
  FreeWord word_;
  std::vector<std::string>* log_;
  std::vector<std::string> names_;
};

/// Decides w = e in <g_1..g_q, w | w (g_1...g_q)^-1, [g_j, w^p]> (w is
/// generator q+1) via the normal form of the amalgam
/// (F(g_1..g_{q-1}) x <z>) *_{z = w^p} <w>.
bool trivial_in_affine_target(const FreeWord& word, int p, int q);

struct WrapCheck {
  std::string source;
  bool redundant = false;
};

struct ScriptResult {
  Presentation presentation;
  std::vector<std::string> log;
  std::vector<WrapCheck> wrap_checks;
};

/// Replays the elimination: omega = a_{i,1}...a_{i,q}; [a_{i,j}, omega^p] = e by
/// induction on j; a_{i,j} = omega^i a_{0,j} omega^-i; then Tietze moves down to
/// <a_{0,j}, omega | (S), (R_0)>, renamed to g_j. Wrap-around relators are
/// not used; their redundancy is checked and reported. Throws
/// ReductionMismatch on any unjustified step or a final mismatch with
/// expected_affine(p, q).
ScriptResult scripted_reduction(const RelationSet& symbolic, int p, int q);

}  // namespace pencil
