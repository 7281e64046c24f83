#pragma once

// Loop systems in the pencil-parameter plane, braid monodromy of each loop,
// and the resulting relators (numerically, and in the closed symbolic form).

#include <optional>
#include <string>
#include <vector>

#include "pencil/braid.hpp"
#include "pencil/curve.hpp"
#include "pencil/free_word.hpp"
#include "pencil/loop_path.hpp"
#include "pencil/numeric.hpp"
#include "pencil/presentation.hpp"

namespace pencil {

struct LoopSystem {
  Complex base;
  /// Punctures as passed in; loops refer to them by index.
  std::vector<Complex> punctures;
  /// Loops in composition order (first traversed first).
  std::vector<LoopPath> loops;
  /// Counter-clockwise circle of radius 2 max|punctures| around 0.
  LoopPath big_circle;
};

/// Straight lassos from `base` ordered by ascending argument (ties: farther
/// first). Throws PathClearanceFailure when a path comes closer than half
/// the clearance radius of a puncture it does not enclose.
LoopSystem build_loop_system(const std::vector<Complex>& punctures, Complex base);

struct LoopBraid {
  /// Index into the singular values.
  std::size_t puncture = 0;
  BraidWord braid;
  Permutation permutation;
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
};

/// Roots of the base fiber, solved at the tracking tolerance.
std::vector<Complex> base_fiber(const CurveSpec& spec, Complex base);

/// Tracks the fiber roots around `loop` and reads off the braid. The braid's
/// permutation is checked against the tracked one (InconsistentEvents).
LoopBraid braid_of_loop(const CurveSpec& spec, const LoopPath& loop,
                        const TrackOptions& options = {});

struct Relator {
  FreeWord word;
  /// e.g. "loop 2 (y=0.7071) g3" or "(2-3) i=0 j=2".
  std::string source;
  /// True for relators derivable from the others (symbolic wrap-arounds).
  bool wrap_around = false;
};

struct RelationSet {
  Provenance provenance = Provenance::Numeric;
  int generator_count = 0;
  std::vector<std::string> generator_names;
  std::vector<Relator> relators;
  /// Product of all fiber meridians (the class of a big circle).
  FreeWord full_product;
  /// Generator index of omega in symbolic sets; 0 when absent.
  int omega_generator = 0;
};

/// g_j^-1 (g_j)^b for every j, freely reduced, trivial ones dropped.
std::vector<Relator> relators_of_braid(const BraidWord& b, const std::string& tag);

struct NumericMonodromy {
  CurveSpec spec;
  SingularValues singular;
  BaseConfiguration base;
  LoopSystem system;
  std::vector<LoopBraid> braids;
  RelationSet relations;
  /// (planet i, satellite j) of the strand in each base slot.
  std::vector<std::pair<int, int>> slot_labels;
};

struct MonodromyOptions {
  TrackOptions track{};
  /// Worker threads for independent loops; 0 reads PENCIL_MONODROMY_THREADS.
  unsigned threads = 0;
  /// Debug: reverse the loop order (breaks the infinity identity).
  bool scramble_order = false;
};

NumericMonodromy compute_monodromy(const CurveSpec& spec, const MonodromyOptions& options = {});

/// Generators and relators of `rs`; wrap-around relators only if asked.
Presentation to_presentation(const RelationSet& rs, bool include_wrap_around = true);

/// Relators for the loops whose puncture index passes `keep` (all if empty).
RelationSet relations_from_braids(const NumericMonodromy& m, const std::vector<bool>& keep = {});

RelationSet derive_relations_numeric(const CurveSpec& spec, const MonodromyOptions& options = {});

/// Closed-form relators over a_{i,j} (index i*q + j) and omega (index pq + 1).
RelationSet derive_relations_symbolic(int p, int q);

/// Flat generator index of a_{i,j}: i*q + j, i = 0..p-1, j = 1..q.
inline int a_index(int q, int i, int j) { return i * q + j; }

struct InfinityReport {
  int exponent = 0;
  int exponent_sum = 0;
  int expected_exponent_sum = 0;
};

/// The composed braid must act as g -> W g W^-1 with W = omega^e for one
/// global e in {+1, -1}, and have exponent sum d(d-1). Throws CheckFailed.
InfinityReport infinity_check(const std::vector<BraidWord>& braids, int strands);
InfinityReport infinity_check(const NumericMonodromy& m);

/// Threads requested by PENCIL_MONODROMY_THREADS (at least 1).
unsigned configured_threads();

}  // namespace pencil
