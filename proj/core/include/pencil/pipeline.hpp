#pragma once

// End-to-end run: curve -> loops -> braids -> relations -> presentations ->
// battery -> Alexander polynomial -> verdicts.

#include <optional>
#include <string>
#include <vector>

#include "pencil/alexander.hpp"
#include "pencil/battery.hpp"
#include "pencil/monodromy.hpp"
#include "pencil/script.hpp"
#include "pencil/serialize.hpp"

namespace pencil {

struct RunConfig {
  int p = 3;
  int q = 2;
  /// Empty means the defaults (q+1, q, ..., 2).
  std::vector<double> alphas;
  AlphaMode mode = AlphaMode::RealDescending;
  double tolerance = 1e-10;
  int segments = 64;
  double step_scale = 1.0;
  bool numeric = true;
  bool symbolic = true;
  bool flex = false;
  unsigned threads = 0;
  /// Debug: traverse the loops in reverse order.
  bool scramble_order = false;

  /// Throws InvalidSpec.
  CurveSpec spec() const;
  MonodromyOptions monodromy_options() const;
};

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct VerdictEntry {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  std::string reason;
};

struct FlexReport {
  Battery all_loops;
  Battery core_loops;
  LaurentPoly alexander_all;
  LaurentPoly alexander_core;
  bool consistent = false;
  /// All loops but the one around gamma_1. The infinity relation makes any
  /// single loop redundant, so this is expected to agree with all_loops.
  Battery without_gamma1;
  bool gamma1_differs = false;
  /// Loops around the gamma_j only (origin dropped); expected to differ.
  Battery without_origin;
  bool origin_differs = false;
};

/// Batteries and Alexander polynomials with and without the loops around
/// gamma_j xi^k, k >= 1, plus two loop-removal controls.
FlexReport flex_redundancy_report(const NumericMonodromy& m);

struct Timings {
  double monodromy = 0.0;
  double symbolic = 0.0;
  double battery = 0.0;
  double alexander = 0.0;
  double total = 0.0;
};

struct RunReport {
  RunConfig config;
  CurveSpec spec;
  std::optional<NumericMonodromy> monodromy;
  std::optional<InfinityReport> infinity;
  std::optional<TorusIdentity> torus;
  /// I(C_i, C_j; O) for i < j.
  std::vector<int> intersection_multiplicities;
  std::optional<Presentation> numeric_affine;
  std::optional<Presentation> symbolic_affine;
  std::optional<ScriptResult> script;
  Presentation expected;
  std::optional<Battery> battery_numeric_affine;
  std::optional<Battery> battery_numeric_projective;
  std::optional<Battery> battery_symbolic_affine;
  std::optional<Battery> battery_script_projective;
  Battery battery_expected_affine;
  Battery battery_expected_projective;
  std::optional<LaurentPoly> alexander_numeric;
  std::optional<LaurentPoly> alexander_symbolic;
  LaurentPoly alexander_generic;
  LaurentPoly alexander_tame;
  std::optional<FlexReport> flex;
  std::vector<VerdictEntry> verdicts;
  Timings timings;

  /// No non-skipped verdict failed.
  bool passed() const;
  const VerdictEntry* verdict(const std::string& name) const;
};

/// Never throws for module errors: a failing stage becomes a failed verdict
/// "stage:<name>" and the verdicts depending on it are skipped.
RunReport run_pipeline(const RunConfig& cfg);

/// Schema "pencil-monodromy/1". Timings are kept under "timings" so that
/// the rest is byte-identical across runs of the same config.
Json report_to_json(const RunReport& r, bool with_timings = true);
/// Aligned verdict table.
std::string report_to_table(const RunReport& r);

struct SelftestOptions {
  bool quick = false;
  bool scramble_order = false;
};

std::vector<RunReport> selftest(const SelftestOptions& options = {});

}  // namespace pencil
