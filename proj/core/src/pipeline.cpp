#include "pencil/pipeline.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "pencil/error.hpp"

namespace pencil {

CurveSpec RunConfig::spec() const {
  if (segments < 8) throw InvalidSpec("circle segment count must be at least 8");
  if (!(tolerance > 0.0)) throw InvalidSpec("tolerance must be positive");
  if (mode == AlphaMode::RootsOfUnity) return CurveSpec::roots_of_unity(p, q);
  if (alphas.empty()) return CurveSpec::with_default_alphas(p, q);
  return CurveSpec::real_descending(p, q, alphas);
}

MonodromyOptions RunConfig::monodromy_options() const {
  MonodromyOptions o;
  o.track.circle_segments = segments;
  o.track.step_scale = step_scale;
  o.track.residual_tolerance = tolerance;
  o.threads = threads;
  o.scramble_order = scramble_order;
  return o;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool RunReport::passed() const {
  for (const auto& v : verdicts)
    if (v.verdict == Verdict::Fail) return false;
  return true;
}

const VerdictEntry* RunReport::verdict(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LaurentPoly numeric_alexander(const Presentation& P) {
  return alexander_polynomial(P, meridian_degree_map(P));
}

LaurentPoly symbolic_alexander(const Presentation& P) {
  std::vector<bool> meridian(static_cast<std::size_t>(P.generator_count()), true);
  meridian.back() = false;  // omega
  return alexander_polynomial(P, meridian_degree_map(P, meridian));
}

std::string battery_diff(const Battery& a, const Battery& b) {
  if (a == b) return "equal: " + to_string(a);
  return "got " + to_string(a) + " expected " + to_string(b);
}

}  // namespace

FlexReport flex_redundancy_report(const NumericMonodromy& m) {
  const auto& values = m.singular.values;
  std::vector<bool> core(values.size()), no_gamma1(values.size()), no_origin(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    core[i] = values[i].k == 0;
    no_gamma1[i] = !(values[i].component == 1 && values[i].k == 0);
    no_origin[i] = values[i].component != 0;
  }
  FlexReport r;
  const Presentation all = to_presentation(m.relations);
  const Presentation reduced = to_presentation(relations_from_braids(m, core));
  r.all_loops = compute_battery(all);
  r.core_loops = compute_battery(reduced);
  r.alexander_all = numeric_alexander(all);
  r.alexander_core = numeric_alexander(reduced);
  r.consistent = r.all_loops == r.core_loops && r.alexander_all == r.alexander_core;
  r.without_gamma1 = compute_battery(to_presentation(relations_from_braids(m, no_gamma1)));
  r.gamma1_differs = !(r.without_gamma1 == r.all_loops);
  r.without_origin = compute_battery(to_presentation(relations_from_braids(m, no_origin)));
  r.origin_differs = !(r.without_origin == r.all_loops);
  return r;
}

RunReport run_pipeline(const RunConfig& cfg) {
  const auto t_start = Clock::now();
  RunReport r;
  r.config = cfg;
  r.spec = cfg.spec();
  const CurveSpec& spec = r.spec;
  const int p = spec.p, q = spec.q;

  auto add = [&r](std::string name, bool ok, std::string reason) {
    r.verdicts.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(reason)});
  };
  auto skip = [&r](std::string name, std::string reason) {
    r.verdicts.push_back({std::move(name), Verdict::Skipped, std::move(reason)});
  };
  // Runs a stage; module errors become a failed "stage:<name>" verdict.
  auto stage = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      return true;
    } catch (const Error& e) {
      add("stage:" + name, false, e.what());
      return false;
    }
  };

  r.expected = expected_affine(p, q);
  r.battery_expected_affine = compute_battery(r.expected);
  r.battery_expected_projective = compute_battery(expected_projective(p, q));
  r.alexander_generic = closed_form_generic_linear(p, q);
  r.alexander_tame = closed_form_tame_maximal(p, q);

  // Exact identities on the curve itself.
  stage("torus-form", [&] {
    r.torus = torus_form_identity(CurveSpec::roots_of_unity(p, q));
    const int c = q % 2 == 1 ? 1 : -1;
    add("torus-form", r.torus->holds && r.torus->c == c,
        "c = " + std::to_string(r.torus->c) + (r.torus->holds ? ", identity holds" : ", identity fails") +
            (r.torus->symbolic ? " (exact)" : " (sampled)"));
  });
  if (spec.mode == AlphaMode::RealDescending) {
    stage("intersection", [&] {
      bool ok = true;
      for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j) {
          const int m = intersection_multiplicity_origin(spec, i, j);
          r.intersection_multiplicities.push_back(m);
          ok = ok && m == p * p;
        }
      add("intersection-multiplicity", ok, "all pairs " + std::string(ok ? "" : "not ") + "equal p^2 = " +
                                              std::to_string(p * p));
    });
  } else {
    skip("intersection-multiplicity", "needs real alphas");
  }

  bool numeric_ok = false;
  if (cfg.numeric) {
    const auto t0 = Clock::now();
    numeric_ok = stage("monodromy", [&] {
      r.monodromy = compute_monodromy(spec, cfg.monodromy_options());
      r.numeric_affine = to_presentation(r.monodromy->relations);
    });
    r.timings.monodromy = since(t0);
    if (numeric_ok) {
      try {
        r.infinity = infinity_check(*r.monodromy);
        add("infinity", true,
            "conjugation by omega^" + std::to_string(r.infinity->exponent) + ", exponent sum " +
                std::to_string(r.infinity->exponent_sum));
      } catch (const CheckFailed& e) {
        add("infinity", false, e.what());
      }
    } else {
      skip("infinity", "monodromy stage failed");
    }
  } else {
    skip("infinity", "numeric path disabled");
  }

  bool symbolic_ok = false;
  if (cfg.symbolic) {
    const auto t0 = Clock::now();
    RelationSet sym;
    symbolic_ok = stage("symbolic", [&] {
      sym = derive_relations_symbolic(p, q);
      r.symbolic_affine = to_presentation(sym);
    });
    if (symbolic_ok) {
      try {
        r.script = scripted_reduction(sym, p, q);
        std::size_t redundant = 0;
        for (const auto& w : r.script->wrap_checks) redundant += w.redundant ? 1 : 0;
        add("scripted-reduction", true,
            "matches the target; " + std::to_string(redundant) + "/" +
                std::to_string(r.script->wrap_checks.size()) + " wrap-around relators redundant");
      } catch (const ReductionMismatch& e) {
        add("scripted-reduction", false, e.what());
      }
    } else {
      skip("scripted-reduction", "symbolic stage failed");
    }
    r.timings.symbolic = since(t0);
  } else {
    skip("scripted-reduction", "symbolic path disabled");
  }

  const auto t_bat = Clock::now();
  if (numeric_ok) {
    stage("battery", [&] {
      r.battery_numeric_affine = compute_battery(*r.numeric_affine);
      r.battery_numeric_projective =
          compute_battery(projectivize(*r.numeric_affine, r.monodromy->relations.full_product));
      add("battery-numeric-affine", *r.battery_numeric_affine == r.battery_expected_affine,
          battery_diff(*r.battery_numeric_affine, r.battery_expected_affine));
      add("battery-numeric-projective", *r.battery_numeric_projective == r.battery_expected_projective,
          battery_diff(*r.battery_numeric_projective, r.battery_expected_projective));
    });
  } else {
    skip("battery-numeric-affine", "no numeric presentation");
    skip("battery-numeric-projective", "no numeric presentation");
  }
  if (r.script) {
    stage("battery", [&] {
      r.battery_symbolic_affine = compute_battery(*r.symbolic_affine);
      const FreeWord omega_p = FreeWord::power(q + 1, p);
      r.battery_script_projective = compute_battery(projectivize(r.script->presentation, omega_p));
      add("battery-symbolic-projective", *r.battery_script_projective == r.battery_expected_projective,
          battery_diff(*r.battery_script_projective, r.battery_expected_projective));
    });
  } else {
    skip("battery-symbolic-projective", "no scripted presentation");
  }
  {
    // Abelianization targets: affine Z^q, projective Z^(q-1) + Z/p.
    const AbelianInvariants affine{q, {}};
    const AbelianInvariants projective{q - 1, {p}};
    const bool have = r.battery_numeric_affine && r.battery_numeric_projective;
    const Battery& a = have ? *r.battery_numeric_affine : r.battery_expected_affine;
    const Battery& b = have ? *r.battery_numeric_projective : r.battery_expected_projective;
    add("abelianization", a.abelian == affine && b.abelian == projective,
        std::string(have ? "numeric" : "expected") + ": affine " + to_string(a.abelian) + ", projective " +
            to_string(b.abelian));
  }
  r.timings.battery = since(t_bat);

  const auto t_alex = Clock::now();
  if (numeric_ok || symbolic_ok) {
    stage("alexander", [&] {
      std::string reason;
      bool ok = true;
      if (numeric_ok) {
        r.alexander_numeric = numeric_alexander(*r.numeric_affine);
        ok = ok && *r.alexander_numeric == r.alexander_generic;
        reason += "numeric " + to_string(*r.alexander_numeric) + "; ";
      }
      if (symbolic_ok) {
        r.alexander_symbolic = symbolic_alexander(*r.symbolic_affine);
        ok = ok && *r.alexander_symbolic == r.alexander_generic;
        reason += "symbolic " + to_string(*r.alexander_symbolic) + "; ";
      }
      add("alexander", ok, reason + "closed form " + to_string(r.alexander_generic));
    });
  } else {
    skip("alexander", "no presentation");
  }
  r.timings.alexander = since(t_alex);

  if (cfg.flex) {
    if (numeric_ok) {
      stage("flex", [&] {
        r.flex = flex_redundancy_report(*r.monodromy);
        add("flex-redundancy", r.flex->consistent,
            r.flex->consistent ? "consistent with redundancy" : "invariants differ without flex loops");
      });
    } else {
      skip("flex-redundancy", "no numeric monodromy");
    }
  }
  r.timings.total = since(t_start);
  return r;
}

Json report_to_json(const RunReport& r, bool with_timings) {
  Json j;
  j["schema"] = "pencil-monodromy/1";
  j["curve"] = r.spec;
  j["config"] = Json{{"tolerance", r.config.tolerance},
                     {"segments", r.config.segments},
                     {"step_scale", r.config.step_scale}};
  if (r.monodromy) {
    const auto& m = *r.monodromy;
    j["singular_values"] = m.singular;
    j["base_point"] = m.base.gamma0;
    j["braids"] = m.braids;
    j["relations_numeric"] = m.relations;
  }
  if (r.infinity) j["infinity"] = *r.infinity;
  if (r.torus) j["torus_form"] = Json{{"c", r.torus->c}, {"holds", r.torus->holds}, {"exact", r.torus->symbolic}};
  j["intersection_multiplicities"] = r.intersection_multiplicities;
  Json pres;
  if (r.numeric_affine) pres["numeric"] = *r.numeric_affine;
  if (r.symbolic_affine) pres["symbolic"] = *r.symbolic_affine;
  if (r.script) pres["scripted"] = r.script->presentation;
  pres["expected"] = r.expected;
  j["presentations"] = pres;
  if (r.script) {
    Json wraps = Json::array();
    for (const auto& w : r.script->wrap_checks) wraps.push_back(Json{{"source", w.source}, {"redundant", w.redundant}});
    j["derivation"] = Json{{"log", r.script->log}, {"wrap_around", wraps}};
  }
  Json bat;
  if (r.battery_numeric_affine) bat["numeric_affine"] = *r.battery_numeric_affine;
  if (r.battery_numeric_projective) bat["numeric_projective"] = *r.battery_numeric_projective;
  if (r.battery_symbolic_affine) bat["symbolic_affine"] = *r.battery_symbolic_affine;
  if (r.battery_script_projective) bat["scripted_projective"] = *r.battery_script_projective;
  bat["expected_affine"] = r.battery_expected_affine;
  bat["expected_projective"] = r.battery_expected_projective;
  j["battery"] = bat;
  Json alex;
  if (r.alexander_numeric) alex["numeric"] = *r.alexander_numeric;
  if (r.alexander_symbolic) alex["symbolic"] = *r.alexander_symbolic;
  alex["generic_linear"] = r.alexander_generic;
  alex["tame_maximal"] = r.alexander_tame;
  j["alexander"] = alex;
  if (r.flex) {
    j["flex"] = Json{{"all_loops", r.flex->all_loops},
                     {"core_loops", r.flex->core_loops},
                     {"alexander_all", r.flex->alexander_all},
                     {"alexander_core", r.flex->alexander_core},
                     {"consistent", r.flex->consistent},
                     {"without_gamma1", r.flex->without_gamma1},
                     {"gamma1_differs", r.flex->gamma1_differs},
                     {"without_origin", r.flex->without_origin},
                     {"origin_differs", r.flex->origin_differs}};
  }
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(Json{{"name", v.name}, {"verdict", to_string(v.verdict)}, {"reason", v.reason}});
  j["verdicts"] = verdicts;
  j["passed"] = r.passed();
  if (with_timings) {
    j["timings"] = Json{{"monodromy_s", r.timings.monodromy},
                        {"symbolic_s", r.timings.symbolic},
                        {"battery_s", r.timings.battery},
                        {"alexander_s", r.timings.alexander},
                        {"total_s", r.timings.total}};
  }
  return j;
}

std::string report_to_table(const RunReport& r) {
  std::ostringstream out;
  out << "curve (p,q) = (" << r.spec.p << "," << r.spec.q << "), d = " << r.spec.degree() << "\n";
  std::size_t width = 0;
  for (const auto& v : r.verdicts) width = std::max(width, v.name.size());
  for (const auto& v : r.verdicts)
    out << "  " << std::left << std::setw(static_cast<int>(width)) << v.name << "  " << std::setw(7)
        << to_string(v.verdict) << "  " << v.reason << "\n";
  out << "  total " << std::fixed << std::setprecision(2) << r.timings.total << " s\n";
  return out.str();
}

std::vector<RunReport> selftest(const SelftestOptions& options) {
  std::vector<std::pair<int, int>> cases{{2, 2}, {3, 2}};
  if (!options.quick) {
    cases.emplace_back(4, 2);
    cases.emplace_back(4, 3);
  }
  std::vector<RunReport> out;
  for (auto [p, q] : cases) {
    RunConfig cfg;
    cfg.p = p;
    cfg.q = q;
    cfg.scramble_order = options.scramble_order;
    out.push_back(run_pipeline(cfg));
  }
  return out;
}

}  // namespace pencil
