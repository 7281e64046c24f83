// pencil-monodromy: braid monodromy and fundamental groups of linear torus
// curves of maximal contact.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pencil/error.hpp"
#include "pencil/pipeline.hpp"

namespace {

using namespace pencil;

struct Common {
  RunConfig cfg;
  std::string alphas;
  bool json = false;
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--p", c.cfg.p, "degree of each component")->check(CLI::Range(2, 12));
  app->add_option("--q", c.cfg.q, "number of components")->check(CLI::Range(2, 12));
  app->add_option("--alphas", c.alphas, "comma-separated descending positive alphas, or 'roots'");
  app->add_option("--tol", c.cfg.tolerance, "residual tolerance for tracked roots");
  app->add_option("--segments", c.cfg.segments, "arc subdivisions per full circle");
  app->add_option("--step-scale", c.cfg.step_scale, "multiplier on the tracking step bound");
  app->add_flag("--json", c.json, "machine-readable output");
  app->add_option("--out", c.out, "write output to FILE instead of stdout");
}

void finish_common(Common& c) {
  if (c.alphas.empty()) return;
  if (c.alphas == "roots") {
    c.cfg.mode = AlphaMode::RootsOfUnity;
    return;
  }
  std::stringstream in(c.alphas);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      c.cfg.alphas.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InvalidSpec("cannot parse alpha '" + item + "'");
    }
  }
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out);
  f << text;
}

std::string relations_text(const RelationSet& rs) {
  std::ostringstream out;
  for (const auto& r : rs.relators)
    out << r.source << (r.wrap_around ? " (wrap-around)" : "") << ": "
        << to_string(r.word, rs.generator_names) << "\n";
  return out.str();
}

int run_report(const Common& c, bool flex) {
  RunConfig cfg = c.cfg;
  cfg.flex = flex;
  const RunReport r = run_pipeline(cfg);
  emit(c, c.json ? report_to_json(r).dump(2) + "\n" : report_to_table(r));
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid monodromy of linear torus curves of maximal contact"};
  app.require_subcommand(1);

  Common compute, verify, relations, braid, alexander;
  std::string kind = "numeric", formula = "both", csv;
  bool quick = false, scramble = false, selftest_json = false;

  auto* c_compute = app.add_subcommand("compute", "run the full pipeline");
  add_common(c_compute, compute);
  auto* c_verify = app.add_subcommand("verify", "run the pipeline with the flex-redundancy check");
  add_common(c_verify, verify);
  auto* c_rel = app.add_subcommand("relations", "print monodromy relators");
  add_common(c_rel, relations);
  c_rel->add_option("kind", kind, "numeric or symbolic")->check(CLI::IsMember({"numeric", "symbolic"}));
  auto* c_braid = app.add_subcommand("braid", "dump per-loop braid words");
  add_common(c_braid, braid);
  c_braid->add_option("--strands-csv", csv, "write tracked strand positions to FILE");
  auto* c_alex = app.add_subcommand("alexander", "closed-form Alexander polynomials");
  add_common(c_alex, alexander);
  c_alex->add_option("--formula", formula, "generic, tame or both")
      ->check(CLI::IsMember({"generic", "tame", "both"}));
  auto* c_self = app.add_subcommand("selftest", "run the reference curves");
  c_self->add_flag("--quick", quick, "only (2,2) and (3,2)");
  c_self->add_flag("--json", selftest_json, "machine-readable output");
  c_self->add_flag("--scramble-loops", scramble)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_compute) {
      finish_common(compute);
      return run_report(compute, false);
    }
    if (*c_verify) {
      finish_common(verify);
      return run_report(verify, true);
    }
    if (*c_rel) {
      finish_common(relations);
      const CurveSpec spec = relations.cfg.spec();
      const RelationSet rs = kind == "symbolic"
                                 ? derive_relations_symbolic(spec.p, spec.q)
                                 : derive_relations_numeric(spec, relations.cfg.monodromy_options());
      emit(relations, relations.json ? Json(rs).dump(2) + "\n" : relations_text(rs));
      return 0;
    }
    if (*c_braid) {
      finish_common(braid);
      const CurveSpec spec = braid.cfg.spec();
      const MonodromyOptions opts = braid.cfg.monodromy_options();
      const NumericMonodromy m = compute_monodromy(spec, opts);
      if (braid.json) {
        emit(braid, Json{{"curve", spec}, {"loops", m.system}, {"braids", m.braids}}.dump(2) + "\n");
      } else {
        std::ostringstream out;
        for (std::size_t i = 0; i < m.braids.size(); ++i) {
          const auto& b = m.braids[i];
          const Complex y = m.system.punctures[b.puncture];
          out << "loop " << i + 1 << " y=(" << y.real() << "," << y.imag() << ") [";
          for (std::size_t k = 0; k < b.braid.letters().size(); ++k)
            out << (k ? "," : "") << b.braid.letters()[k];
          out << "]\n";
        }
        emit(braid, out.str());
      }
      if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw std::runtime_error("cannot open " + csv);
        f << "loop,t,strand,re,im\n";
        const auto family = fiber_family(spec);
        const auto start = base_fiber(spec, m.system.base);
        for (std::size_t i = 0; i < m.system.loops.size(); ++i) {
          track_loop(family, m.system.loops[i], start, opts.track,
                     [&](double t, std::span<const Complex> roots) {
                       for (std::size_t s = 0; s < roots.size(); ++s)
                         f << i + 1 << ',' << t << ',' << s << ',' << roots[s].real() << ','
                           << roots[s].imag() << '\n';
                     });
        }
      }
      return 0;
    }
    if (*c_alex) {
      finish_common(alexander);
      const CurveSpec spec = alexander.cfg.spec();
      Json j{{"p", spec.p}, {"q", spec.q}};
      std::ostringstream out;
      if (formula != "tame") {
        const LaurentPoly g = closed_form_generic_linear(spec.p, spec.q);
        j["generic_linear"] = g;
        out << "generic linear: " << to_string(g) << "\n";
      }
      if (formula != "generic") {
        const LaurentPoly t = closed_form_tame_maximal(spec.p, spec.q);
        j["tame_maximal"] = t;
        out << "tame maximal:   " << to_string(t) << "\n";
      }
      emit(alexander, alexander.json ? j.dump(2) + "\n" : out.str());
      return 0;
    }
    if (*c_self) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto reports = selftest({quick, scramble});
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      bool ok = true;
      Json all = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        if (selftest_json)
          all.push_back(report_to_json(r));
        else
          std::cout << report_to_table(r);
      }
      if (selftest_json)
        std::cout << Json{{"reports", all}, {"passed", ok}, {"wall_s", wall}}.dump(2) << "\n";
      else
        std::cout << reports.size() << " curves, " << (ok ? "all pass" : "FAILURES") << ", wall time "
                  << wall << " s\n";
      return ok ? 0 : 1;
    }
  } catch (const pencil::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
