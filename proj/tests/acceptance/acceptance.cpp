// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pencil/error.hpp"
#include "pencil/pipeline.hpp"

using namespace pencil;

namespace {

using Clock = std::chrono::steady_clock;
using Case = std::pair<int, int>;

const std::vector<Case> kCases{{2, 2}, {3, 2}, {4, 2}, {4, 3}, {5, 2}};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string name(Case c) { return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")"; }

bool is_pass(const RunReport& r, const std::string& v) {
  const VerdictEntry* e = r.verdict(v);
  return e != nullptr && e->verdict == Verdict::Pass;
}

// Budget for the numeric path: 120 s up to degree 10, 10 min beyond.
double numeric_budget(Case c) { return c.first * c.second <= 10 ? 120.0 : 600.0; }

struct Line {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (!ok) note << "; ";
    else note.str("");
    ok = false;
    note << why;
  }
};

int failures = 0;

void report(int id, const std::string& title, Line& l, const std::string& summary) {
  std::printf("[%s] %2d %s: %s\n", l.ok ? "PASS" : "FAIL", id, title.c_str(),
              l.ok ? summary.c_str() : l.note.str().c_str());
  std::fflush(stdout);
  if (!l.ok) ++failures;
}

RunReport numeric_run(int p, int q, std::vector<double> alphas, bool flex, double step_scale = 1.0,
                      int segments = 64) {
  RunConfig c;
  c.p = p;
  c.q = q;
  c.alphas = std::move(alphas);
  c.flex = flex;
  c.step_scale = step_scale;
  c.segments = segments;
  return run_pipeline(c);
}

double numeric_time(const RunReport& r) { return r.timings.monodromy + r.timings.battery; }

// Criterion 2 on one run.
void check_numeric_battery(const RunReport& r, Case c, Line& l) {
  if (!r.battery_numeric_affine || !r.battery_numeric_projective) {
    l.fail(name(c) + " no numeric battery");
    return;
  }
  if (!(*r.battery_numeric_affine == r.battery_expected_affine)) l.fail(name(c) + " affine battery differs");
  if (!(*r.battery_numeric_projective == r.battery_expected_projective))
    l.fail(name(c) + " projective battery differs");
  if (numeric_time(r) >= numeric_budget(c))
    l.fail(name(c) + " took " + std::to_string(numeric_time(r)) + " s");
}

// Criterion 5 on one run.
void check_infinity(const RunReport& r, Case c, Line& l) {
  const int d = c.first * c.second;
  if (!is_pass(r, "infinity") || !r.infinity) {
    l.fail(name(c) + " infinity check failed");
    return;
  }
  if (r.infinity->exponent_sum != d * (d - 1))
    l.fail(name(c) + " exponent sum " + std::to_string(r.infinity->exponent_sum));
}

}  // namespace

int main() {
  const auto t_all = Clock::now();

  // One full run per case (numeric and symbolic), flex for (3,2) and (4,2).
  std::map<Case, RunReport> base;
  for (Case c : kCases) {
    const bool flex = c == Case{3, 2} || c == Case{4, 2};
    base.emplace(c, numeric_run(c.first, c.second, {}, flex));
    std::fprintf(stderr, "  ran %s in %.1f s\n", name(c).c_str(), base.at(c).timings.total);
  }

  {
    Line l;
    std::ostringstream s;
    for (Case c : kCases) {
      const auto [p, q] = c;
      const auto t0 = Clock::now();
      try {
        const ScriptResult sr = scripted_reduction(derive_relations_symbolic(p, q), p, q);
        const Presentation target = expected_affine(p, q);
        if (sr.presentation.generators != target.generators || sr.presentation.relators != target.relators)
          l.fail(name(c) + " differs from the target");
        const Battery proj = compute_battery(projectivize(sr.presentation, FreeWord::power(q + 1, p)));
        if (!(proj == compute_battery(expected_projective(p, q)))) l.fail(name(c) + " projective battery differs");
      } catch (const Error& e) {
        l.fail(name(c) + " " + e.what());
      }
      const double t = since(t0);
      if (t >= 5.0) l.fail(name(c) + " took " + std::to_string(t) + " s");
      s << name(c) << " " << static_cast<int>(t * 1000) << " ms ";
    }
    report(1, "symbolic reduction", l, s.str());
  }

  {
    Line l;
    std::ostringstream s;
    for (Case c : kCases) {
      check_numeric_battery(base.at(c), c, l);
      s << name(c) << " " << static_cast<int>(numeric_time(base.at(c)) + 0.5) << " s ";
    }
    report(2, "numeric battery", l, s.str());
  }

  {
    Line l;
    for (Case c : kCases) {
      const auto [p, q] = c;
      const RunReport& r = base.at(c);
      const AbelianInvariants affine{q, {}}, projective{q - 1, {p}};
      if (abelianization(expected_affine(p, q)) != affine || abelianization(expected_projective(p, q)) != projective)
        l.fail(name(c) + " expected presentations");
      if (!r.battery_numeric_affine || r.battery_numeric_affine->abelian != affine)
        l.fail(name(c) + " numeric affine");
      if (!r.battery_numeric_projective || r.battery_numeric_projective->abelian != projective)
        l.fail(name(c) + " numeric projective");
    }
    report(3, "abelianization", l, "affine Z^q, projective Z^(q-1) + Z/p in every case");
  }

  {
    Line l;
    for (Case c : kCases) {
      const RunReport& r = base.at(c);
      const LaurentPoly f = closed_form_generic_linear(c.first, c.second);
      if (!r.alexander_numeric || *r.alexander_numeric != f) l.fail(name(c) + " numeric");
      if (!r.alexander_symbolic || *r.alexander_symbolic != f) l.fail(name(c) + " symbolic");
    }
    const auto& r32 = base.at({3, 2});
    if (!r32.alexander_numeric || to_string(*r32.alexander_numeric) != "t^5 - t^4 + t^3 - t^2 + t - 1")
      l.fail("(3,2) is not t^5 - t^4 + t^3 - t^2 + t - 1");
    report(4, "Alexander polynomial", l, "numeric = symbolic = closed form; (3,2): t^5 - t^4 + t^3 - t^2 + t - 1");
  }

  {
    Line l;
    std::ostringstream s;
    for (Case c : kCases) {
      check_infinity(base.at(c), c, l);
      if (base.at(c).infinity) s << name(c) << " " << base.at(c).infinity->exponent_sum << " ";
    }
    if (base.at({3, 2}).infinity && base.at({3, 2}).infinity->exponent_sum != 30) l.fail("(3,2) sum != 30");
    if (base.at({2, 2}).infinity && base.at({2, 2}).infinity->exponent_sum != 12) l.fail("(2,2) sum != 12");
    report(5, "monodromy at infinity", l, "exponent sums " + s.str());
  }

  {
    Line l;
    for (Case c : kCases) {
      const auto [p, q] = c;
      const RunReport& r = base.at(c);
      if (r.intersection_multiplicities.size() != static_cast<std::size_t>(q * (q - 1) / 2))
        l.fail(name(c) + " missing pairs");
      for (int m : r.intersection_multiplicities)
        if (m != p * p) l.fail(name(c) + " multiplicity " + std::to_string(m));
    }
    report(6, "intersection multiplicity", l, "p^2 for every pair");
  }

  {
    Line l;
    std::ostringstream s;
    for (int q = 2; q <= 4; ++q)
      for (int p = 2; p <= 5; ++p) {
        try {
          const TorusIdentity t = torus_form_identity(CurveSpec::roots_of_unity(p, q));
          const int c = q % 2 == 1 ? 1 : -1;
          if (!t.holds || t.c != c || !t.symbolic)
            l.fail(name({p, q}) + " c = " + std::to_string(t.c) + (t.holds ? "" : ", fails"));
        } catch (const Error& e) {
          l.fail(name({p, q}) + " " + e.what());
        }
      }
    for (Case c : kCases)
      if (!is_pass(base.at(c), "torus-form")) l.fail(name(c) + " pipeline verdict");
    report(7, "torus form", l, "exact identity with c = (-1)^(q-1), p = 2..5, q = 2..4");
  }

  {
    Line l;
    for (Case c : {Case{3, 2}, Case{4, 2}}) {
      const RunReport& r = base.at(c);
      if (!r.flex) {
        l.fail(name(c) + " no flex report");
        continue;
      }
      if (!(r.flex->all_loops == r.flex->core_loops)) l.fail(name(c) + " batteries differ");
      if (!is_pass(r, "flex-redundancy")) l.fail(name(c) + " verdict");
    }
    report(8, "flex redundancy", l, "(3,2), (4,2): identical batteries without the k >= 1 flex loops");
  }

  {
    Line l;
    const RunReport a = numeric_run(3, 2, {2.0, 1.0}, false);
    const RunReport b = numeric_run(3, 2, {3.0, 1.0}, false);
    if (!a.battery_numeric_affine || !b.battery_numeric_affine || !(*a.battery_numeric_affine == *b.battery_numeric_affine))
      l.fail("affine batteries differ");
    if (!a.battery_numeric_projective || !b.battery_numeric_projective ||
        !(*a.battery_numeric_projective == *b.battery_numeric_projective))
      l.fail("projective batteries differ");
    if (!a.alexander_numeric || !b.alexander_numeric || *a.alexander_numeric != *b.alexander_numeric)
      l.fail("Alexander polynomials differ");
    if (!a.passed() || !b.passed()) l.fail("a verdict failed");
    report(9, "alpha independence", l, "(3,2) with alpha (2,1) and (3,1) agree");
  }

  {
    Line l;
    std::size_t same_words = 0, same_action = 0;
    for (Case c : kCases) {
      const RunReport r = numeric_run(c.first, c.second, {}, false, 0.5, 128);
      check_numeric_battery(r, c, l);
      check_infinity(r, c, l);
      const RunReport& b = base.at(c);
      if (r.infinity && b.infinity && r.infinity->exponent != b.infinity->exponent)
        l.fail(name(c) + " infinity exponent changed");
      if (r.monodromy && b.monodromy) {
        bool words = r.monodromy->braids.size() == b.monodromy->braids.size(), action = words;
        for (std::size_t i = 0; action && i < r.monodromy->braids.size(); ++i) {
          const BraidWord& x = r.monodromy->braids[i].braid;
          const BraidWord& y = b.monodromy->braids[i].braid;
          words = words && x == y;
          action = artin_images(x) == artin_images(y);
        }
        same_words += words ? 1 : 0;
        same_action += action ? 1 : 0;
      }
    }
    report(10, "refinement", l,
           "criteria 2 and 5 unchanged at half step and 128 segments; per-loop Artin action identical in " +
               std::to_string(same_action) + "/" + std::to_string(kCases.size()) + " cases (words in " +
               std::to_string(same_words) + ")");
  }

  std::printf("%d/10 criteria pass, %.1f s\n", 10 - failures, since(t_all));
  return failures == 0 ? 0 : 1;
}
