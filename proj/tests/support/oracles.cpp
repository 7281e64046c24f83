#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using pencil::Complex;

namespace {

constexpr double kAngle = 0.05;

double key(Complex x) { return (x * std::polar(1.0, -kAngle)).real(); }
double height(Complex x) { return (x * std::polar(1.0, -kAngle)).imag(); }

// Strand labels in slot order: key descending, ties by height ascending.
std::vector<int> slot_order(const std::vector<Complex>& pts) {
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double ka = key(pts[static_cast<std::size_t>(a)]), kb = key(pts[static_cast<std::size_t>(b)]);
    if (ka != kb) return ka > kb;
    return height(pts[static_cast<std::size_t>(a)]) < height(pts[static_cast<std::size_t>(b)]);
  });
  return idx;
}

struct Fiber {
  const pencil::CurveSpec& spec;

  // Continue each labelled root to parameter y: the p-th root of psi_j(y)
  // closest to its previous position.
  std::vector<Complex> advance(const std::vector<Complex>& prev, const std::vector<int>& comp,
                               Complex y) const {
    std::vector<Complex> out(prev.size());
    const int p = spec.p;
    for (std::size_t s = 0; s < prev.size(); ++s) {
      const Complex alpha = spec.alphas[static_cast<std::size_t>(comp[s])];
      const Complex psi = y - alpha * std::pow(y, p);
      const Complex r0 = std::polar(std::pow(std::abs(psi), 1.0 / p), std::arg(psi) / p);
      Complex best = r0;
      double bd = std::abs(r0 - prev[s]);
      for (int k = 1; k < p; ++k) {
        const Complex c = r0 * std::polar(1.0, 2.0 * M_PI * k / p);
        if (std::abs(c - prev[s]) < bd) {
          bd = std::abs(c - prev[s]);
          best = c;
        }
      }
      out[s] = best;
    }
    return out;
  }
};

void resolve(const Fiber& f, const pencil::LoopPath& loop, const std::vector<int>& comp, double s0, double s1,
             const std::vector<Complex>& a, const std::vector<Complex>& b, std::vector<int>& letters, int depth) {
  const auto oa = slot_order(a), ob = slot_order(b);
  if (oa == ob) return;
  // Adjacent transpositions taking oa to ob, if the change is only that.
  std::vector<std::size_t> swaps;
  bool swaps_only = true;
  for (std::size_t i = 0; i < oa.size(); ++i) {
    if (oa[i] == ob[i]) continue;
    if (i + 1 < oa.size() && oa[i] == ob[i + 1] && oa[i + 1] == ob[i]) {
      swaps.push_back(i);
      ++i;
    } else {
      swaps_only = false;
      break;
    }
  }
  // Disjoint swaps at one instant happen by symmetry (x -> -x for even p);
  // they commute, so their order is irrelevant.
  if ((swaps_only && swaps.size() == 1) || depth > 48) {
    if (!swaps_only) throw std::runtime_error("fine_step_braid: unresolvable crossing");
    for (std::size_t k : swaps) {
      const auto leaving = static_cast<std::size_t>(oa[k]);
      const auto entering = static_cast<std::size_t>(oa[k + 1]);
      const double h_leave = 0.5 * (height(a[leaving]) + height(b[leaving]));
      const double h_enter = 0.5 * (height(a[entering]) + height(b[entering]));
      const int g = static_cast<int>(k) + 1;
      letters.push_back(h_leave > h_enter ? g : -g);
    }
    return;
  }
  const double sm = 0.5 * (s0 + s1);
  const auto m = f.advance(a, comp, loop.point_at(sm));
  resolve(f, loop, comp, s0, sm, a, m, letters, depth + 1);
  resolve(f, loop, comp, sm, s1, m, b, letters, depth + 1);
}

}  // namespace

pencil::BraidWord fine_step_braid(const pencil::CurveSpec& spec, const pencil::LoopPath& loop, int steps) {
  const Fiber f{spec};
  const Complex y0 = loop.base();
  // Start fiber in closed form, labelled by slot order.
  std::vector<Complex> pts;
  std::vector<int> comp;
  for (int j = 0; j < spec.q; ++j) {
    const Complex psi = y0 - spec.alphas[static_cast<std::size_t>(j)] * std::pow(y0, spec.p);
    for (int k = 0; k < spec.p; ++k) {
      pts.push_back(std::polar(std::pow(std::abs(psi), 1.0 / spec.p), (std::arg(psi) + 2.0 * M_PI * k) / spec.p));
      comp.push_back(j);
    }
  }
  const auto order = slot_order(pts);
  std::vector<Complex> cur;
  std::vector<int> cur_comp;
  for (int l : order) {
    cur.push_back(pts[static_cast<std::size_t>(l)]);
    cur_comp.push_back(comp[static_cast<std::size_t>(l)]);
  }
  std::vector<int> letters;
  const double L = loop.length();
  for (int i = 0; i < steps; ++i) {
    const double s0 = L * i / steps, s1 = L * (i + 1) / steps;
    const auto next = f.advance(cur, cur_comp, loop.point_at(s1));
    resolve(f, loop, cur_comp, s0, s1, cur, next, letters, 0);
    cur = next;
  }
  return pencil::BraidWord(spec.degree(), letters);
}

PermGroup generate(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<int> h(static_cast<std::size_t>(degree));
      for (int x = 0; x < degree; ++x) h[static_cast<std::size_t>(x)] = g[static_cast<std::size_t>(queue[i][static_cast<std::size_t>(x)])];
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return {queue, degree};
}

PermGroup cyclic(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
  return generate(n, {r});
}
PermGroup symmetric3() { return generate(3, {{1, 0, 2}, {1, 2, 0}}); }
PermGroup dihedral4() { return generate(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}); }
PermGroup alternating4() { return generate(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }
PermGroup symmetric4() { return generate(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }

std::uint64_t brute_force_homs(const pencil::Presentation& P, const PermGroup& G) {
  const int n = P.generator_count();
  const auto order = G.elements.size();
  const int deg = G.degree;
  auto compose = [deg](const std::vector<int>& x, const std::vector<int>& y) {  // x then y
    std::vector<int> z(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) z[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])];
    return z;
  };
  auto invert = [deg](const std::vector<int>& x) {
    std::vector<int> z(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) z[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i;
    return z;
  };
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  const std::vector<int>& id = G.elements.front();
  while (true) {
    bool ok = true;
    for (const auto& r : P.relators) {
      std::vector<int> acc = id;
      for (int l : r.letters()) {
        const auto& g = G.elements[choice[static_cast<std::size_t>(std::abs(l) - 1)]];
        acc = compose(acc, l > 0 ? g : invert(g));
      }
      if (acc != id) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == order) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return count;
}

std::uint64_t abelian_homs_to_cyclic(const pencil::AbelianInvariants& a, int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < a.rank; ++i) c *= static_cast<std::uint64_t>(n);
  for (long t : a.torsion) c *= static_cast<std::uint64_t>(std::gcd(t, static_cast<long>(n)));
  return c;
}

}  // namespace oracle
