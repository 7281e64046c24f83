#include "pencil/monodromy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "pencil/error.hpp"

namespace pencil {

namespace {

constexpr double kPi = std::numbers::pi;

double argument_from(Complex base, Complex s) {
  const Complex v = s - base;
  // Keep the negative real axis at +pi so that it sorts last.
  if (v.imag() == 0.0 && v.real() < 0.0) return kPi;
  return std::arg(v);
}

std::string format_point(Complex z) {
  std::ostringstream out;
  out << std::setprecision(6) << z.real();
  if (z.imag() != 0.0) out << std::showpos << z.imag() << 'i';
  return out.str();
}

struct Detour {
  double t_in, t_out;
  ArcSegment arc;
};

LoopPath lasso(const std::vector<Complex>& punctures, const std::vector<double>& eps,
               const std::vector<std::size_t>& rank, std::size_t target, Complex base) {
  const Complex A = punctures[target];
  const double dist = std::abs(A - base);
  const Complex u = (A - base) / dist;
  const double end = dist - eps[target];

  std::vector<Detour> detours;
  for (std::size_t b = 0; b < punctures.size(); ++b) {
    if (b == target) continue;
    const Complex w = (punctures[b] - base) * std::conj(u);
    const double t = w.real(), h = w.imag();
    const double r = eps[b];
    if (std::abs(h) >= r) continue;
    const double half = std::sqrt(r * r - h * h);
    const double t_in = t - half, t_out = t + half;
    if (t_out <= 0.0 || t_in >= end) continue;
    if (t_in <= 0.0 || t_out >= end) {
      std::ostringstream m;
      m << "path to " << format_point(A) << " cannot clear " << format_point(punctures[b]);
      throw PathClearanceFailure(m.str());
    }
    const Complex B = punctures[b];
    const Complex q1 = base + t_in * u, q2 = base + t_out * u;
    const double a1 = std::arg(q1 - B), a2 = std::arg(q2 - B);
    double ccw = std::fmod(a2 - a1, 2.0 * kPi);
    if (ccw <= 0.0) ccw += 2.0 * kPi;
    const Complex mid = B + r * std::polar(1.0, a1 + ccw / 2.0);
    const bool ccw_passes_left = ((mid - base) * std::conj(u)).imag() > h;
    // Punctures ordered before the target are passed on the left.
    const bool want_left = rank[b] < rank[target];
    const double sweep = (ccw_passes_left == want_left) ? ccw : ccw - 2.0 * kPi;
    detours.push_back({t_in, t_out, ArcSegment{B, r, a1, sweep}});
  }
  std::sort(detours.begin(), detours.end(),
            [](const Detour& x, const Detour& y) { return x.t_in < y.t_in; });

  std::vector<PathSegment> out;
  double t = 0.0;
  for (const auto& d : detours) {
    if (d.t_in < t) throw PathClearanceFailure("overlapping detours on path to " + format_point(A));
    out.push_back(LineSegment{base + t * u, base + d.t_in * u});
    out.push_back(d.arc);
    t = d.t_out;
  }
  const Complex e = base + end * u;
  out.push_back(LineSegment{base + t * u, e});
  std::vector<PathSegment> full = out;
  full.push_back(ArcSegment{A, eps[target], std::arg(e - A), 2.0 * kPi});
  for (auto it = out.rbegin(); it != out.rend(); ++it) full.push_back(reversed_segment(*it));

  LoopPath loop(base, std::move(full));
  loop.enclosed = target;
  loop.epsilon = eps[target];
  return loop;
}

void check_clearance(const LoopPath& loop, const std::vector<Complex>& punctures,
                     const std::vector<double>& eps, std::optional<std::size_t> enclosed) {
  for (std::size_t b = 0; b < punctures.size(); ++b) {
    if (enclosed && *enclosed == b) continue;
    const double gap = path_distance(loop, punctures[b]);
    if (gap < 0.5 * eps[b]) {
      std::ostringstream m;
      m << "loop passes within " << gap << " of " << format_point(punctures[b])
        << " (clearance " << eps[b] << ")";
      throw PathClearanceFailure(m.str());
    }
  }
}

}  // namespace

LoopSystem build_loop_system(const std::vector<Complex>& punctures, Complex base) {
  const std::size_t n = punctures.size();
  LoopSystem sys;
  sys.base = base;
  sys.punctures = punctures;
  if (n == 0) return sys;

  std::vector<double> eps(n);
  double max_mod = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double nearest = std::abs(punctures[i] - base);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) nearest = std::min(nearest, std::abs(punctures[i] - punctures[k]));
    if (!(nearest > 0.0))
      throw PathClearanceFailure("puncture " + format_point(punctures[i]) + " is not isolated");
    eps[i] = 0.25 * nearest;
    max_mod = std::max(max_mod, std::abs(punctures[i]));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> angle(n), dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    angle[i] = argument_from(base, punctures[i]);
    dist[i] = std::abs(punctures[i] - base);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(angle[a] - angle[b]) > 1e-12) return angle[a] < angle[b];
    return dist[a] > dist[b];
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  for (std::size_t idx : order) {
    LoopPath loop = lasso(punctures, eps, rank, idx, base);
    check_clearance(loop, punctures, eps, idx);
    sys.loops.push_back(std::move(loop));
  }

  const double radius = 2.0 * (max_mod > 0.0 ? max_mod : 1.0);
  if (std::abs(base) >= radius) throw PathClearanceFailure("base point outside the big circle");
  const double drop = base.imag() + std::sqrt(radius * radius - base.real() * base.real());
  const Complex foot = base - Complex(0.0, drop);
  std::vector<PathSegment> segs{LineSegment{base, foot},
                                ArcSegment{Complex{}, radius, std::arg(foot), 2.0 * kPi},
                                LineSegment{foot, base}};
  sys.big_circle = LoopPath(base, std::move(segs));
  sys.big_circle.epsilon = radius;
  check_clearance(sys.big_circle, punctures, eps, std::nullopt);
  return sys;
}

std::vector<Complex> base_fiber(const CurveSpec& spec, Complex base) {
  return solve_fiber_roots(fiber_polynomial(spec, base), 1e-12);
}

LoopBraid braid_of_loop(const CurveSpec& spec, const LoopPath& loop, const TrackOptions& options) {
  const std::vector<Complex> start = base_fiber(spec, loop.base());
  const TrackResult tr = track_loop(fiber_family(spec), loop, start, options);
  LoopBraid lb;
  lb.puncture = loop.enclosed.value_or(0);
  lb.braid = braid_from_events(spec.degree(), tr.events);
  lb.permutation = permutation_of(lb.braid);
  lb.steps = tr.steps;
  lb.rejected_steps = tr.rejected_steps;
  if (lb.permutation.images != tr.permutation)
    throw InconsistentEvents("braid permutation disagrees with tracked end permutation");
  return lb;
}

std::vector<Relator> relators_of_braid(const BraidWord& b, const std::string& tag) {
  std::vector<Relator> out;
  const auto images = artin_images(b);
  for (int j = 1; j <= b.strands(); ++j) {
    FreeWord r = free_reduce(FreeWord::generator(-j) * images[static_cast<std::size_t>(j - 1)]);
    if (r.empty()) continue;
    out.push_back({std::move(r), tag + " g" + std::to_string(j), false});
  }
  return out;
}

unsigned configured_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PENCIL_MONODROMY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

namespace {

std::vector<std::pair<int, int>> compute_slot_labels(const CurveSpec& spec,
                                                     const std::vector<Complex>& roots,
                                                     const StrandProjection& proj,
                                                     const std::vector<double>& psi) {
  const auto order = proj.order(roots);
  std::vector<std::pair<int, int>> labels;
  for (int idx : order) {
    const Complex x = roots[static_cast<std::size_t>(idx)];
    double a = std::arg(x);
    if (a < 0) a += 2.0 * kPi;
    const int planet = static_cast<int>(std::lround(a * spec.p / (2.0 * kPi))) % spec.p;
    int sat = 1;
    double best = std::abs(std::abs(x) - std::pow(psi[0], 1.0 / spec.p));
    for (std::size_t j = 1; j < psi.size(); ++j) {
      const double gap = std::abs(std::abs(x) - std::pow(psi[j], 1.0 / spec.p));
      if (gap < best) {
        best = gap;
        sat = static_cast<int>(j) + 1;
      }
    }
    labels.emplace_back(planet, sat);
  }
  return labels;
}

}  // namespace

NumericMonodromy compute_monodromy(const CurveSpec& spec, const MonodromyOptions& options) {
  NumericMonodromy m;
  m.spec = spec;
  m.singular = singular_values(spec);
  m.base = base_configuration(spec);
  m.system = build_loop_system(m.singular.points(), Complex(m.base.gamma0, 0.0));
  if (options.scramble_order) std::reverse(m.system.loops.begin(), m.system.loops.end());

  const std::size_t n = m.system.loops.size();
  m.braids.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        m.braids[i] = braid_of_loop(spec, m.system.loops[i], options.track);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::min<unsigned>(options.threads ? options.threads : configured_threads(),
                         static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  const Complex base(m.base.gamma0, 0.0);
  m.slot_labels = compute_slot_labels(spec, base_fiber(spec, base), options.track.projection,
                                      m.base.psi_values);
  m.relations = relations_from_braids(m);
  return m;
}

RelationSet relations_from_braids(const NumericMonodromy& m, const std::vector<bool>& keep) {
  const int d = m.spec.degree();
  RelationSet rs;
  rs.provenance = Provenance::Numeric;
  rs.generator_count = d;
  for (int g = 1; g <= d; ++g) rs.generator_names.push_back("g" + std::to_string(g));
  rs.full_product = boundary_word(d);
  for (std::size_t i = 0; i < m.braids.size(); ++i) {
    const std::size_t puncture = m.braids[i].puncture;
    if (!keep.empty() && !keep.at(puncture)) continue;
    const std::string tag =
        "loop " + std::to_string(i + 1) + " y=" + format_point(m.system.punctures[puncture]);
    for (auto& r : relators_of_braid(m.braids[i].braid, tag)) rs.relators.push_back(std::move(r));
  }
  return rs;
}

Presentation to_presentation(const RelationSet& rs, bool include_wrap_around) {
  Presentation P;
  P.generators = rs.generator_names;
  P.provenance = rs.provenance;
  for (const auto& r : rs.relators)
    if (include_wrap_around || !r.wrap_around) P.relators.push_back(r.word);
  P.normalize();
  return P;
}

RelationSet derive_relations_numeric(const CurveSpec& spec, const MonodromyOptions& options) {
  return compute_monodromy(spec, options).relations;
}

RelationSet derive_relations_symbolic(int p, int q) {
  if (p < 2 || q < 2) throw InvalidSpec("derive_relations_symbolic needs p, q >= 2");
  RelationSet rs;
  rs.provenance = Provenance::Symbolic;
  rs.generator_count = p * q + 1;
  for (int i = 0; i < p; ++i)
    for (int j = 1; j <= q; ++j)
      rs.generator_names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
  rs.generator_names.push_back("w");
  const int w = p * q + 1;
  rs.omega_generator = w;
  auto a = [q](int i, int j) { return FreeWord::generator(a_index(q, i, j)); };
  auto omega = [w](int e) { return FreeWord::power(w, e); };
  auto h = [&](int i, int j) {
    FreeWord out;
    for (int k = 1; k < j; ++k) out *= a(i, k);
    return out;
  };
  auto g = [&](int i, int j) {
    FreeWord out;
    for (int k = j + 1; k <= q; ++k) out *= a(i, k);
    return out;
  };
  const FreeWord big_omega = omega(p);
  rs.full_product = big_omega;

  auto label = [](const char* fam, int i, int j) {
    return std::string(fam) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
  };
  // (1-2): a_{i,j} = w^(p-1) a_{i+1,j} w^-(p-1); wrap-around uses w^(2p-1).
  for (int i = 0; i < p; ++i) {
    for (int j = 1; j <= q; ++j) {
      const bool wrap = i == p - 1;
      const int e = wrap ? 2 * p - 1 : p - 1;
      const FreeWord rhs = omega(e) * a(wrap ? 0 : i + 1, j) * omega(-e);
      rs.relators.push_back({free_reduce(a(i, j).inverse() * rhs), label("(1-2)", i, j), wrap});
    }
  }
  // (2-3): a_{i,j} = C^-1 a_{i+1,j} C with C = g_{i+1,j} h_{i,j}; the
  // wrap-around conjugates a_{0,j} by h_{p-1,j}^-1 W g_{0,j}^-1, W = w^p.
  for (int i = 0; i < p; ++i) {
    for (int j = 1; j <= q; ++j) {
      FreeWord rhs;
      const bool wrap = i == p - 1;
      if (!wrap) {
        const FreeWord c = g(i + 1, j) * h(i, j);
        rhs = c.inverse() * a(i + 1, j) * c;
      } else {
        const FreeWord dj = h(p - 1, j).inverse() * big_omega * g(0, j).inverse();
        rhs = dj * a(0, j) * dj.inverse();
      }
      rs.relators.push_back({free_reduce(a(i, j).inverse() * rhs), label("(2-3)", i, j), wrap});
    }
  }
  // (S): w = a_{0,1} ... a_{0,q}
  rs.relators.push_back({free_reduce(omega(1) * (h(0, q) * a(0, q)).inverse()), "(S)", false});
  return rs;
}

InfinityReport infinity_check(const std::vector<BraidWord>& braids, int strands) {
  BraidWord total(strands, {});
  for (const auto& b : braids) total *= b;
  total = cancel_inverse_pairs(total);

  InfinityReport rep;
  rep.exponent_sum = total.exponent_sum();
  rep.expected_exponent_sum = strands * (strands - 1);
  const auto images = artin_images(total);
  const FreeWord omega = boundary_word(strands);
  auto conj_ok = [&](int e) {
    const FreeWord w = omega.pow(e);
    for (int k = 1; k <= strands; ++k)
      if (images[static_cast<std::size_t>(k - 1)] !=
          free_reduce(w * FreeWord::generator(k) * w.inverse()))
        return k;
    return 0;
  };
  const int bad_plus = conj_ok(1);
  const int bad_minus = bad_plus ? conj_ok(-1) : 1;
  if (bad_plus && bad_minus) {
    const int k = std::max(bad_plus, bad_minus);
    const FreeWord& image = images[static_cast<std::size_t>(k - 1)];
    std::string shown = to_string(image);
    if (image.size() > 24)
      shown = to_string(FreeWord(std::vector<int>(image.letters().begin(), image.letters().begin() + 24))) +
              " ... (" + std::to_string(image.size()) + " letters)";
    throw CheckFailed("composed braid sends g" + std::to_string(k) + " to " + shown +
                      ", not a conjugate by a power of omega");
  }
  rep.exponent = bad_plus ? -1 : 1;
  if (rep.exponent_sum != rep.expected_exponent_sum)
    throw CheckFailed("composed exponent sum " + std::to_string(rep.exponent_sum) + ", expected " +
                      std::to_string(rep.expected_exponent_sum));
  return rep;
}

InfinityReport infinity_check(const NumericMonodromy& m) {
  std::vector<BraidWord> braids;
  for (const auto& b : m.braids) braids.push_back(b.braid);
  return infinity_check(braids, m.spec.degree());
}

}  // namespace pencil
