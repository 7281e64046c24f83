#include "pencil/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pencil/error.hpp"

namespace pencil {

UniPoly::UniPoly(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

Complex UniPoly::operator()(Complex x) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Complex, Complex> UniPoly::value_and_derivative(Complex x) const {
  Complex p{}, dp{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp};
}

double UniPoly::magnitude_at(Complex x) const {
  const double r = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double UniPoly::relative_residual(Complex x) const {
  const double m = magnitude_at(x);
  return m > 0.0 ? std::abs((*this)(x)) / m : 0.0;
}

double UniPoly::scale() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Complex> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::from_roots(std::span<const Complex> roots) {
  UniPoly p({Complex{1.0}});
  for (const auto& r : roots) p = p * UniPoly({-r, Complex{1.0}});
  return p;
}

std::vector<Complex> solve_fiber_roots(const UniPoly& poly, double tol) {
  const int d = poly.degree();
  if (d < 1) throw NumericFailure("solve_fiber_roots: degree must be at least 1");
  if (!(tol > 0.0)) throw NumericFailure("solve_fiber_roots: tolerance must be positive");
  const auto& a = poly.coefficients();
  const Complex lead = a.back();
  if (std::abs(lead) == 0.0) throw NumericFailure("solve_fiber_roots: zero leading coefficient");

  if (d == 1) return {-a[0] / a[1]};

  double bound = 0.0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(a[i] / lead));
  const double radius = 1.0 + bound;

  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / d + 0.4);

  constexpr int kMaxIterations = 800;
  const double stop = tol * 1e-2;
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < d; ++k) {
      auto [p, dp] = poly.value_and_derivative(z[k]);
      if (p == Complex{}) continue;
      if (poly.relative_residual(z[k]) > stop) converged = false;
      Complex s{};
      for (int j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      const Complex ratio = (dp == Complex{}) ? Complex{1e-3} : p / dp;
      const Complex denom = 1.0 - ratio * s;
      const Complex w = denom == Complex{} ? ratio : ratio / denom;
      z[k] -= w;
    }
  }

  // Newton polish, keeping a step only when it lowers the residual.
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      auto [p, dp] = poly.value_and_derivative(r);
      if (dp == Complex{}) break;
      const Complex cand = r - p / dp;
      if (poly.relative_residual(cand) < poly.relative_residual(r)) r = cand;
      else break;
    }
  }

  std::vector<double> residuals;
  bool ok = true;
  for (const auto& r : z) {
    residuals.push_back(poly.relative_residual(r));
    if (!(residuals.back() < tol) || !std::isfinite(r.real()) || !std::isfinite(r.imag())) ok = false;
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "no convergence after " << kMaxIterations << " iterations; residuals:";
    for (double r : residuals) msg << ' ' << r;
    throw NumericFailure(msg.str());
  }
  return z;
}

std::vector<int> StrandProjection::order(std::span<const Complex> points) const {
  std::vector<int> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double ka = key(points[a]), kb = key(points[b]);
    if (ka != kb) return ka > kb;
    return height(points[a]) < height(points[b]);
  });
  return idx;
}

double min_pairwise_distance(std::span<const Complex> points) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      best = std::min(best, std::abs(points[i] - points[j]));
  return best;
}

bool interpolate_crossings(std::span<const Complex> from, std::span<const Complex> to,
                           std::vector<int>& order, const StrandProjection& projection,
                           std::size_t step, std::vector<CrossingEvent>& events) {
  const std::size_t d = from.size();
  std::vector<int> slot_of(d);
  for (std::size_t s = 0; s < d; ++s) slot_of[order[s]] = static_cast<int>(s);

  auto before_at_end = [&](int a, int b) {
    const double ka = projection.key(to[a]), kb = projection.key(to[b]);
    if (ka != kb) return ka > kb;
    return projection.height(to[a]) < projection.height(to[b]);
  };

  struct Swap {
    double t;
    int a, b;
  };
  std::vector<Swap> swaps;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      const bool a_first_now = slot_of[a] < slot_of[b];
      const bool a_first_end = before_at_end(static_cast<int>(a), static_cast<int>(b));
      if (a_first_now == a_first_end) continue;
      const double k0 = projection.key(from[a]) - projection.key(from[b]);
      const double k1 = projection.key(to[a]) - projection.key(to[b]);
      double t = (k0 == k1) ? 0.5 : k0 / (k0 - k1);
      t = std::clamp(t, 0.0, 1.0);
      swaps.push_back({t, static_cast<int>(a), static_cast<int>(b)});
    }
  }
  std::sort(swaps.begin(), swaps.end(), [](const Swap& x, const Swap& y) { return x.t < y.t; });

  std::vector<CrossingEvent> local;
  for (const auto& sw : swaps) {
    int sa = slot_of[sw.a], sb = slot_of[sw.b];
    if (std::abs(sa - sb) != 1) return false;
    const int lo = std::min(sa, sb);
    const int first = order[lo], second = order[lo + 1];
    const Complex pf = from[first] + sw.t * (to[first] - from[first]);
    const Complex ps = from[second] + sw.t * (to[second] - from[second]);
    const double hf = projection.height(pf), hs = projection.height(ps);
    if (hf == hs) return false;
    local.push_back({step, lo + 1, first, second, hf > hs ? +1 : -1});
    std::swap(order[lo], order[lo + 1]);
    slot_of[first] = lo + 1;
    slot_of[second] = lo;
  }
  if (order != projection.order(to)) return false;
  events.insert(events.end(), local.begin(), local.end());
  return true;
}

namespace {

struct StepOutcome {
  bool accepted = false;
  std::vector<Complex> roots;
  double separation = 0.0;
  // Largest correction and displacement, relative to their bounds.
  double correction_use = 0.0;
  double displacement_use = 0.0;
};

}  // namespace

TrackResult track_loop(const PolynomialFamily& family, const LoopPath& loop,
                       std::span<const Complex> start_roots, const TrackOptions& options) {
  return track_loop(family, loop, start_roots, options, TrackObserver{});
}

TrackResult track_loop(const PolynomialFamily& family, const LoopPath& loop,
                       std::span<const Complex> start_roots, const TrackOptions& options,
                       const TrackObserver& observer) {
  const std::size_t d = start_roots.size();
  const UniPoly base_poly = family.at(loop.base());
  if (static_cast<std::size_t>(base_poly.degree()) != d)
    throw MatchFailure("track_loop: start root count differs from fiber degree");

  const auto& proj = options.projection;
  const std::vector<int> initial_order = proj.order(start_roots);
  std::vector<Complex> x(d);
  for (std::size_t s = 0; s < d; ++s) x[s] = start_roots[initial_order[s]];
  const std::vector<Complex> start = x;

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);

  TrackResult result;
  double separation = min_pairwise_distance(x);
  auto fiber_scale = [](std::span<const Complex> pts) {
    double s = 0.0;
    for (const auto& p : pts) s = std::max(s, std::abs(p));
    return std::max(s, std::numeric_limits<double>::min());
  };
  if (d > 1 && separation < options.collision_tolerance * fiber_scale(x))
    throw RootCollision("start fiber already has colliding roots");

  const double total = loop.length();
  const double floor_step = options.min_step_fraction * std::max(total, 1e-300);
  const double ref_radius = loop.epsilon > 0.0 ? loop.epsilon : std::max(total, 1e-12) / 16.0;
  const double nominal =
      2.0 * std::numbers::pi * ref_radius / options.circle_segments * options.step_scale;

  auto attempt = [&](Complex y0, Complex y1) -> StepOutcome {
    StepOutcome out;
    const UniPoly p1 = family.at(y1);
    std::vector<Complex> pred = x;
    if (family.d_dy) {
      const UniPoly p0 = family.at(y0);
      const UniPoly dp0 = family.d_dy(y0);
      for (std::size_t i = 0; i < d; ++i) {
        auto [v, dv] = p0.value_and_derivative(x[i]);
        (void)v;
        if (dv != Complex{}) pred[i] = x[i] - dp0(x[i]) / dv * (y1 - y0);
      }
    }
    std::vector<Complex> nx = pred;
    for (std::size_t i = 0; i < d; ++i) {
      bool conv = false;
      for (int it = 0; it < 12; ++it) {
        auto [v, dv] = p1.value_and_derivative(nx[i]);
        if (dv == Complex{}) break;
        const Complex dx = v / dv;
        nx[i] -= dx;
        if (std::abs(dx) <= 1e-14 * std::max(1.0, std::abs(nx[i]))) {
          conv = true;
          break;
        }
      }
      if (!conv && p1.relative_residual(nx[i]) > options.residual_tolerance) return out;
      if (!std::isfinite(nx[i].real()) || !std::isfinite(nx[i].imag())) return out;
    }
    const double sep1 = d > 1 ? min_pairwise_distance(nx) : std::numeric_limits<double>::infinity();
    const double sep = std::min(separation, sep1);
    for (std::size_t i = 0; i < d; ++i) {
      const double cu = std::abs(nx[i] - pred[i]) / (options.correction_ratio * sep);
      const double du = std::abs(nx[i] - x[i]) / (options.displacement_ratio * sep);
      if (cu >= 1.0 || du >= 1.0) return out;
      if (p1.relative_residual(nx[i]) >= options.residual_tolerance) return out;
      out.correction_use = std::max(out.correction_use, cu);
      out.displacement_use = std::max(out.displacement_use, du);
    }
    out.accepted = true;
    out.roots = std::move(nx);
    out.separation = sep1;
    return out;
  };

  double travelled = 0.0;
  for (const auto& seg : loop.segments()) {
    const double len = segment_length(seg);
    if (len == 0.0) continue;
    const double nominal_fraction = std::min(1.0, nominal / len);
    double f = 0.0;
    double df = nominal_fraction;
    while (f < 1.0) {
      df = std::min(df, 1.0 - f);
      const Complex y0 = segment_point(seg, f);
      const double f1 = (f + df >= 1.0 - 1e-15) ? 1.0 : f + df;
      const Complex y1 = segment_point(seg, f1);
      StepOutcome out = attempt(y0, y1);
      if (out.accepted) {
        std::vector<int> trial_order = order;
        std::vector<CrossingEvent> trial_events;
        if (!interpolate_crossings(x, out.roots, trial_order, proj, result.steps, trial_events))
          out.accepted = false;
        else {
          order = std::move(trial_order);
          result.events.insert(result.events.end(), trial_events.begin(), trial_events.end());
        }
      }
      if (!out.accepted) {
        ++result.rejected_steps;
        df *= 0.5;
        if (df * len < floor_step) {
          std::ostringstream msg;
          msg << "step size fell below " << floor_step << " near y = " << y0
              << " (min root separation " << separation << ")";
          throw RootCollision(msg.str());
        }
        continue;
      }
      x = std::move(out.roots);
      separation = out.separation;
      if (d > 1 && separation < options.collision_tolerance * fiber_scale(x)) {
        std::ostringstream msg;
        msg << "roots within " << separation << " near y = " << y1;
        throw RootCollision(msg.str());
      }
      ++result.steps;
      f = f1;
      if (observer) observer(travelled + f * len, x);
      // Displacement scales with the step, the predictor error with its square.
      double grow = 2.0;
      if (out.displacement_use > 0.0) grow = std::min(grow, 0.8 / out.displacement_use);
      if (out.correction_use > 0.0) grow = std::min(grow, std::sqrt(0.8 / out.correction_use));
      df = std::min(std::max(grow, 0.5) * df, nominal_fraction);
    }
    travelled += len;
  }

  result.end.t = 1.0;
  result.end.roots = x;
  result.end.min_separation = separation;
  result.permutation.assign(d, 0);
  for (std::size_t s = 0; s < d; ++s) result.permutation[order[s]] = static_cast<int>(s);

  if (loop.is_closed()) {
    const double sep0 = d > 1 ? min_pairwise_distance(start) : 1.0;
    const double tol = 0.25 * sep0;
    std::vector<bool> hit(d, false);
    for (std::size_t label = 0; label < d; ++label) {
      const int s = result.permutation[label];
      if (std::abs(x[label] - start[s]) > tol || hit[s]) {
        std::ostringstream msg;
        msg << "strand " << label << " ends at " << x[label] << ", expected near " << start[s];
        throw MatchFailure(msg.str());
      }
      hit[s] = true;
    }
  }
  return result;
}

}  // namespace pencil
