#pragma once

// Complex root solving and root continuation along paths in the pencil
// parameter plane.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pencil/loop_path.hpp"

namespace pencil {

using Complex = std::complex<double>;

/// Univariate polynomial with complex coefficients, stored lowest degree first.
class UniPoly {
 public:
  explicit UniPoly(std::vector<Complex> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex leading() const { return coeffs_.back(); }

  Complex operator()(Complex x) const;
  /// Value and first derivative by Horner's scheme.
  std::pair<Complex, Complex> value_and_derivative(Complex x) const;
  /// sum |a_i| |x|^i, the natural scale for relative residuals at x.
  double magnitude_at(Complex x) const;
  /// |p(x)| / magnitude_at(x).
  double relative_residual(Complex x) const;
  /// Largest coefficient modulus.
  double scale() const;

  UniPoly operator*(const UniPoly& other) const;
  UniPoly operator+(const UniPoly& other) const;

  static UniPoly from_roots(std::span<const Complex> roots);

 private:
  std::vector<Complex> coeffs_;
};

/// Simultaneous (Aberth) iteration followed by Newton polishing. Returns
/// `degree()` roots each with relative residual below `tol`.
/// Throws NumericFailure when the iteration does not converge.
std::vector<Complex> solve_fiber_roots(const UniPoly& poly, double tol = 1e-12);

/// One-parameter family y -> f(., y). `d_dy`, when provided, returns the
/// coefficient-wise derivative in y and enables a first-order predictor.
struct PolynomialFamily {
  std::function<UniPoly(Complex)> at;
  std::function<UniPoly(Complex)> d_dy;
};

/// Strand order: points are compared by the real part of x * exp(-i*angle)
/// (descending), ties broken by the imaginary part (ascending).
struct StrandProjection {
  double angle = 0.05;

  double key(Complex x) const { return (x * std::polar(1.0, -angle)).real(); }
  double height(Complex x) const { return (x * std::polar(1.0, -angle)).imag(); }
  /// Labels sorted into slot order.
  std::vector<int> order(std::span<const Complex> points) const;
};

struct TrackOptions {
  /// Arc subdivisions per full circle; lines use the same nominal step.
  int circle_segments = 64;
  /// Multiplier on the nominal step bound (0.5 = halved).
  double step_scale = 1.0;
  /// Newton correction bound relative to the minimum root separation.
  double correction_ratio = 0.25;
  /// Per-step displacement bound relative to the minimum root separation.
  double displacement_ratio = 0.5;
  /// Roots closer than this times the fiber scale abort tracking.
  double collision_tolerance = 1e-7;
  /// Smallest admissible step as a fraction of the loop length.
  double min_step_fraction = 1e-9;
  /// Residual bound for accepted points.
  double residual_tolerance = 1e-10;
  StrandProjection projection{};
};

/// Adjacent transposition in the strand order. `slot` is 1-based: the
/// strands at slots `slot` and `slot + 1` exchange places. `first` is the
/// label that occupied `slot` before the event.
struct CrossingEvent {
  std::size_t step = 0;
  int slot = 0;
  int first = 0;
  int second = 0;
  int sign = 0;
};

struct TrackedFiber {
  double t = 0.0;
  /// roots[label], labels 0..d-1 fixed by the slot order at t = 0.
  std::vector<Complex> roots;
  double min_separation = 0.0;
};

struct TrackResult {
  TrackedFiber end;
  std::vector<CrossingEvent> events;
  /// permutation[label] = slot (0-based) of that strand at the loop end.
  std::vector<int> permutation;
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
};

double min_pairwise_distance(std::span<const Complex> points);

/// Continues `start_roots` (the roots of family.at(loop.base())) along the
/// loop, recording every change of the strand order.
TrackResult track_loop(const PolynomialFamily& family, const LoopPath& loop,
                       std::span<const Complex> start_roots,
                       const TrackOptions& options = {});

/// Optional observer receiving (parameter, roots-by-label) after each step.
using TrackObserver = std::function<void(double, std::span<const Complex>)>;
TrackResult track_loop(const PolynomialFamily& family, const LoopPath& loop,
                       std::span<const Complex> start_roots, const TrackOptions& options,
                       const TrackObserver& observer);

/// Crossing events of the straight-line interpolation between two
/// configurations given by label. `order` (slot -> label) is updated in place.
/// Returns false when two transpositions are not resolvable in time order.
bool interpolate_crossings(std::span<const Complex> from, std::span<const Complex> to,
                           std::vector<int>& order, const StrandProjection& projection,
                           std::size_t step, std::vector<CrossingEvent>& events);

}  // namespace pencil
