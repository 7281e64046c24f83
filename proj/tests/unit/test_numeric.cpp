#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pencil/error.hpp"
#include "pencil/numeric.hpp"

using namespace pencil;

namespace {

LoopPath unit_circle() {
  return LoopPath(Complex(1.0, 0.0), {ArcSegment{Complex(0.0, 0.0), 1.0, 0.0, 2.0 * M_PI}});
}

// x^2 - y, the simplest branched family.
PolynomialFamily square_root_family() {
  return {[](Complex y) { return UniPoly({-y, 0.0, 1.0}); },
          [](Complex) { return UniPoly({-1.0, 0.0, 0.0}); }};
}

}  // namespace

TEST_CASE("unipoly evaluation and products") {
  const UniPoly f({-1.0, 0.0, 1.0});
  CHECK(std::abs(f(Complex(2.0, 0.0)) - Complex(3.0, 0.0)) < 1e-15);
  auto [v, d] = f.value_and_derivative(Complex(0.0, 1.0));
  CHECK(std::abs(v - Complex(-2.0, 0.0)) < 1e-15);
  CHECK(std::abs(d - Complex(0.0, 2.0)) < 1e-15);
  const std::vector<Complex> roots{1.0, -2.0, Complex(0.0, 3.0)};
  const UniPoly g = UniPoly::from_roots(roots);
  CHECK(g.degree() == 3);
  for (Complex r : roots) CHECK(g.relative_residual(r) < 1e-15);
}

TEST_CASE("roots of x^n - 1 are the n-th roots of unity") {
  for (int n : {2, 5, 12, 15}) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, 0.0);
    c.front() = -1.0;
    c.back() = 1.0;
    const auto roots = solve_fiber_roots(UniPoly(c));
    REQUIRE(roots.size() == static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const Complex z = std::polar(1.0, 2.0 * M_PI * k / n);
      double best = 1e9;
      for (Complex r : roots) best = std::min(best, std::abs(r - z));
      CHECK(best < 1e-12);
    }
  }
}

TEST_CASE("clustered roots are still separated") {
  const std::vector<Complex> roots{1.0, 1.0 + 1e-5, -1.0, Complex(0.0, 1e-4)};
  const auto found = solve_fiber_roots(UniPoly::from_roots(roots), 1e-13);
  for (Complex r : roots) {
    double best = 1e9;
    for (Complex f : found) best = std::min(best, std::abs(r - f));
    CHECK(best < 1e-9);
  }
  CHECK(min_pairwise_distance(found) > 5e-6);
}

TEST_CASE("strand projection orders by rotated real part") {
  const StrandProjection proj;
  const std::vector<Complex> pts{Complex(-1.0, 0.0), Complex(2.0, 0.0), Complex(0.5, 0.0)};
  CHECK(proj.order(pts) == std::vector<int>{1, 2, 0});
  // Conjugate pair on the imaginary axis: the rotation breaks the tie.
  const std::vector<Complex> pair{Complex(0.0, 1.0), Complex(0.0, -1.0)};
  CHECK(proj.order(pair) == std::vector<int>{0, 1});
}

TEST_CASE("tracking sqrt(y) once around the origin swaps the two strands") {
  const auto start = solve_fiber_roots(UniPoly({-1.0, 0.0, 1.0}));
  std::vector<Complex> labelled = start;
  std::sort(labelled.begin(), labelled.end(), [](Complex a, Complex b) { return a.real() > b.real(); });
  const TrackResult r = track_loop(square_root_family(), unit_circle(), labelled);
  CHECK(r.permutation == std::vector<int>{1, 0});
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].slot == 1);
  CHECK(std::abs(r.end.roots[0] - Complex(-1.0, 0.0)) < 1e-9);
  CHECK(r.steps > 0);
}

TEST_CASE("halving the step bound leaves the crossing data unchanged") {
  std::vector<Complex> start{1.0, -1.0};
  TrackOptions fine;
  fine.step_scale = 0.5;
  fine.circle_segments = 128;
  const TrackResult a = track_loop(square_root_family(), unit_circle(), start);
  const TrackResult b = track_loop(square_root_family(), unit_circle(), start, fine);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].slot == b.events[i].slot);
    CHECK(a.events[i].sign == b.events[i].sign);
  }
  CHECK(b.steps >= a.steps);
}

TEST_CASE("observer sees every accepted step") {
  std::vector<Complex> start{1.0, -1.0};
  std::size_t calls = 0;
  double last = -1.0;
  bool monotone = true;
  const TrackResult r = track_loop(square_root_family(), unit_circle(), start, {},
                                   [&](double t, std::span<const Complex> roots) {
                                     ++calls;
                                     monotone = monotone && t > last;
                                     last = t;
                                     CHECK(roots.size() == 2);
                                   });
  CHECK(monotone);
  CHECK(calls >= r.steps);
}

TEST_CASE("a loop through a branch point is rejected") {
  const LoopPath bad(Complex(1.0, 0.0), {LineSegment{Complex(1.0, 0.0), Complex(-1.0, 0.0)},
                                         LineSegment{Complex(-1.0, 0.0), Complex(1.0, 0.0)}});
  std::vector<Complex> start{1.0, -1.0};
  CHECK_THROWS_AS(track_loop(square_root_family(), bad, start), Error);
}
