#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

namespace pencil {

using Complex = std::complex<double>;

struct LineSegment {
  Complex from;
  Complex to;
};

/// Circular arc starting at center + radius*exp(i*start_angle) and sweeping
/// `sweep` radians (positive = counter-clockwise).
struct ArcSegment {
  Complex center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;
};

using PathSegment = std::variant<LineSegment, ArcSegment>;

Complex segment_start(const PathSegment& s);
Complex segment_end(const PathSegment& s);
double segment_length(const PathSegment& s);
Complex segment_point(const PathSegment& s, double fraction);
PathSegment reversed_segment(const PathSegment& s);

/// Closed piecewise path in the pencil-parameter plane. Arc-length
/// parametrised; `point_at(0) == point_at(length()) == base()`.
class LoopPath {
 public:
  LoopPath() = default;
  LoopPath(Complex base, std::vector<PathSegment> segments);

  Complex base() const { return base_; }
  const std::vector<PathSegment>& segments() const { return segments_; }
  double length() const { return length_; }
  Complex point_at(double s) const;
  bool is_closed(double tol = 1e-12) const;

  /// Traverses the same route backwards.
  LoopPath reversed() const;
  /// Concatenation; both must share the base point.
  LoopPath then(const LoopPath& other) const;

  /// Index into the singular-value list of the puncture this loop encircles.
  std::optional<std::size_t> enclosed;
  /// Radius of the small circle around the enclosed puncture.
  double epsilon = 0.0;

 private:
  Complex base_{};
  std::vector<PathSegment> segments_;
  double length_ = 0.0;
};

/// Distance from `p` to the closest point of the path (sampled on arcs).
double path_distance(const LoopPath& path, Complex p);

}  // namespace pencil
