#include "pencil/loop_path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pencil {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(ab)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

Complex segment_point(const PathSegment& s, double fraction) {
  return std::visit(
      Overloaded{[&](const LineSegment& l) { return l.from + fraction * (l.to - l.from); },
                 [&](const ArcSegment& a) {
                   return a.center +
                          std::polar(a.radius, a.start_angle + fraction * a.sweep);
                 }},
      s);
}

Complex segment_start(const PathSegment& s) { return segment_point(s, 0.0); }
Complex segment_end(const PathSegment& s) { return segment_point(s, 1.0); }

double segment_length(const PathSegment& s) {
  return std::visit(
      Overloaded{[](const LineSegment& l) { return std::abs(l.to - l.from); },
                 [](const ArcSegment& a) { return a.radius * std::abs(a.sweep); }},
      s);
}

PathSegment reversed_segment(const PathSegment& s) {
  return std::visit(Overloaded{[](const LineSegment& l) -> PathSegment {
                                 return LineSegment{l.to, l.from};
                               },
                               [](const ArcSegment& a) -> PathSegment {
                                 return ArcSegment{a.center, a.radius,
                                                   a.start_angle + a.sweep, -a.sweep};
                               }},
                    s);
}

LoopPath::LoopPath(Complex base, std::vector<PathSegment> segments)
    : base_(base), segments_(std::move(segments)) {
  for (const auto& s : segments_) length_ += segment_length(s);
}

Complex LoopPath::point_at(double s) const {
  if (segments_.empty()) return base_;
  double acc = 0.0;
  for (const auto& seg : segments_) {
    const double len = segment_length(seg);
    if (s <= acc + len || &seg == &segments_.back()) {
      const double f = len > 0.0 ? std::clamp((s - acc) / len, 0.0, 1.0) : 1.0;
      return segment_point(seg, f);
    }
    acc += len;
  }
  return segment_end(segments_.back());
}

bool LoopPath::is_closed(double tol) const {
  if (segments_.empty()) return true;
  if (std::abs(segment_start(segments_.front()) - base_) > tol) return false;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    if (std::abs(segment_end(segments_[i]) - segment_start(segments_[i + 1])) > tol)
      return false;
  }
  return std::abs(segment_end(segments_.back()) - base_) <= tol;
}

LoopPath LoopPath::reversed() const {
  std::vector<PathSegment> rev;
  rev.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
    rev.push_back(reversed_segment(*it));
  LoopPath out(base_, std::move(rev));
  out.enclosed = enclosed;
  out.epsilon = epsilon;
  return out;
}

LoopPath LoopPath::then(const LoopPath& other) const {
  if (std::abs(other.base_ - base_) > 1e-12)
    throw std::invalid_argument("LoopPath::then: base points differ");
  std::vector<PathSegment> segs = segments_;
  segs.insert(segs.end(), other.segments_.begin(), other.segments_.end());
  LoopPath out(base_, std::move(segs));
  out.epsilon = std::min(epsilon, other.epsilon);
  return out;
}

double path_distance(const LoopPath& path, Complex p) {
  double best = std::abs(p - path.base());
  for (const auto& seg : path.segments()) {
    std::visit(Overloaded{[&](const LineSegment& l) {
                            best = std::min(best, point_segment_distance(p, l.from, l.to));
                          },
                          [&](const ArcSegment& a) {
                            const int n = std::max(8, static_cast<int>(std::ceil(
                                                           std::abs(a.sweep) * 64 /
                                                           (2 * std::numbers::pi))));
                            for (int k = 0; k < n; ++k) {
                              best = std::min(
                                  best, point_segment_distance(
                                            p, segment_point(seg, double(k) / n),
                                            segment_point(seg, double(k + 1) / n)));
                            }
                          }},
               seg);
  }
  return best;
}

}  // namespace pencil
