#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metrext {

// A label is either a point of the base subset X or an element of some cover
// level.  Cover elements at different levels are never equal, even when they
// share an index.
struct Label {
  enum class Kind { XPoint, CoverElement };

  Kind kind = Kind::XPoint;
  int point = -1;  // XPoint: point id in Y
  int level = 0;   // CoverElement: cover level (>= 1)
  int index = -1;  // CoverElement: element index within its level

  static Label x_point(int id) {
    Label l;
    l.kind = Kind::XPoint;
    l.point = id;
    return l;
  }

  static Label cover_element(int level, int index) {
    Label l;
    l.kind = Kind::CoverElement;
    l.level = level;
    l.index = index;
    return l;
  }

  bool is_x_point() const { return kind == Kind::XPoint; }

  friend bool operator==(const Label& a, const Label& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::XPoint) return a.point == b.point;
    return a.level == b.level && a.index == b.index;
  }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }

  // Total order used only to make support sets and error messages deterministic.
  friend bool operator<(const Label& a, const Label& b) {
    if (a.kind != b.kind) return a.kind == Kind::XPoint;
    if (a.kind == Kind::XPoint) return a.point < b.point;
    if (a.level != b.level) return a.level < b.level;
    return a.index < b.index;
  }
};

inline std::string to_string(const Label& l) {
  if (l.is_x_point()) return "X(" + std::to_string(l.point) + ")";
  return "C(" + std::to_string(l.level) + "," + std::to_string(l.index) + ")";
}

// Right-open step function [0,1) -> labels in canonical form: breakpoints are
// strictly increasing from 0.0 to exactly 1.0 and adjacent pieces carry
// distinct values.
class StepFunction {
 public:
  static StepFunction constant(Label v) {
    StepFunction f;
    f.b_ = {0.0, 1.0};
    f.v_ = {v};
    return f;
  }

  // Canonicalizes a piece list: drops zero-width pieces, merges adjacent equal
  // values.  The breakpoint list must run from 0 to 1 without decreasing.
  static StepFunction canonical(const std::vector<double>& breakpoints,
                                const std::vector<Label>& values) {
    if (breakpoints.size() != values.size() + 1 || values.empty())
      throw std::invalid_argument(
          "step function needs k+1 breakpoints for k >= 1 values, got " +
          std::to_string(breakpoints.size()) + " breakpoints for " +
          std::to_string(values.size()) + " values");
    for (double t : breakpoints)
      if (!std::isfinite(t))
        throw std::invalid_argument("step function breakpoint is not finite");
    if (breakpoints.front() != 0.0)
      throw std::invalid_argument("step function must start at 0, got " +
                                  std::to_string(breakpoints.front()));
    if (breakpoints.back() != 1.0)
      throw std::invalid_argument("step function must end at 1, got " +
                                  std::to_string(breakpoints.back()));
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
      if (breakpoints[i] > breakpoints[i + 1])
        throw std::invalid_argument(
            "step function breakpoints decrease at position " + std::to_string(i));

    StepFunction f;
    f.b_.push_back(0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double hi = breakpoints[i + 1];
      if (hi == breakpoints[i]) continue;  // zero-width piece
      if (!f.v_.empty() && f.v_.back() == values[i]) {
        f.b_.back() = hi;  // merge with previous equal-valued piece
      } else {
        f.v_.push_back(values[i]);
        f.b_.push_back(hi);
      }
    }
    return f;
  }

  int piece_count() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& breakpoints() const { return b_; }
  const std::vector<Label>& values() const { return v_; }
  double width(int i) const { return b_[i + 1] - b_[i]; }

  const Label& value_at(double t) const {
    if (!(t >= 0.0 && t < 1.0))
      throw std::invalid_argument("step function evaluated outside [0,1) at " +
                                  std::to_string(t));
    auto it = std::upper_bound(b_.begin(), b_.end(), t);
    return v_[static_cast<std::size_t>(it - b_.begin()) - 1];
  }

  // Distinct values, sorted; the image of [0,1).
  std::vector<Label> support() const {
    std::vector<Label> s = v_;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  friend bool operator==(const StepFunction& f, const StepFunction& g) {
    return f.b_ == g.b_ && f.v_ == g.v_;
  }

 private:
  StepFunction() = default;
  std::vector<double> b_;
  std::vector<Label> v_;
};

// Sweeps the common refinement of f and g and calls fn(width, f_value, g_value)
// for each refined piece.  Widths are positive and telescope to 1.
template <class Fn>
inline void for_each_refined(const StepFunction& f, const StepFunction& g, Fn&& fn) {
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  std::size_t i = 0, j = 0;
  double t = 0.0;
  const std::size_t nf = static_cast<std::size_t>(f.piece_count());
  const std::size_t ng = static_cast<std::size_t>(g.piece_count());
  while (i < nf && j < ng) {
    const double next = std::min(fb[i + 1], gb[j + 1]);
    if (next > t) fn(next - t, f.values()[i], g.values()[j]);
    if (fb[i + 1] == next) ++i;
    if (gb[j + 1] == next) ++j;
    t = next;
  }
}

struct RefinedPiece {
  double width;
  Label left;
  Label right;
};

inline std::vector<RefinedPiece> refine_pair(const StepFunction& f,
                                             const StepFunction& g) {
  std::vector<RefinedPiece> out;
  for_each_refined(f, g, [&](double w, const Label& a, const Label& b) {
    out.push_back({w, a, b});
  });
  return out;
}

// Exact integral of t -> q(f(t), g(t)) over [0,1): a finite sum over the common
// refinement, no quadrature.  q may throw for pairs outside its domain; the
// error propagates.
template <class Q>
inline double integrate_pair(Q&& q, const StepFunction& f, const StepFunction& g) {
  double acc = 0.0;
  for_each_refined(f, g, [&](double w, const Label& a, const Label& b) {
    acc += w * q(a, b);
  });
  return acc;
}

}  // namespace metrext
