#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "cover.hpp"
#include "inner_cover.hpp"
#include "space.hpp"
#include "step_function.hpp"

namespace metrext {

// Level-n cover: one ball of radius 0.49 * 2^-n around every point, so every
// element has diameter strictly below 2^-n and points at distance >= 2^-n
// never share an element.
inline WeightedCover build_mesh_cover(const FiniteMetricSpace& space, int level) {
  if (level < 1)
    throw std::invalid_argument("mesh cover level must be >= 1, got " +
                                std::to_string(level));
  const double radius = 0.49 * std::ldexp(1.0, -level);
  const double bound = std::ldexp(1.0, -level);
  WeightedCover cover;
  for (int y = 0; y < space.size(); ++y) {
    CoverElementInfo e;
    e.center = y;
    e.radius = radius;
    for (int z = 0; z < space.size(); ++z)
      if (space.dist(z, y) < radius) e.members.push_back(z);
    cover.elements.push_back(std::move(e));
  }
  for (const auto& e : cover.elements)
    for (int z1 : e.members)
      for (int z2 : e.members)
        if (space.dist(z1, z2) >= bound)
          throw std::logic_error("mesh element diameter bound violated at level " +
                                 std::to_string(level));
  build_hat_weights(space, cover);
  return cover;
}

// Lazily built, cached mesh covers.  Construction of a level is guarded by a
// mutex; once built, lookups are pure and safe to share.
class MeshCoverFamily {
 public:
  explicit MeshCoverFamily(const FiniteMetricSpace& space) : space_(&space) {}

  const WeightedCover& level(int n) const {
    std::lock_guard<std::mutex> lock(mu_);
    return level_nolock(n);
  }

 protected:
  const WeightedCover& level_nolock(int n) const {
    auto it = cache_.find(n);
    if (it == cache_.end())
      it = cache_.emplace(n, build_mesh_cover(*space_, n)).first;
    return it->second;
  }

  const FiniteMetricSpace* space_;
  mutable std::mutex mu_;
  mutable std::map<int, WeightedCover> cache_;
};

// Level-n step function of y: weight lambda^n_U(y) on each level-n element U
// containing y, in element order.
inline StepFunction map_hn(const WeightedCover& cover_n, int y, int level) {
  return step_from_weights(cover_n.weights_for(y), [&](int e) {
    return Label::cover_element(level, e);
  });
}

// Splice of the level-n function and the embedding h: cover labels on
// [0, s) and h(y) on [s, 1), both time-rescaled, where s = min(1, n*d(y,X)).
// Subset points (s = 0) give the constant x-point function.
inline StepFunction map_fn(const FiniteMetricSpace& space, const SubsetSpec& subset,
                           const InnerCover& inner, const WeightedCover& cover_n,
                           int y, int level) {
  if (subset.contains(y)) return StepFunction::constant(Label::x_point(y));
  const double s =
      std::min(1.0, static_cast<double>(level) * dist_to_subset(space, subset, y));
  StepFunction head = map_hn(cover_n, y, level);
  if (s >= 1.0) return head;
  const StepFunction tail = map_h(space, subset, inner, y);

  std::vector<double> b{0.0};
  std::vector<Label> v;
  const auto& hb = head.breakpoints();
  for (int i = 0; i < head.piece_count(); ++i) {
    b.push_back(i + 1 == head.piece_count() ? s : std::min(s * hb[i + 1], s));
    v.push_back(head.values()[i]);
  }
  const auto& tb = tail.breakpoints();
  for (int i = 0; i < tail.piece_count(); ++i) {
    b.push_back(i + 1 == tail.piece_count()
                    ? 1.0
                    : std::min(s + (1.0 - s) * tb[i + 1], 1.0));
    v.push_back(tail.values()[i]);
  }
  return StepFunction::canonical(b, v);
}

}  // namespace metrext
