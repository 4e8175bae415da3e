#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "space.hpp"
#include "step_function.hpp"

namespace metrext {

struct CoverElementInfo {
  int center = -1;
  double radius = 0.0;
  std::vector<int> members;  // ascending point ids, the open ball around center
};

struct PointWeight {
  int element = -1;  // index into WeightedCover::elements
  double weight = 0.0;
};

// A cover of (part of) the space by open balls, with a hat-function partition
// of unity on the covered points: raw weight max(0, 1 - d(z, center)/radius),
// normalized per point.  Elements are ordered by ascending center id.
struct WeightedCover {
  std::vector<CoverElementInfo> elements;
  std::vector<std::vector<PointWeight>> weights;  // by point id; empty = uncovered

  const std::vector<PointWeight>& weights_for(int y) const {
    const auto& w = weights.at(static_cast<std::size_t>(y));
    if (w.empty())
      throw std::invalid_argument("point " + std::to_string(y) +
                                  " is not covered by this cover");
    return w;
  }
};

// Fills WeightedCover::weights from the element list.  Raw hat weights are
// strictly positive on members (membership is the open ball), and every
// covered point normalizes to total weight 1.
inline void build_hat_weights(const FiniteMetricSpace& space, WeightedCover& cover) {
  cover.weights.assign(static_cast<std::size_t>(space.size()), {});
  for (std::size_t e = 0; e < cover.elements.size(); ++e) {
    const auto& elem = cover.elements[e];
    for (int z : elem.members) {
      const double hat = 1.0 - space.dist(z, elem.center) / elem.radius;
      cover.weights[static_cast<std::size_t>(z)].push_back(
          {static_cast<int>(e), hat});
    }
  }
  for (auto& ws : cover.weights) {
    if (ws.empty()) continue;
    double total = 0.0;
    for (const auto& pw : ws) total += pw.weight;
    for (auto& pw : ws) pw.weight /= total;
  }
}

// Step function whose pieces are the positive weights of ws in element order;
// label_of maps an element index to the piece's label.  The final breakpoint
// is forced to exactly 1.
template <class LabelOf>
inline StepFunction step_from_weights(const std::vector<PointWeight>& ws,
                                      LabelOf&& label_of) {
  std::vector<double> b{0.0};
  std::vector<Label> v;
  double acc = 0.0;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    acc += ws[k].weight;
    b.push_back(k + 1 == ws.size() ? 1.0 : std::min(acc, 1.0));
    v.push_back(label_of(ws[k].element));
  }
  return StepFunction::canonical(b, v);
}

}  // namespace metrext
