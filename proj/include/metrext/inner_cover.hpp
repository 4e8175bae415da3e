#pragma once

#include <vector>

#include "cover.hpp"
#include "space.hpp"
#include "step_function.hpp"

namespace metrext {

// Cover of Y \ X by one ball per outside point (radius d(y,X)/4) together with
// the map alpha sending each element to the subset point nearest its center.
// The radius choice keeps every alpha-image within 2*d(y,X) of any point the
// element's closure contains.
struct InnerCover {
  WeightedCover cover;
  std::vector<int> alpha;  // per element: nearest subset point to the center
};

inline InnerCover build_inner_cover(const FiniteMetricSpace& space,
                                    const SubsetSpec& subset) {
  InnerCover inner;
  for (int y = 0; y < space.size(); ++y) {
    if (subset.contains(y)) continue;
    CoverElementInfo e;
    e.center = y;
    e.radius = dist_to_subset(space, subset, y) / 4.0;
    for (int z = 0; z < space.size(); ++z) {
      if (subset.contains(z)) continue;
      if (space.dist(z, y) < e.radius) e.members.push_back(z);
    }
    inner.cover.elements.push_back(std::move(e));
    inner.alpha.push_back(nearest_in_subset(space, subset, y));
  }
  build_hat_weights(space, inner.cover);
  return inner;
}

// Finite subset of X attached to y: {y} on X; otherwise the alpha-images of
// every element whose closed ball contains y.  Sorted ascending.
inline std::vector<int> map_u(const FiniteMetricSpace& space, const SubsetSpec& subset,
                              const InnerCover& inner, int y) {
  if (subset.contains(y)) return {y};
  std::vector<int> out;
  for (std::size_t e = 0; e < inner.cover.elements.size(); ++e) {
    const auto& elem = inner.cover.elements[e];
    if (space.dist(y, elem.center) <= elem.radius) out.push_back(inner.alpha[e]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Step-function embedding of Y into functions with values in X: a subset point
// maps to its constant function; an outside point spends weight lambda_U(y) on
// alpha(U) for each inner-cover element U, in element order.
inline StepFunction map_h(const FiniteMetricSpace& space, const SubsetSpec& subset,
                          const InnerCover& inner, int y) {
  (void)space;
  if (subset.contains(y)) return StepFunction::constant(Label::x_point(y));
  return step_from_weights(inner.cover.weights_for(y), [&](int e) {
    return Label::x_point(inner.alpha[static_cast<std::size_t>(e)]);
  });
}

}  // namespace metrext
