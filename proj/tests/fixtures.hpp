#pragma once

// Two hand-checked instances used across the tests.
//
// line4: four points on a line at 0, 1, 0.4, 0.6 with X = {0,1}.  Both outside
// points sit 0.4 from X and 0.2 apart, so every cover, weight and series level
// is small enough to carry by hand.
//
// square5: the unit-square corner points plus the center, X = the corners,
// with the 4-rotation group.  All extension values are dyadic.

#include <metrext/metrext.hpp>

inline metrext::Instance make_line4() {
  using namespace metrext;
  FiniteMetricSpace sp = FiniteMetricSpace::from_coords({{0.0}, {1.0}, {0.4}, {0.6}});
  SubsetSpec sub({0, 1}, 0, 1, sp.size());
  return Instance{std::move(sp), std::move(sub), std::nullopt, std::nullopt, {}};
}

// the metric on X = {0,1} with p(0,1) = 1
inline metrext::PairFunction line4_p() {
  metrext::PairFunction p(metrext::PairDomain::OverX, 2);
  p.at(0, 1) = p.at(1, 0) = 1.0;
  return p;
}

inline metrext::Instance make_square5() {
  using namespace metrext;
  FiniteMetricSpace sp = FiniteMetricSpace::from_coords(
      {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}, {0.0, 0.0}});
  SubsetSpec sub({0, 1, 2, 3}, 0, 1, sp.size());
  GroupValidation gv = validate_group(
      {{0, 1, 2, 3, 4}, {1, 2, 3, 0, 4}, {2, 3, 0, 1, 4}, {3, 0, 1, 2, 4}}, sp, sub);
  return Instance{std::move(sp), std::move(sub), std::move(gv.action), std::nullopt,
                  std::move(gv.warnings)};
}

// rotation-invariant metric on the corners: 0.5 between neighbours, 1 across
inline metrext::PairFunction square5_p() {
  metrext::PairFunction p(metrext::PairDomain::OverX, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) p.at(i, j) = ((i + 2) % 4 == j) ? 1.0 : 0.5;
  return p;
}
