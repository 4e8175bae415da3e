#pragma once

#include <optional>
#include <string>
#include <vector>

#include "group.hpp"
#include "pair_function.hpp"
#include "space.hpp"

namespace metrext {

// One problem instance: the space, the subset with its base pair, and
// optionally a validated group action and an input pair function over X.
struct Instance {
  FiniteMetricSpace space;
  SubsetSpec subset;
  std::optional<GroupAction> group;
  std::optional<PairFunction> p;
  std::vector<std::string> warnings;  // e.g. non-isometric group elements
};

}  // namespace metrext
