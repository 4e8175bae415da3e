#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "operators.hpp"
#include "pair_function.hpp"
#include "space.hpp"

namespace metrext {

// A finite permutation group on the point ids of Y, closed under composition
// and inverse, containing the identity, and preserving the subset X setwise.
// Elements need not be isometries of the base metric; validation only warns
// about that.
class GroupAction {
 public:
  const std::vector<std::vector<int>>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int degree() const { return elems_.empty() ? 0 : static_cast<int>(elems_[0].size()); }
  int apply(int g, int y) const { return elems_[g][y]; }

 private:
  friend struct GroupValidation;
  explicit GroupAction(std::vector<std::vector<int>> elems) : elems_(std::move(elems)) {}
  std::vector<std::vector<int>> elems_;
};

struct GroupValidation {
  GroupAction action;
  std::vector<std::string> warnings;

  static GroupValidation run(std::vector<std::vector<int>> perms,
                             const FiniteMetricSpace& space, const SubsetSpec& subset) {
    const int n = space.size();
    if (perms.empty()) throw std::invalid_argument("group element list is empty");
    for (std::size_t g = 0; g < perms.size(); ++g) {
      if (static_cast<int>(perms[g].size()) != n)
        throw std::invalid_argument("group element " + std::to_string(g) + " has " +
                                    std::to_string(perms[g].size()) +
                                    " entries, expected " + std::to_string(n));
      std::vector<bool> seen(n, false);
      for (int img : perms[g]) {
        if (img < 0 || img >= n || seen[img])
          throw std::invalid_argument("group element " + std::to_string(g) +
                                      " is not a permutation of the point ids");
        seen[img] = true;
      }
    }
    std::set<std::vector<int>> member(perms.begin(), perms.end());
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    if (!member.count(identity))
      throw std::invalid_argument("group does not contain the identity permutation");
    for (std::size_t g = 0; g < perms.size(); ++g)
      for (std::size_t h = 0; h < perms.size(); ++h) {
        std::vector<int> comp(n);
        for (int i = 0; i < n; ++i) comp[i] = perms[g][perms[h][i]];
        if (!member.count(comp))
          throw std::invalid_argument("group is not closed under composition: element " +
                                      std::to_string(g) + " composed with element " +
                                      std::to_string(h) + " is missing");
      }
    for (std::size_t g = 0; g < perms.size(); ++g) {
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[perms[g][i]] = i;
      if (!member.count(inv))
        throw std::invalid_argument("group is not closed under inverse: element " +
                                    std::to_string(g) + " has no inverse in the list");
    }
    for (std::size_t g = 0; g < perms.size(); ++g)
      for (int x : subset.members())
        if (!subset.contains(perms[g][x]))
          throw std::invalid_argument("group element " + std::to_string(g) +
                                      " maps subset point " + std::to_string(x) +
                                      " to " + std::to_string(perms[g][x]) +
                                      ", which leaves the subset");
    std::vector<std::string> warnings;
    for (std::size_t g = 0; g < perms.size(); ++g) {
      bool warned = false;
      for (int i = 0; i < n && !warned; ++i)
        for (int j = 0; j < n && !warned; ++j)
          if (std::abs(space.dist(perms[g][i], perms[g][j]) - space.dist(i, j)) >
              kAccumTol) {
            warnings.push_back("group element " + std::to_string(g) +
                               " is not an isometry of the base metric: d(g(" +
                               std::to_string(i) + "),g(" + std::to_string(j) +
                               ")) differs from d(" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
            warned = true;
          }
    }
    return GroupValidation{GroupAction(std::move(perms)), std::move(warnings)};
  }
};

inline GroupValidation validate_group(std::vector<std::vector<int>> perms,
                                      const FiniteMetricSpace& space,
                                      const SubsetSpec& subset) {
  return GroupValidation::run(std::move(perms), space, subset);
}

// Orbit average over Y x Y: (Af)(y,y') = mean over g of f(gy, gy').  A fixes
// exactly the invariant functions and is idempotent up to rounding.
inline PairFunction average_pairs(const PairFunction& f, const GroupAction& group) {
  if (f.domain() != PairDomain::OverY || f.size() != group.degree())
    throw std::invalid_argument("orbit average expects a pair function over Y with size " +
                                std::to_string(group.degree()));
  const int n = f.size();
  PairFunction out(PairDomain::OverY, n);
  for (int y = 0; y < n; ++y)
    for (int yp = 0; yp < n; ++yp) {
      double acc = 0.0;
      for (int g = 0; g < group.size(); ++g)
        acc += f.at(group.apply(g, y), group.apply(g, yp));
      out.at(y, yp) = acc / group.size();
    }
  return out;
}

// First (g, x, x') with |p(gx,gx') - p(x,x')| > tol, if any; p over X, indices
// reported as point ids.
inline std::optional<std::array<int, 3>> invariance_witness(const PairFunction& p,
                                                            const GroupAction& group,
                                                            const SubsetSpec& subset,
                                                            double tol) {
  for (int g = 0; g < group.size(); ++g)
    for (int x : subset.members())
      for (int xp : subset.members()) {
        const double lhs = p.at(subset.position_of(group.apply(g, x)),
                                subset.position_of(group.apply(g, xp)));
        const double rhs = p.at(subset.position_of(x), subset.position_of(xp));
        if (std::abs(lhs - rhs) > tol) return std::array<int, 3>{g, x, xp};
      }
  return std::nullopt;
}

// Average p over the group restricted to X; the result is invariant and keeps
// pseudometric/metric axioms when p has them.
inline PairFunction invariantize(const PairFunction& p, const GroupAction& group,
                                 const SubsetSpec& subset) {
  const int k = subset.size();
  PairFunction out(PairDomain::OverX, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int x = subset.members()[i];
      const int xp = subset.members()[j];
      double acc = 0.0;
      for (int g = 0; g < group.size(); ++g)
        acc += p.at(subset.position_of(group.apply(g, x)),
                    subset.position_of(group.apply(g, xp)));
      out.at(i, j) = acc / group.size();
    }
  return out;
}

// Group-invariant extension: reject non-invariant input, extend by the series
// operator, then orbit-average the output.
inline ExtensionResult extend_invariant(const Extender& ext, const PairFunction& p,
                                        const GroupAction& group,
                                        DiagVariant variant = DiagVariant::BaseDiagonal) {
  if (group.degree() != ext.space().size())
    throw std::invalid_argument("group acts on " + std::to_string(group.degree()) +
                                " points but the space has " +
                                std::to_string(ext.space().size()));
  if (auto w = invariance_witness(p, group, ext.subset(), kExactTol))
    throw std::invalid_argument(
        "input is not invariant: group element " + std::to_string((*w)[0]) +
        " moves the value at (" + std::to_string((*w)[1]) + "," +
        std::to_string((*w)[2]) + ")");
  ExtensionResult res = ext.extend_T(p, variant);
  res.output = average_pairs(res.output, group);
  res.operator_name = "I";
  return res;
}

}  // namespace metrext
