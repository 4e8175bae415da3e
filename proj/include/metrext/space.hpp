#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace metrext {

// Shared tolerances.  kExactTol guards identities that follow from identical
// arithmetic; kAccumTol guards identities whose two sides accumulate rounding
// in different orders.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kAccumTol = 1e-9;

// Finite metric space on point ids 0..n-1.  Construction validates symmetry,
// zero diagonal, strictly positive off-diagonal entries and the triangle
// inequality (to kAccumTol, relative), and rescales so that the diameter is
// at most 1; the divisor is kept as scale().
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace from_distances(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    FiniteMetricSpace s;
    s.n_ = n;
    s.d_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw std::invalid_argument("distance matrix row " + std::to_string(i) +
                                    " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(n));
      for (int j = 0; j < n; ++j) s.d_[s.idx(i, j)] = rows[i][j];
    }
    s.validate_and_normalize();
    return s;
  }

  static FiniteMetricSpace from_flat_distances(int n, const std::vector<double>& flat) {
    if (static_cast<int>(flat.size()) != n * n)
      throw std::invalid_argument("flat distance matrix has " +
                                  std::to_string(flat.size()) +
                                  " entries, expected " + std::to_string(n * n));
    FiniteMetricSpace s;
    s.n_ = n;
    s.d_ = flat;
    s.validate_and_normalize();
    return s;
  }

  static FiniteMetricSpace from_coords(const std::vector<std::vector<double>>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n == 0) throw std::invalid_argument("point list is empty");
    const std::size_t dim = pts[0].size();
    if (dim == 0) throw std::invalid_argument("points must have dimension >= 1");
    for (const auto& p : pts)
      if (p.size() != dim)
        throw std::invalid_argument("points have inconsistent dimensions");
    FiniteMetricSpace s;
    s.n_ = n;
    s.d_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
          const double diff = pts[i][k] - pts[j][k];
          acc += diff * diff;
        }
        s.d_[s.idx(i, j)] = std::sqrt(acc);
      }
    s.coords_ = pts;
    s.validate_and_normalize();
    return s;
  }

  int size() const { return n_; }
  double dist(int i, int j) const { return d_[idx(i, j)]; }
  double scale() const { return scale_; }
  double diameter() const { return diameter_; }
  bool has_coords() const { return !coords_.empty(); }
  const std::vector<std::vector<double>>& coords() const { return coords_; }
  const std::vector<double>& flat_distances() const { return d_; }

 private:
  FiniteMetricSpace() = default;

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  void validate_and_normalize() {
    if (n_ < 1) throw std::invalid_argument("space needs at least one point");
    double maxd = 0.0;
    for (int i = 0; i < n_; ++i) {
      if (!(d_[idx(i, i)] == 0.0))
        throw std::invalid_argument("nonzero diagonal entry d(" + std::to_string(i) +
                                    "," + std::to_string(i) + ") = " +
                                    std::to_string(d_[idx(i, i)]));
      for (int j = 0; j < n_; ++j) {
        const double v = d_[idx(i, j)];
        if (!std::isfinite(v))
          throw std::invalid_argument("non-finite distance d(" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        if (v != d_[idx(j, i)])
          throw std::invalid_argument("asymmetric distances: d(" + std::to_string(i) +
                                      "," + std::to_string(j) + ") = " + std::to_string(v) +
                                      " but d(" + std::to_string(j) + "," +
                                      std::to_string(i) + ") = " +
                                      std::to_string(d_[idx(j, i)]));
        if (i != j && !(v > 0.0))
          throw std::invalid_argument("distinct points " + std::to_string(i) + " and " +
                                      std::to_string(j) +
                                      " are at distance " + std::to_string(v) +
                                      "; off-diagonal distances must be positive");
        maxd = std::max(maxd, v);
      }
    }
    scale_ = 1.0;
    if (maxd > 1.0) {
      scale_ = maxd;
      for (double& v : d_) v /= maxd;
    }
    diameter_ = 0.0;
    for (double v : d_) diameter_ = std::max(diameter_, v);
    // Triangle inequality on the normalized matrix, first violating triple wins.
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          if (i == j || j == k || i == k) continue;
          const double lhs = d_[idx(i, k)];
          const double rhs = d_[idx(i, j)] + d_[idx(j, k)];
          if (lhs > rhs + kAccumTol * std::max(1.0, lhs))
            throw std::invalid_argument(
                "triangle inequality fails for (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + "): d(" +
                std::to_string(i) + "," + std::to_string(k) + ") = " +
                std::to_string(lhs) + " > " + std::to_string(rhs));
        }
  }

  int n_ = 0;
  std::vector<double> d_;  // row-major n*n, normalized
  double scale_ = 1.0;     // divisor applied to reach diameter <= 1
  double diameter_ = 0.0;
  std::vector<std::vector<double>> coords_;
};

// The base subset X together with the distinguished pair a, b in X.
class SubsetSpec {
 public:
  SubsetSpec(std::vector<int> members, int base_a, int base_b, int space_size)
      : a_(base_a), b_(base_b) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
      if (members[i] == members[i + 1])
        throw std::invalid_argument("subset lists point " +
                                    std::to_string(members[i]) + " twice");
    if (members.size() < 2)
      throw std::invalid_argument("subset must have at least 2 points, got " +
                                  std::to_string(members.size()));
    for (int id : members)
      if (id < 0 || id >= space_size)
        throw std::invalid_argument("subset point " + std::to_string(id) +
                                    " is outside the space of size " +
                                    std::to_string(space_size));
    members_ = std::move(members);
    pos_.assign(space_size, -1);
    for (std::size_t i = 0; i < members_.size(); ++i)
      pos_[members_[i]] = static_cast<int>(i);
    if (a_ == b_)
      throw std::invalid_argument("base points a and b must be distinct, both are " +
                                  std::to_string(a_));
    if (!contains(a_))
      throw std::invalid_argument("base point a = " + std::to_string(a_) +
                                  " is not in the subset");
    if (!contains(b_))
      throw std::invalid_argument("base point b = " + std::to_string(b_) +
                                  " is not in the subset");
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int base_a() const { return a_; }
  int base_b() const { return b_; }

  bool contains(int id) const {
    return id >= 0 && id < static_cast<int>(pos_.size()) && pos_[id] >= 0;
  }

  // Position of id in the sorted member list, or -1.
  int position_or(int id) const {
    if (id < 0 || id >= static_cast<int>(pos_.size())) return -1;
    return pos_[id];
  }

  int position_of(int id) const {
    const int p = position_or(id);
    if (p < 0)
      throw std::invalid_argument("point " + std::to_string(id) +
                                  " is not in the subset");
    return p;
  }

 private:
  std::vector<int> members_;  // strictly increasing
  std::vector<int> pos_;      // id -> position, -1 when absent
  int a_;
  int b_;
};

inline double dist_to_subset(const FiniteMetricSpace& space, const SubsetSpec& subset,
                             int y) {
  double best = std::numeric_limits<double>::infinity();
  for (int x : subset.members()) best = std::min(best, space.dist(y, x));
  return best;
}

// Nearest subset point; ties break toward the lowest id (members are sorted,
// so the first minimum wins).
inline int nearest_in_subset(const FiniteMetricSpace& space, const SubsetSpec& subset,
                             int y) {
  int best = subset.members().front();
  double bestd = space.dist(y, best);
  for (int x : subset.members()) {
    const double d = space.dist(y, x);
    if (d < bestd) {
      bestd = d;
      best = x;
    }
  }
  return best;
}

}  // namespace metrext
