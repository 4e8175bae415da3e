#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "instance.hpp"
#include "pair_function.hpp"
#include "space.hpp"
#include "step_function.hpp"

namespace metrext {

// Deterministic random source: mt19937_64 with hand-rolled uniform mappings,
// so the same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive, by rejection.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  // First k entries of a random permutation of 0..n-1, sorted.
  std::vector<int> sample_ids(int n, int k) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < k; ++i) std::swap(ids[i], ids[uniform_int(i, n - 1)]);
    ids.resize(k);
    std::sort(ids.begin(), ids.end());
    return ids;
  }

 private:
  std::mt19937_64 eng_;
};

// All-pairs shortest paths; turns any nonnegative symmetric matrix with zero
// diagonal into a pseudometric.
inline std::vector<std::vector<double>> shortest_path_closure(
    std::vector<std::vector<double>> d) {
  const int n = static_cast<int>(d.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline PairFunction random_pair_function(Rng& rng, PairDomain domain, int k,
                                         double lo, double hi) {
  PairFunction p(domain, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) p.at(i, j) = rng.uniform(lo, hi);
  return p;
}

// Random metric over k points: symmetric entries in [0.1, 1], then closed
// under shortest paths.  Off-diagonal values stay >= 0.1.
inline PairFunction random_metric(Rng& rng, PairDomain domain, int k) {
  std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) d[i][j] = d[j][i] = rng.uniform(0.1, 1.0);
  d = shortest_path_closure(std::move(d));
  return PairFunction::from_rows(domain, d);
}

// Random pseudometric: like random_metric but a fraction of the edges is
// zeroed before the closure, so distinct points may end up at distance 0.
inline PairFunction random_pseudometric(Rng& rng, PairDomain domain, int k,
                                        double zero_prob = 0.3) {
  std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const double v = rng.uniform() < zero_prob ? 0.0 : rng.uniform(0.1, 1.0);
      d[i][j] = d[j][i] = v;
    }
  d = shortest_path_closure(std::move(d));
  return PairFunction::from_rows(domain, d);
}

namespace detail {

inline Instance finish_instance(FiniteMetricSpace space, Rng& rng, int x_size) {
  const int n = space.size();
  if (x_size < 2 || x_size > n)
    throw std::invalid_argument("subset size must be between 2 and " +
                                std::to_string(n) + ", got " + std::to_string(x_size));
  std::vector<int> members = rng.sample_ids(n, x_size);
  const int a = members[0], b = members[1];
  SubsetSpec subset(members, a, b, n);
  return Instance{std::move(space), std::move(subset), std::nullopt, std::nullopt, {}};
}

}  // namespace detail

// Random point cloud in the unit cube, rejected until the least pairwise
// distance is at least min_sep_ratio times the diameter.  That keeps the
// stabilization depth of the series operator small and the separation floors
// of extended metrics well above verification tolerances.
inline std::vector<std::vector<double>> random_separated_cloud(
    Rng& rng, int n, int dim, double min_sep_ratio = 0.05, int max_attempts = 2000) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(dim));
    for (auto& p : pts)
      for (double& c : p) c = rng.uniform();
    double min_d = std::numeric_limits<double>::infinity();
    double max_d = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double acc = 0.0;
        for (int k = 0; k < dim; ++k) {
          const double diff = pts[i][k] - pts[j][k];
          acc += diff * diff;
        }
        const double d = std::sqrt(acc);
        min_d = std::min(min_d, d);
        max_d = std::max(max_d, d);
      }
    if (n < 2 || min_d >= min_sep_ratio * max_d) return pts;
  }
  throw std::runtime_error(
      "could not sample " + std::to_string(n) + " points in dimension " +
      std::to_string(dim) + " with separation ratio " + std::to_string(min_sep_ratio) +
      "; try a higher dimension or fewer points");
}

inline Instance random_point_instance(Rng& rng, int n, int x_size, int dim) {
  if (n < 2) throw std::invalid_argument("instance needs at least 2 points");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  auto pts = random_separated_cloud(rng, n, dim);
  return detail::finish_instance(FiniteMetricSpace::from_coords(pts), rng, x_size);
}

// Random instance in matrix mode: closure of symmetric entries in [0.1, 1].
inline Instance random_matrix_instance(Rng& rng, int n, int x_size) {
  if (n < 2) throw std::invalid_argument("instance needs at least 2 points");
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rng.uniform(0.1, 1.0);
  d = shortest_path_closure(std::move(d));
  return detail::finish_instance(FiniteMetricSpace::from_distances(d), rng, x_size);
}

// Cyclic or dihedral action on concentric regular m-gons (optionally plus the
// fixed center).  X is the outer ring, possibly with the center; the group
// permutes each ring and fixes the center, acting by isometries.
inline Instance random_group_instance(Rng& rng) {
  const int m = rng.uniform_int(3, 8);
  const bool two_rings = rng.uniform() < 0.5;
  // keep at least one point outside X: the inner ring, or else the center
  const bool with_center = two_rings ? rng.uniform() < 0.5 : true;
  const bool dihedral = rng.uniform() < 0.5;
  const double radii[2] = {1.0, 0.55};
  const int rings = two_rings ? 2 : 1;

  std::vector<std::vector<double>> pts;
  for (int r = 0; r < rings; ++r)
    for (int k = 0; k < m; ++k) {
      const double ang = 2.0 * 3.14159265358979323846 * k / m;
      pts.push_back({radii[r] * std::cos(ang), radii[r] * std::sin(ang)});
    }
  if (with_center) pts.push_back({0.0, 0.0});
  const int n = static_cast<int>(pts.size());

  auto ring_perm = [&](auto&& image_of_k) {
    std::vector<int> perm(n);
    for (int r = 0; r < rings; ++r)
      for (int k = 0; k < m; ++k) perm[r * m + k] = r * m + image_of_k(k);
    if (with_center) perm[n - 1] = n - 1;
    return perm;
  };
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < m; ++i)
    perms.push_back(ring_perm([&](int k) { return (k + i) % m; }));
  if (dihedral)
    for (int i = 0; i < m; ++i)
      perms.push_back(ring_perm([&](int k) { return ((i - k) % m + m) % m; }));

  std::vector<int> members(m);
  for (int k = 0; k < m; ++k) members[k] = k;
  const bool center_in_x = with_center && two_rings && rng.uniform() < 0.5;
  if (center_in_x) members.push_back(n - 1);

  FiniteMetricSpace space = FiniteMetricSpace::from_coords(pts);
  SubsetSpec subset(members, 0, 1, n);
  GroupValidation gv = validate_group(std::move(perms), space, subset);
  return Instance{std::move(space), std::move(subset), std::move(gv.action),
                  std::nullopt, std::move(gv.warnings)};
}

// Random canonical step function with up to max_pieces pieces over x-point
// labels 0..alphabet-1.  Interior breakpoints sit at odd multiples of 5e-5
// (grid-cell midpoints for a 10^4-cell grid), never on grid points.
inline StepFunction random_step_function(Rng& rng, int max_pieces, int alphabet) {
  const int pieces = rng.uniform_int(1, max_pieces);
  std::vector<int> cells;
  for (int i = 0; i + 1 < pieces; ++i) cells.push_back(rng.uniform_int(0, 9999));
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<double> b{0.0};
  for (int c : cells) b.push_back((c + 0.5) / 10000.0);
  b.push_back(1.0);
  std::vector<Label> v;
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    v.push_back(Label::x_point(rng.uniform_int(0, alphabet - 1)));
  return StepFunction::canonical(b, v);
}

}  // namespace metrext
