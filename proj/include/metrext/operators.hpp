#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inner_cover.hpp"
#include "mesh_cover.hpp"
#include "pair_function.hpp"
#include "space.hpp"
#include "step_function.hpp"

namespace metrext {

// How the label kernel treats a cover element paired with itself: the value of
// the input at the diagonal base pair (a,a), or literally zero.  BaseDiagonal
// is the default; the two coincide whenever the input vanishes on the
// diagonal, and only BaseDiagonal preserves non-zero constants.
enum class DiagVariant { BaseDiagonal, ZeroDiagonal };

inline std::string to_string(DiagVariant v) {
  return v == DiagVariant::BaseDiagonal ? "base-diagonal" : "zero-diagonal";
}

inline DiagVariant diag_variant_from_string(const std::string& s) {
  if (s == "base-diagonal") return DiagVariant::BaseDiagonal;
  if (s == "zero-diagonal") return DiagVariant::ZeroDiagonal;
  throw std::invalid_argument("unknown variant '" + s +
                              "' (expected base-diagonal or zero-diagonal)");
}

enum class Operator { T, S, S1, S2, I };

inline std::string to_string(Operator op) {
  switch (op) {
    case Operator::T: return "T";
    case Operator::S: return "S";
    case Operator::S1: return "S1";
    case Operator::S2: return "S2";
    case Operator::I: return "I";
  }
  return "?";
}

inline Operator operator_from_string(const std::string& s) {
  if (s == "T") return Operator::T;
  if (s == "S") return Operator::S;
  if (s == "S1") return Operator::S1;
  if (s == "S2") return Operator::S2;
  if (s == "I") return Operator::I;
  throw std::invalid_argument("unknown operator '" + s +
                              "' (expected T, S, S1, S2 or I)");
}

struct ExtensionResult {
  PairFunction output;            // over Y
  std::string operator_name;
  int stabilization_level = 0;    // series depth N; 0 for the direct S family
  std::vector<double> tails;      // row-major per-pair tail values; empty for S family
  DiagVariant variant = DiagVariant::BaseDiagonal;
  double scale = 1.0;             // normalization divisor of the base space
};

// Extension pipeline for one (space, subset) pair.  Owns the inner cover, the
// lazily built mesh covers and the per-level splice functions; all queries
// after construction are const.  Cache fills are serialized behind one mutex,
// reads of built levels are pure.
class Extender {
 public:
  Extender(FiniteMetricSpace space, SubsetSpec subset)
      : space_(std::move(space)), subset_(std::move(subset)), mesh_(space_) {
    inner_ = build_inner_cover(space_, subset_);
    pos_a_ = subset_.position_of(subset_.base_a());
    pos_b_ = subset_.position_of(subset_.base_b());
    const int n = space_.size();
    dist_.resize(n);
    nearest_.resize(n);
    h_.reserve(n);
    for (int y = 0; y < n; ++y) {
      dist_[y] = dist_to_subset(space_, subset_, y);
      nearest_[y] = nearest_in_subset(space_, subset_, y);
      h_.push_back(map_h(space_, subset_, inner_, y));
    }
    stab_ = compute_stabilization();
  }

  const FiniteMetricSpace& space() const { return space_; }
  const SubsetSpec& subset() const { return subset_; }
  const InnerCover& inner_cover() const { return inner_; }

  double dist_to_x(int y) const { return dist_[y]; }
  int nearest_x(int y) const { return nearest_[y]; }

  std::vector<int> u_set(int y) const { return map_u(space_, subset_, inner_, y); }
  const StepFunction& h(int y) const { return h_[y]; }

  const WeightedCover& mesh_cover(int level) const { return mesh_.level(level); }

  StepFunction hn(int y, int level) const {
    return map_hn(mesh_.level(level), y, level);
  }

  const StepFunction& fn(int y, int level) const {
    std::lock_guard<std::mutex> lock(fn_mu_);
    return fn_nolock(y, level);
  }

  // Label kernel: first matching clause wins.
  //   X,X               -> p(x, x')
  //   X,cover           -> (p(x,a) + p(x,b)) / 2
  //   cover,X           -> (p(a,x') + p(b,x')) / 2
  //   distinct covers   -> p(a, b)
  //   equal covers      -> p(a, a) or 0, per variant
  double eval_E(const PairFunction& p, const Label& l1, const Label& l2,
                DiagVariant variant) const {
    require_over_x(p);
    if (l1.is_x_point() && l2.is_x_point()) return p.at(pos(l1), pos(l2));
    if (l1.is_x_point())
      return 0.5 * p.at(pos(l1), pos_a_) + 0.5 * p.at(pos(l1), pos_b_);
    if (l2.is_x_point())
      return 0.5 * p.at(pos_a_, pos(l2)) + 0.5 * p.at(pos_b_, pos(l2));
    if (!(l1 == l2)) return p.at(pos_a_, pos_b_);
    return variant == DiagVariant::BaseDiagonal ? p.at(pos_a_, pos_a_) : 0.0;
  }

  // Level-n term: exact integral of the kernel along the two splice functions.
  double compute_Tn(const PairFunction& p, int y, int yp, int level,
                    DiagVariant variant) const {
    require_over_x(p);
    const StepFunction *f, *g;
    {
      std::lock_guard<std::mutex> lock(fn_mu_);
      f = &fn_nolock(y, level);
      g = &fn_nolock(yp, level);
    }
    return integrate_pair(
        [&](const Label& a, const Label& b) { return eval_E(p, a, b, variant); },
        *f, *g);
  }

  // Smallest N from which every level-n term is constant in n: all outside
  // points have n*d(y,X) >= 1 (the splice is pure cover labels), and 2^-n is
  // below the least distance between two distinct points not both in X (their
  // level-n supports are disjoint).  1 when Y = X.
  int stabilization_index() const { return stab_; }

  // The constant value of the level-n terms for n >= stabilization_index().
  double tail_value(const PairFunction& p, int y, int yp, DiagVariant variant) const {
    require_over_x(p);
    const bool in1 = subset_.contains(y), in2 = subset_.contains(yp);
    if (in1 && in2) return p.at(subset_.position_of(y), subset_.position_of(yp));
    if (in1) {
      const int r = subset_.position_of(y);
      return 0.5 * (p.at(r, pos_a_) + p.at(r, pos_b_));
    }
    if (in2) {
      const int c = subset_.position_of(yp);
      return 0.5 * (p.at(pos_a_, c) + p.at(pos_b_, c));
    }
    if (y != yp) return p.at(pos_a_, pos_b_);
    return variant == DiagVariant::BaseDiagonal ? p.at(pos_a_, pos_a_) : 0.0;
  }

  // Full series for one pair: sum 2^-n * Tn for n = 1..N plus the geometric
  // remainder 2^-N * tail, which is exact because the terms are constant from
  // N on.
  double extend_T_pair(const PairFunction& p, int y, int yp,
                       DiagVariant variant) const {
    const int N = stab_;
    double acc = 0.0;
    for (int n = 1; n <= N; ++n)
      acc += std::ldexp(compute_Tn(p, y, yp, n, variant), -n);
    acc += std::ldexp(tail_value(p, y, yp, variant), -N);
    return acc;
  }

  ExtensionResult extend_T(const PairFunction& p,
                           DiagVariant variant = DiagVariant::BaseDiagonal) const {
    require_over_x(p);
    const int n = space_.size();
    ExtensionResult res{PairFunction(PairDomain::OverY, n), "T", stab_, {},
                        variant, space_.scale()};
    res.tails.assign(static_cast<std::size_t>(n) * n, 0.0);
    const bool sym = p.is_symmetric();
    for (int y = 0; y < n; ++y)
      for (int yp = sym ? y : 0; yp < n; ++yp) {
        const double v = extend_T_pair(p, y, yp, variant);
        const double t = tail_value(p, y, yp, variant);
        res.output.at(y, yp) = v;
        res.tails[static_cast<std::size_t>(y) * n + yp] = t;
        if (sym && yp != y) {
          // The kernel is symmetric for symmetric p, so mirroring reproduces
          // the transposed evaluation bit for bit.
          res.output.at(yp, y) = v;
          res.tails[static_cast<std::size_t>(yp) * n + y] = t;
        }
      }
    return res;
  }

  // min(d(y,y'), d(y,X) + d(y',X)): the largest pseudometric below d that
  // vanishes between points at distance 0 from X.
  double dstar(int y, int yp) const {
    return std::min(space_.dist(y, yp), dist_[y] + dist_[yp]);
  }

  // Direct extensions along h: S integrates p over the pair of embeddings;
  // S1 adds p(a,b) * dstar, S2 adds (p(a,b) - p(a,a)) * dstar.
  ExtensionResult extend_S_family(const PairFunction& p, Operator which) const {
    require_over_x(p);
    if (which != Operator::S && which != Operator::S1 && which != Operator::S2)
      throw std::invalid_argument("extend_S_family expects S, S1 or S2, got " +
                                  to_string(which));
    const int n = space_.size();
    ExtensionResult res{PairFunction(PairDomain::OverY, n), to_string(which), 0, {},
                        DiagVariant::BaseDiagonal, space_.scale()};
    const double pab = p.at(pos_a_, pos_b_);
    const double paa = p.at(pos_a_, pos_a_);
    const double coeff = which == Operator::S ? 0.0
                         : which == Operator::S1 ? pab
                                                 : pab - paa;
    const bool sym = p.is_symmetric();
    auto q = [&](const Label& l1, const Label& l2) {
      if (!l1.is_x_point() || !l2.is_x_point())
        throw std::runtime_error("pair function over X evaluated at (" +
                                 to_string(l1) + ", " + to_string(l2) + ")");
      return p.at(pos(l1), pos(l2));
    };
    for (int y = 0; y < n; ++y)
      for (int yp = sym ? y : 0; yp < n; ++yp) {
        double v = integrate_pair(q, h_[y], h_[yp]);
        if (coeff != 0.0) v += coeff * dstar(y, yp);
        res.output.at(y, yp) = v;
        if (sym && yp != y) res.output.at(yp, y) = v;
      }
    return res;
  }

 private:
  void require_over_x(const PairFunction& p) const {
    if (p.domain() != PairDomain::OverX || p.size() != subset_.size())
      throw std::invalid_argument(
          "expected a pair function over X with size " +
          std::to_string(subset_.size()) + ", got " + to_string(p.domain()) +
          " with size " + std::to_string(p.size()));
  }

  int pos(const Label& l) const {
    const int r = subset_.position_or(l.point);
    if (r < 0)
      throw std::runtime_error("pair function over X evaluated at " + to_string(l) +
                               ", which is outside the subset");
    return r;
  }

  const StepFunction& fn_nolock(int y, int level) const {
    auto it = fn_cache_.find(level);
    if (it == fn_cache_.end()) {
      const WeightedCover& cover = mesh_.level(level);
      std::vector<StepFunction> fns;
      fns.reserve(space_.size());
      for (int z = 0; z < space_.size(); ++z)
        fns.push_back(map_fn(space_, subset_, inner_, cover, z, level));
      it = fn_cache_.emplace(level, std::move(fns)).first;
    }
    return it->second[y];
  }

  int compute_stabilization() const {
    int N = 1;
    for (int y = 0; y < space_.size(); ++y) {
      if (subset_.contains(y)) continue;
      int n = std::max(1, static_cast<int>(std::ceil(1.0 / dist_[y])) - 2);
      while (static_cast<double>(n) * dist_[y] < 1.0) ++n;
      N = std::max(N, n);
    }
    double gap = std::numeric_limits<double>::infinity();
    for (int y = 0; y < space_.size(); ++y)
      for (int yp = y + 1; yp < space_.size(); ++yp) {
        if (subset_.contains(y) && subset_.contains(yp)) continue;
        gap = std::min(gap, space_.dist(y, yp));
      }
    if (std::isfinite(gap))
      while (std::ldexp(1.0, -N) >= gap) ++N;
    return N;
  }

  FiniteMetricSpace space_;
  SubsetSpec subset_;
  InnerCover inner_;
  std::vector<double> dist_;
  std::vector<int> nearest_;
  std::vector<StepFunction> h_;
  int stab_ = 1;
  int pos_a_ = -1;
  int pos_b_ = -1;
  MeshCoverFamily mesh_;
  mutable std::mutex fn_mu_;
  mutable std::map<int, std::vector<StepFunction>> fn_cache_;
};

}  // namespace metrext
