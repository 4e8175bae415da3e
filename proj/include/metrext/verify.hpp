#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "group.hpp"
#include "instance.hpp"
#include "operators.hpp"
#include "pair_function.hpp"

namespace metrext {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct CheckWitness {
  std::vector<int> points;
  std::vector<double> values;
  std::string detail;
};

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  bool expected_fail = false;  // documented failure; never affects exit status
  double tolerance = 0.0;
  std::optional<CheckWitness> witness;
  std::string notes;
};

enum class AxiomMode { Pseudometric, Metric };

// Verifies symmetry, zero diagonal and the triangle inequality (all ordered
// triples of distinct indices); in metric mode additionally strict positivity
// off the diagonal (entries must exceed tol).  First violation wins.
inline CheckReport check_metric_axioms(const PairFunction& m, AxiomMode mode,
                                       double tol,
                                       const std::string& name = "metric-axioms") {
  CheckReport rep;
  rep.check = name;
  rep.tolerance = tol;
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > tol) {
        rep.status = CheckStatus::Fail;
        rep.witness = CheckWitness{{i, j}, {m.at(i, j), m.at(j, i)}, "asymmetric pair"};
        return rep;
      }
  for (int i = 0; i < n; ++i)
    if (std::abs(m.at(i, i)) > tol) {
      rep.status = CheckStatus::Fail;
      rep.witness = CheckWitness{{i}, {m.at(i, i)}, "nonzero diagonal"};
      return rep;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const double lhs = m.at(i, k);
        const double rhs = m.at(i, j) + m.at(j, k);
        if (lhs > rhs + tol) {
          rep.status = CheckStatus::Fail;
          rep.witness = CheckWitness{{i, j, k}, {lhs, rhs}, "triangle inequality"};
          return rep;
        }
      }
  if (mode == AxiomMode::Metric)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m.at(i, j) <= tol) {
          rep.status = CheckStatus::Fail;
          rep.witness =
              CheckWitness{{i, j}, {m.at(i, j)}, "vanishing distance between distinct points"};
          return rep;
        }
  rep.status = CheckStatus::Pass;
  return rep;
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t check_seed(std::uint64_t seed, const std::string& name) {
  return fnv1a(name) ^ (seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
}

struct SuiteCtx {
  const Extender& ext;
  const std::optional<GroupAction>& group;
  Operator op;
  DiagVariant variant;
  int trials;
  std::uint64_t seed;

  int k() const { return ext.subset().size(); }
  int n() const { return ext.space().size(); }

  PairFunction maybe_invariant(PairFunction p) const {
    if (op == Operator::I) return invariantize(p, *group, ext.subset());
    return p;
  }

  PairFunction apply(const PairFunction& p) const {
    switch (op) {
      case Operator::T: return ext.extend_T(p, variant).output;
      case Operator::S:
      case Operator::S1:
      case Operator::S2: return ext.extend_S_family(p, op).output;
      case Operator::I: return extend_invariant(ext, p, *group, variant).output;
    }
    throw std::logic_error("unreachable operator");
  }

  // Pairs in scan order: strictly upper triangle row-major, then the
  // diagonal, then the strictly lower triangle.
  template <class Fn>
  void for_each_pair(Fn&& fn) const {
    const int m = n();
    for (int y = 0; y < m; ++y)
      for (int yp = y + 1; yp < m; ++yp)
        if (fn(y, yp)) return;
    for (int y = 0; y < m; ++y)
      if (fn(y, y)) return;
    for (int y = 0; y < m; ++y)
      for (int yp = 0; yp < y; ++yp)
        if (fn(y, yp)) return;
  }

  // Subset positions of {a,b} together with the supports of h(y) and h(y');
  // the series value at (y,y') only reads the input on these positions.
  std::vector<int> locality_positions(int y, int yp) const {
    std::vector<int> ids{ext.subset().base_a(), ext.subset().base_b()};
    for (const Label& l : ext.h(y).support()) ids.push_back(l.point);
    for (const Label& l : ext.h(yp).support()) ids.push_back(l.point);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> pos;
    for (int id : ids) pos.push_back(ext.subset().position_of(id));
    std::sort(pos.begin(), pos.end());
    return pos;
  }
};

inline CheckReport not_applicable(const std::string& name, const std::string& why) {
  CheckReport rep;
  rep.check = name;
  rep.status = CheckStatus::NotApplicable;
  rep.notes = why;
  return rep;
}

inline CheckReport run_constants(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "constants";
  rep.tolerance = kExactTol;
  rep.expected_fail = (c.op == Operator::S1) ||
                      ((c.op == Operator::T || c.op == Operator::I) &&
                       c.variant == DiagVariant::ZeroDiagonal);
  if (rep.expected_fail)
    rep.notes = c.op == Operator::S1
                    ? "S1 shifts nonzero constants by p(a,b)*dstar; failure documented"
                    : "zero-diagonal variant loses mass on equal cover labels; "
                      "failure documented";
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const double v = t == 0 ? 1.0 : rng.uniform(-5.0, 5.0);
    const PairFunction p = PairFunction::constant(PairDomain::OverX, c.k(), v);
    const PairFunction out = c.apply(p);
    bool bad = false;
    c.for_each_pair([&](int y, int yp) {
      if (std::abs(out.at(y, yp) - v) > kExactTol * (1.0 + std::abs(v))) {
        rep.status = CheckStatus::Fail;
        rep.witness = CheckWitness{{y, yp}, {out.at(y, yp), v}, "constant not preserved"};
        bad = true;
        return true;
      }
      return false;
    });
    if (bad) return rep;
  }
  return rep;
}

inline CheckReport run_extension_identity(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "extension-identity";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const PairFunction p = c.maybe_invariant(
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0));
    const PairFunction out = c.apply(p);
    const double tol = kExactTol * (1.0 + p.max_abs());
    for (int i = 0; i < c.k(); ++i)
      for (int j = 0; j < c.k(); ++j) {
        const int x = c.ext.subset().members()[i];
        const int xp = c.ext.subset().members()[j];
        if (std::abs(out.at(x, xp) - p.at(i, j)) > tol) {
          rep.status = CheckStatus::Fail;
          rep.witness = CheckWitness{{x, xp}, {out.at(x, xp), p.at(i, j)},
                                     "restriction differs from input"};
          return rep;
        }
      }
  }
  return rep;
}

inline CheckReport run_linearity(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "linearity";
  rep.tolerance = kAccumTol;
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const double alpha = rng.uniform(-5.0, 5.0);
    const double beta = rng.uniform(-5.0, 5.0);
    const PairFunction p = c.maybe_invariant(
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0));
    const PairFunction q = c.maybe_invariant(
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0));
    PairFunction combo(PairDomain::OverX, c.k());
    for (int i = 0; i < c.k(); ++i)
      for (int j = 0; j < c.k(); ++j)
        combo.at(i, j) = alpha * p.at(i, j) + beta * q.at(i, j);
    const PairFunction lhs = c.apply(combo);
    const PairFunction op = c.apply(p);
    const PairFunction oq = c.apply(q);
    for (int y = 0; y < c.n(); ++y)
      for (int yp = 0; yp < c.n(); ++yp) {
        const double rhs = alpha * op.at(y, yp) + beta * oq.at(y, yp);
        const double err = std::abs(lhs.at(y, yp) - rhs);
        if (err > kAccumTol * (1.0 + std::max(std::abs(lhs.at(y, yp)), std::abs(rhs)))) {
          rep.status = CheckStatus::Fail;
          rep.witness = CheckWitness{{y, yp}, {lhs.at(y, yp), rhs}, "not linear"};
          return rep;
        }
      }
  }
  return rep;
}

inline CheckReport run_positivity(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "positivity";
  rep.tolerance = kExactTol;
  rep.expected_fail = c.op == Operator::S2;
  if (rep.expected_fail)
    rep.notes = "S2 subtracts p(a,a)*dstar and can go negative; failure documented";
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    PairFunction p(PairDomain::OverX, c.k());
    if (t == 0) {
      // Nonnegative input designed to expose the S2 failure: mass only at the
      // diagonal base pair, nothing at (a,b).
      p.at(c.ext.subset().position_of(c.ext.subset().base_a()),
           c.ext.subset().position_of(c.ext.subset().base_a())) = 1.0;
    } else {
      p = random_pair_function(rng, PairDomain::OverX, c.k(), 0.0, 5.0);
    }
    p = c.maybe_invariant(std::move(p));
    const PairFunction out = c.apply(p);
    for (int y = 0; y < c.n(); ++y)
      for (int yp = 0; yp < c.n(); ++yp)
        if (out.at(y, yp) < -kExactTol) {
          rep.status = CheckStatus::Fail;
          rep.witness = CheckWitness{{y, yp}, {out.at(y, yp)},
                                     "negative value on nonnegative input"};
          return rep;
        }
  }
  return rep;
}

inline CheckReport run_pseudometric_preservation(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "pseudometric-preservation";
  rep.tolerance = kAccumTol;
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const PairFunction p =
        c.maybe_invariant(random_pseudometric(rng, PairDomain::OverX, c.k()));
    const CheckReport axioms =
        check_metric_axioms(c.apply(p), AxiomMode::Pseudometric, kAccumTol);
    if (axioms.status == CheckStatus::Fail) {
      rep.status = CheckStatus::Fail;
      rep.witness = axioms.witness;
      return rep;
    }
  }
  return rep;
}

inline CheckReport run_metric_preservation(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "metric-preservation";
  rep.tolerance = kAccumTol;
  rep.expected_fail = c.op == Operator::S;
  if (rep.expected_fail)
    rep.notes = "S collapses points whose embeddings coincide; failure documented";
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const PairFunction p =
        c.maybe_invariant(random_metric(rng, PairDomain::OverX, c.k()));
    const CheckReport axioms = check_metric_axioms(c.apply(p), AxiomMode::Metric, kAccumTol);
    if (axioms.status == CheckStatus::Fail) {
      rep.status = CheckStatus::Fail;
      rep.witness = axioms.witness;
      return rep;
    }
  }
  return rep;
}

inline CheckReport run_locality(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "locality";
  rep.tolerance = 0.0;  // bit-identical
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const int y = rng.uniform_int(0, c.n() - 1);
    const int yp = rng.uniform_int(0, c.n() - 1);
    const PairFunction p =
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0);
    const std::vector<int> pos = c.locality_positions(y, yp);
    PairFunction scrambled = p;
    bool changed = false;
    for (int i = 0; i < c.k(); ++i)
      for (int j = 0; j < c.k(); ++j) {
        const bool inside = std::binary_search(pos.begin(), pos.end(), i) &&
                            std::binary_search(pos.begin(), pos.end(), j);
        if (!inside) {
          scrambled.at(i, j) = rng.uniform(-50.0, 50.0);
          changed = true;
        }
      }
    const double v1 = c.ext.extend_T_pair(p, y, yp, c.variant);
    const double v2 = c.ext.extend_T_pair(scrambled, y, yp, c.variant);
    if (v1 != v2) {
      rep.status = CheckStatus::Fail;
      rep.witness = CheckWitness{{y, yp}, {v1, v2},
                                 "value depends on input outside the locality set"};
      return rep;
    }
    (void)changed;
  }
  return rep;
}

inline CheckReport run_monotonicity(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "monotonicity";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const int y = rng.uniform_int(0, c.n() - 1);
    const int yp = rng.uniform_int(0, c.n() - 1);
    const PairFunction p =
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0);
    const std::vector<int> pos = c.locality_positions(y, yp);
    PairFunction larger = p;
    for (int i = 0; i < c.k(); ++i)
      for (int j = 0; j < c.k(); ++j) {
        const bool inside = std::binary_search(pos.begin(), pos.end(), i) &&
                            std::binary_search(pos.begin(), pos.end(), j);
        if (inside)
          larger.at(i, j) += rng.uniform(0.0, 3.0);
        else
          larger.at(i, j) = rng.uniform(-50.0, 50.0);
      }
    const double v1 = c.ext.extend_T_pair(p, y, yp, c.variant);
    const double v2 = c.ext.extend_T_pair(larger, y, yp, c.variant);
    if (v1 > v2 + kExactTol) {
      rep.status = CheckStatus::Fail;
      rep.witness = CheckWitness{{y, yp}, {v1, v2},
                                 "value decreased under a pointwise-larger input"};
      return rep;
    }
  }
  return rep;
}

inline CheckReport run_sandwich(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "sandwich";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  for (int t = 0; t < c.trials; ++t) {
    const int y = rng.uniform_int(0, c.n() - 1);
    const int yp = rng.uniform_int(0, c.n() - 1);
    const PairFunction p =
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0);
    const std::vector<int> pos = c.locality_positions(y, yp);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i : pos)
      for (int j : pos) {
        lo = std::min(lo, p.at(i, j));
        hi = std::max(hi, p.at(i, j));
      }
    const double v = c.ext.extend_T_pair(p, y, yp, c.variant);
    if (v < lo - kExactTol || v > hi + kExactTol) {
      rep.status = CheckStatus::Fail;
      rep.witness = CheckWitness{{y, yp}, {v, lo, hi},
                                 "value escapes the input range on the locality set"};
      return rep;
    }
  }
  return rep;
}

inline CheckReport run_quantitative_floors(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "quantitative-floors";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  const int pos_a = c.ext.subset().position_of(c.ext.subset().base_a());
  const int pos_b = c.ext.subset().position_of(c.ext.subset().base_b());
  for (int t = 0; t < c.trials; ++t) {
    const PairFunction p = random_metric(rng, PairDomain::OverX, c.k());
    const PairFunction out = c.ext.extend_T(p, c.variant).output;
    const double pab = p.at(pos_a, pos_b);
    for (int y = 0; y < c.n(); ++y)
      for (int yp = 0; yp < c.n(); ++yp) {
        if (y == yp) continue;
        const bool in1 = c.ext.subset().contains(y);
        const bool in2 = c.ext.subset().contains(yp);
        if (in1 && in2) continue;
        double floor;
        if (in1 || in2) {
          // Mixed pair: after the outside point's splice turns pure cover
          // labels, each level contributes at least half of p(a,b).
          const double dist = c.ext.dist_to_x(in1 ? yp : y);
          int nstar = 1;
          while (static_cast<double>(nstar) * dist < 1.0) ++nstar;
          floor = std::ldexp(pab, -nstar - 1);
        } else {
          // Outside pair: once both splices are pure cover labels and the
          // supports separate, a full level contributes exactly p(a,b).
          const double dist = std::min(c.ext.dist_to_x(y), c.ext.dist_to_x(yp));
          const double dyy = c.ext.space().dist(y, yp);
          int nstar = 1;
          while (static_cast<double>(nstar) * dist < 1.0 ||
                 std::ldexp(1.0, -nstar + 1) >= dyy)
            ++nstar;
          floor = std::ldexp(pab, -nstar);
        }
        if (out.at(y, yp) < floor - kExactTol) {
          rep.status = CheckStatus::Fail;
          rep.witness = CheckWitness{{y, yp}, {out.at(y, yp), floor},
                                     "extended metric below its separation floor"};
          return rep;
        }
      }
  }
  return rep;
}

inline CheckReport run_tail_exactness(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "tail-exactness";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  const int reps = std::min(c.trials, 3);
  for (int t = 0; t < reps; ++t) {
    const PairFunction p =
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0);
    const ExtensionResult res = c.ext.extend_T(p, c.variant);
    const int N = res.stabilization_level;
    for (int M = N; M <= N + 10; ++M)
      for (int y = 0; y < c.n(); ++y)
        for (int yp = 0; yp < c.n(); ++yp) {
          double partial = 0.0;
          for (int n = 1; n <= M; ++n)
            partial += std::ldexp(c.ext.compute_Tn(p, y, yp, n, c.variant), -n);
          partial += std::ldexp(c.ext.tail_value(p, y, yp, c.variant), -M);
          if (std::abs(partial - res.output.at(y, yp)) > kExactTol) {
            rep.status = CheckStatus::Fail;
            rep.witness = CheckWitness{{y, yp, M},
                                       {partial, res.output.at(y, yp)},
                                       "truncated series with tail differs"};
            return rep;
          }
        }
  }
  return rep;
}

inline CheckReport run_group_invariance(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "group-invariance";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  const GroupAction& g = *c.group;
  for (int t = 0; t < c.trials; ++t) {
    const PairFunction p = c.maybe_invariant(
        random_pair_function(rng, PairDomain::OverX, c.k(), -5.0, 5.0));
    const PairFunction out = c.apply(p);
    const double tol = kExactTol * (1.0 + out.max_abs());
    for (int e = 0; e < g.size(); ++e)
      for (int y = 0; y < c.n(); ++y)
        for (int yp = 0; yp < c.n(); ++yp) {
          const double moved = out.at(g.apply(e, y), g.apply(e, yp));
          if (std::abs(moved - out.at(y, yp)) > tol) {
            rep.status = CheckStatus::Fail;
            rep.witness = CheckWitness{{e, y, yp}, {out.at(y, yp), moved},
                                       "output moves under the group"};
            return rep;
          }
        }
  }
  return rep;
}

inline CheckReport run_group_retraction(const SuiteCtx& c) {
  CheckReport rep;
  rep.check = "group-retraction";
  rep.tolerance = kExactTol;
  Rng rng(check_seed(c.seed, rep.check));
  const GroupAction& g = *c.group;
  for (int t = 0; t < c.trials; ++t) {
    const PairFunction f =
        random_pair_function(rng, PairDomain::OverY, c.n(), -5.0, 5.0);
    const PairFunction af = average_pairs(f, g);
    const PairFunction aaf = average_pairs(af, g);
    const double tol = kExactTol * (1.0 + af.max_abs());
    for (int y = 0; y < c.n(); ++y)
      for (int yp = 0; yp < c.n(); ++yp) {
        if (std::abs(aaf.at(y, yp) - af.at(y, yp)) > tol) {
          rep.status = CheckStatus::Fail;
          rep.witness = CheckWitness{{y, yp}, {af.at(y, yp), aaf.at(y, yp)},
                                     "averaging is not idempotent"};
          return rep;
        }
        for (int e = 0; e < g.size(); ++e) {
          const double moved = af.at(g.apply(e, y), g.apply(e, yp));
          if (std::abs(moved - af.at(y, yp)) > tol) {
            rep.status = CheckStatus::Fail;
            rep.witness = CheckWitness{{e, y, yp}, {af.at(y, yp), moved},
                                       "averaged function is not invariant"};
            return rep;
          }
        }
      }
  }
  return rep;
}

}  // namespace detail

// Runs every named check for the chosen operator on one instance.  Checks that
// do not apply to the operator (or need a group the instance lacks) come back
// not-applicable; documented failures carry expected_fail.  The whole run is
// deterministic in (instance, operator, variant, seed, trials), and reports
// are sorted by check name.
inline std::vector<CheckReport> run_invariant_suite(const Instance& inst, Operator op,
                                                    DiagVariant variant,
                                                    std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (op == Operator::I && !inst.group)
    throw std::invalid_argument("operator I requires a group in the instance");
  Extender ext(inst.space, inst.subset);
  detail::SuiteCtx c{ext, inst.group, op, variant, trials, seed};

  std::vector<CheckReport> reps;
  reps.push_back(detail::run_constants(c));
  reps.push_back(detail::run_extension_identity(c));
  reps.push_back(detail::run_linearity(c));
  reps.push_back(detail::run_positivity(c));
  reps.push_back(detail::run_pseudometric_preservation(c));
  reps.push_back(detail::run_metric_preservation(c));

  if (op == Operator::T) {
    reps.push_back(detail::run_locality(c));
    reps.push_back(detail::run_monotonicity(c));
    if (variant == DiagVariant::BaseDiagonal)
      reps.push_back(detail::run_sandwich(c));
    else
      reps.push_back(detail::not_applicable(
          "sandwich", "zero-diagonal variant has no lower sandwich bound; "
                      "the deviation is recorded by the constants check"));
    reps.push_back(detail::run_quantitative_floors(c));
    reps.push_back(detail::run_tail_exactness(c));
  } else {
    const std::string why = "applies to operator T";
    for (const char* name :
         {"locality", "monotonicity", "sandwich", "quantitative-floors",
          "tail-exactness"})
      reps.push_back(detail::not_applicable(name, why));
  }

  if (op == Operator::I) {
    reps.push_back(detail::run_group_invariance(c));
    reps.push_back(detail::run_group_retraction(c));
  } else {
    const std::string why = "applies to operator I on instances with a group";
    reps.push_back(detail::not_applicable("group-invariance", why));
    reps.push_back(detail::not_applicable("group-retraction", why));
  }

  std::sort(reps.begin(), reps.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return reps;
}

inline bool all_required_pass(const std::vector<CheckReport>& reps) {
  for (const auto& r : reps)
    if (r.status == CheckStatus::Fail && !r.expected_fail) return false;
  return true;
}

inline std::string format_report_table(const std::vector<CheckReport>& reps) {
  std::ostringstream out;
  std::size_t name_w = 5;
  for (const auto& r : reps) name_w = std::max(name_w, r.check.size());
  for (const auto& r : reps) {
    std::string status = to_string(r.status);
    if (r.status == CheckStatus::Fail && r.expected_fail) status = "expected-fail";
    out << status;
    for (std::size_t i = status.size(); i < 16; ++i) out << ' ';
    out << r.check;
    for (std::size_t i = r.check.size(); i < name_w + 2; ++i) out << ' ';
    if (r.witness) {
      out << "witness (";
      for (std::size_t i = 0; i < r.witness->points.size(); ++i)
        out << (i ? "," : "") << r.witness->points[i];
      out << ")";
      if (!r.witness->detail.empty()) out << " " << r.witness->detail;
      if (!r.notes.empty()) out << "; " << r.notes;
    } else if (!r.notes.empty()) {
      out << r.notes;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace metrext
