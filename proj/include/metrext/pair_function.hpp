#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace metrext {

// Whether a pair function is indexed by subset positions (OverX) or by point
// ids of the whole space (OverY).
enum class PairDomain { OverX, OverY };

inline std::string to_string(PairDomain d) {
  return d == PairDomain::OverX ? "over-X" : "over-Y";
}

// Real-valued function on ordered pairs, stored as a dense row-major matrix.
class PairFunction {
 public:
  PairFunction(PairDomain domain, int size, double fill = 0.0)
      : domain_(domain), n_(size),
        m_(static_cast<std::size_t>(size) * size, fill) {
    if (size < 1)
      throw std::invalid_argument("pair function needs size >= 1, got " +
                                  std::to_string(size));
  }

  static PairFunction constant(PairDomain domain, int size, double c) {
    return PairFunction(domain, size, c);
  }

  static PairFunction from_rows(PairDomain domain,
                                const std::vector<std::vector<double>>& rows) {
    PairFunction p(domain, static_cast<int>(rows.size()));
    for (int i = 0; i < p.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != p.n_)
        throw std::invalid_argument("pair function row " + std::to_string(i) +
                                    " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(p.n_));
      for (int j = 0; j < p.n_; ++j) p.at(i, j) = rows[i][j];
    }
    return p;
  }

  static PairFunction from_flat(PairDomain domain, int size,
                                const std::vector<double>& flat) {
    if (static_cast<int>(flat.size()) != size * size)
      throw std::invalid_argument("pair function needs " + std::to_string(size * size) +
                                  " entries, got " + std::to_string(flat.size()));
    PairFunction p(domain, size);
    p.m_ = flat;
    return p;
  }

  PairDomain domain() const { return domain_; }
  int size() const { return n_; }

  double& at(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<double>& flat() const { return m_; }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : m_) m = std::max(m, std::abs(v));
    return m;
  }

  friend bool operator==(const PairFunction& a, const PairFunction& b) {
    return a.domain_ == b.domain_ && a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  PairDomain domain_;
  int n_;
  std::vector<double> m_;
};

}  // namespace metrext
