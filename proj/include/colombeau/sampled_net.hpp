#pragma once

#include <functional>
#include <vector>

#include "colombeau/piecewise_net.hpp"
#include "colombeau/real.hpp"

namespace colombeau {

/// Geometric grid ε_k = 2^-k, k = k_min..k_max.
struct Grid {
  int k_min = 2;
  int k_max = 48;

  int size() const { return k_max - k_min + 1; }
  Real eps(int k) const { return pow2(-k); }
  bool operator==(const Grid&) const = default;
};

class SampledNet {
 public:
  SampledNet(Grid grid, std::vector<Real> values);

  static SampledNet from_function(const Grid& grid, const std::function<Real(const Real&)>& f);
  static SampledNet sample(const PiecewiseNet& x, const Grid& grid);

  const Grid& grid() const { return grid_; }
  const Real& at(int k) const { return values_[static_cast<std::size_t>(k - grid_.k_min)]; }
  const std::vector<Real>& values() const { return values_; }
  int sign(int k) const { return sign_of(at(k)); }
  /// ln|x_ε|; -inf when the sample is zero.
  double logmag(int k) const { return log_abs(at(k)); }

  SampledNet map(const std::function<Real(const Real&)>& f) const;
  static SampledNet zip(const SampledNet& a, const SampledNet& b,
                        const std::function<Real(const Real&, const Real&)>& f);

 private:
  Grid grid_;
  std::vector<Real> values_;
};

struct SlopeFit {
  double valuation;   // +inf when the tail is all zero
  int points_used = 0;
  bool all_zero = false;
};

/// Least-squares slope of ln|x_ε| against ln ε over the last `window` grid
/// points, restricted to the points whose ratio ln|x_ε|/ln ε is within 0.25 of
/// the smallest. On comb-spliced nets this isolates the slowest branch. When
/// the ratio climbs monotonically by more than 1 (super-polynomial decay) every
/// point is used.
SlopeFit fit_valuation(const SampledNet& x, int window);

}  // namespace colombeau
