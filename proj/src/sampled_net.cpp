#include "colombeau/sampled_net.hpp"

#include <cmath>
#include <limits>

#include "colombeau/error.hpp"

namespace colombeau {

SampledNet::SampledNet(Grid grid, std::vector<Real> values) : grid_(grid), values_(std::move(values)) {
  if (grid_.k_min < 1 || grid_.k_max < grid_.k_min + 8)
    throw Error(ErrorCode::invalid_argument, "grid needs k_min >= 1 and k_max >= k_min + 8");
  if (static_cast<int>(values_.size()) != grid_.size())
    throw Error(ErrorCode::invalid_argument, "sample count does not match the grid");
}

SampledNet SampledNet::from_function(const Grid& grid, const std::function<Real(const Real&)>& f) {
  std::vector<Real> v;
  v.reserve(static_cast<std::size_t>(grid.size()));
  for (int k = grid.k_min; k <= grid.k_max; ++k) v.push_back(f(grid.eps(k)));
  return SampledNet(grid, std::move(v));
}

SampledNet SampledNet::sample(const PiecewiseNet& x, const Grid& grid) {
  return from_function(grid, [&](const Real& eps) { return x.eval(eps); });
}

SampledNet SampledNet::map(const std::function<Real(const Real&)>& f) const {
  std::vector<Real> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(f(x));
  return SampledNet(grid_, std::move(v));
}

SampledNet SampledNet::zip(const SampledNet& a, const SampledNet& b,
                           const std::function<Real(const Real&, const Real&)>& f) {
  if (!(a.grid_ == b.grid_)) throw Error(ErrorCode::backend_mismatch, "sampled nets live on different grids");
  std::vector<Real> v;
  v.reserve(a.values_.size());
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(f(a.values_[i], b.values_[i]));
  return SampledNet(a.grid_, std::move(v));
}

namespace {

struct Line {
  double slope;
  double intercept;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace

SlopeFit fit_valuation(const SampledNet& s, int window) {
  const Grid& g = s.grid();
  const int first = std::max(g.k_min, g.k_max - window + 1);
  std::vector<double> xs, ys;
  for (int k = first; k <= g.k_max; ++k) {
    if (s.sign(k) == 0) continue;
    xs.push_back(-static_cast<double>(k) * std::log(2.0));
    ys.push_back(s.logmag(k));
  }
  SlopeFit out;
  if (xs.empty()) {
    out.valuation = std::numeric_limits<double>::infinity();
    out.all_zero = true;
    return out;
  }
  if (xs.size() == 1) {
    out.valuation = ys[0] / xs[0];
    out.points_used = 1;
    return out;
  }
  // A ratio ln|x|/ln ε that climbs steadily by more than 1 across the window
  // means faster decay than any fixed power (ε^{|log ε|}, ε^{1/ε}): fit all points.
  bool climbing = xs.size() >= 3 && ys.back() / xs.back() - ys.front() / xs.front() > 1.0;
  for (std::size_t i = 1; i < xs.size() && climbing; ++i)
    climbing = ys[i] / xs[i] >= ys[i - 1] / xs[i - 1] - 1e-9;
  if (climbing) {
    out.valuation = least_squares(xs, ys).slope;
    out.points_used = static_cast<int>(xs.size());
    return out;
  }
  // Otherwise keep the points whose own ratio is within a quarter of the
  // smallest one: they belong to the slowest-decaying recurring branch.
  double rmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) rmin = std::min(rmin, ys[i] / xs[i]);
  std::vector<double> kx, ky;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] / xs[i] <= rmin + 0.25) {
      kx.push_back(xs[i]);
      ky.push_back(ys[i]);
    }
  }
  if (kx.size() < 2) {
    out.valuation = rmin;
    out.points_used = 1;
    return out;
  }
  xs = std::move(kx);
  ys = std::move(ky);
  const Line line = least_squares(xs, ys);
  out.valuation = line.slope;
  out.points_used = static_cast<int>(xs.size());
  return out;
}

}  // namespace colombeau
