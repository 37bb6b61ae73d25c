#include "colombeau/gen_number.hpp"

#include <cmath>
#include <limits>

#include "colombeau/error.hpp"

namespace colombeau {

const char* backend_name(Backend b) { return b == Backend::exact ? "exact" : "heuristic"; }

const Config& default_config() {
  static const Config cfg;
  return cfg;
}

Grid grid_of(const Config& cfg) { return Grid{cfg.k_min, cfg.k_max}; }

Real GenNumber::eval(const Real& eps) const {
  if (symbolic()) return net().eval(eps);
  int e = 0;
  const Real mant = boost::multiprecision::frexp(eps, &e);
  const int k = 1 - e;
  const Grid& g = samples().grid();
  if (mant != Real(0.5) || k < g.k_min || k > g.k_max)
    throw Error(ErrorCode::invalid_argument, "sampled number evaluated off its grid");
  return samples().at(k);
}

SampledNet GenNumber::sampled(const Grid& grid) const {
  if (symbolic()) return SampledNet::sample(net(), grid);
  if (!(samples().grid() == grid)) throw Error(ErrorCode::backend_mismatch, "sampled nets live on different grids");
  return samples();
}

std::string GenNumber::to_string() const {
  if (symbolic()) return net().to_string();
  const Grid& g = samples().grid();
  return "<sampled k=" + std::to_string(g.k_min) + ".." + std::to_string(g.k_max) + ">";
}

namespace {

const Grid* common_grid(std::initializer_list<const GenNumber*> xs) {
  const Grid* grid = nullptr;
  for (const auto* x : xs) {
    if (x->symbolic()) continue;
    if (grid && !(*grid == x->samples().grid()))
      throw Error(ErrorCode::backend_mismatch, "sampled nets live on different grids");
    grid = &x->samples().grid();
  }
  return grid;
}

GenNumber binary(const GenNumber& a, const GenNumber& b,
                 PiecewiseNet (*sym)(const PiecewiseNet&, const PiecewiseNet&),
                 Real (*num)(const Real&, const Real&)) {
  const Grid* g = common_grid({&a, &b});
  if (!g) return sym(a.net(), b.net());
  return SampledNet::zip(a.sampled(*g), b.sampled(*g), num);
}

}  // namespace

GenNumber operator+(const GenNumber& a, const GenNumber& b) {
  return binary(
      a, b, [](const PiecewiseNet& x, const PiecewiseNet& y) { return x + y; },
      [](const Real& x, const Real& y) -> Real { return x + y; });
}

GenNumber operator-(const GenNumber& a, const GenNumber& b) {
  return binary(
      a, b, [](const PiecewiseNet& x, const PiecewiseNet& y) { return x - y; },
      [](const Real& x, const Real& y) -> Real { return x - y; });
}

GenNumber operator*(const GenNumber& a, const GenNumber& b) {
  return binary(
      a, b, [](const PiecewiseNet& x, const PiecewiseNet& y) { return x * y; },
      [](const Real& x, const Real& y) -> Real { return x * y; });
}

GenNumber operator-(const GenNumber& a) {
  if (a.symbolic()) return -a.net();
  return a.samples().map([](const Real& x) -> Real { return -x; });
}

GenNumber scale(const GenNumber& a, double factor) {
  if (a.symbolic()) return scale(a.net(), factor);
  return a.samples().map([factor](const Real& x) -> Real { return x * factor; });
}

GenNumber abs(const GenNumber& a) {
  if (a.symbolic()) return abs(a.net());
  return a.samples().map([](const Real& x) -> Real { return boost::multiprecision::abs(x); });
}

GenNumber select_ge(const GenNumber& key_a, const GenNumber& key_b, const GenNumber& if_ge,
                    const GenNumber& if_lt) {
  const Grid* g = common_grid({&key_a, &key_b, &if_ge, &if_lt});
  if (!g) return select_ge(key_a.net(), key_b.net(), if_ge.net(), if_lt.net());
  const SampledNet ka = key_a.sampled(*g), kb = key_b.sampled(*g);
  const SampledNet va = if_ge.sampled(*g), vb = if_lt.sampled(*g);
  std::vector<Real> out;
  for (int k = g->k_min; k <= g->k_max; ++k) out.push_back(ka.at(k) >= kb.at(k) ? va.at(k) : vb.at(k));
  return SampledNet(*g, std::move(out));
}

GenNumber max(const GenNumber& a, const GenNumber& b) { return select_ge(a, b, a, b); }

GenNumber min(const GenNumber& a, const GenNumber& b) { return select_ge(b, a, a, b); }

GenNumber map_sampled(const GenNumber& x, const Grid& grid,
                      const std::function<Real(const Real&, const Real&)>& f) {
  const SampledNet s = x.sampled(grid);
  std::vector<Real> out;
  for (int k = grid.k_min; k <= grid.k_max; ++k) out.push_back(f(grid.eps(k), s.at(k)));
  return SampledNet(grid, std::move(out));
}

ValuationEstimate valuation(const GenNumber& x, const Config& cfg) {
  if (x.symbolic()) return {x.net().valuation(), Backend::exact};
  return {fit_valuation(x.samples(), cfg.slope_window).valuation, Backend::heuristic};
}

double sharp_norm(const GenNumber& x, const Config& cfg) {
  const double v = valuation(x, cfg).value;
  if (v == std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(-v);
}

Judgement is_negligible(const GenNumber& x, const Config& cfg) {
  if (x.symbolic()) return {x.net().is_negligible(), Backend::exact};
  const SlopeFit fit = fit_valuation(x.samples(), cfg.slope_window);
  return {fit.all_zero || fit.valuation >= cfg.m_max, Backend::heuristic};
}

Judgement is_moderate(const GenNumber& x, const Config& cfg) {
  if (x.symbolic()) return {true, Backend::exact};
  const SlopeFit fit = fit_valuation(x.samples(), cfg.slope_window);
  return {fit.all_zero || fit.valuation > -cfg.moderate_max, Backend::heuristic};
}

Judgement gen_eq(const GenNumber& a, const GenNumber& b, const Config& cfg) {
  if (a.symbolic() != b.symbolic())
    throw Error(ErrorCode::backend_mismatch, "gen_eq needs both numbers on the same backend");
  return is_negligible(a - b, cfg);
}

Judgement eventually_ge(const GenNumber& a, const GenNumber& b, const Config& cfg) {
  return is_negligible(max(b - a, GenNumber::constant(0.0)), cfg);
}

VecNet::VecNet(std::vector<GenNumber> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw Error(ErrorCode::invalid_argument, "vector net needs at least one component");
  const Grid* grid = nullptr;
  for (const auto& c : comps_) {
    if (c.symbolic()) continue;
    if (grid && !(*grid == c.samples().grid()))
      throw Error(ErrorCode::backend_mismatch, "vector components live on different grids");
    grid = &c.samples().grid();
  }
  if (grid) {
    const Grid g = *grid;
    for (auto& c : comps_) {
      if (c.symbolic()) c = c.sampled(g);
    }
  }
}

bool VecNet::symbolic() const { return comps_.empty() || comps_.front().symbolic(); }

std::string VecNet::to_string() const {
  if (comps_.size() == 1) return comps_.front().to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ", ";
    out += comps_[i].to_string();
  }
  return out + ")";
}

GenNumber norm_inf(const VecNet& u) {
  GenNumber n = abs(u[0]);
  for (std::size_t i = 1; i < u.dim(); ++i) n = max(n, abs(u[i]));
  return n;
}

GenNumber dist_inf(const VecNet& u, const VecNet& v) {
  if (u.dim() != v.dim()) throw Error(ErrorCode::dimension_mismatch, "points have different dimensions");
  GenNumber n = abs(u[0] - v[0]);
  for (std::size_t i = 1; i < u.dim(); ++i) n = max(n, abs(u[i] - v[i]));
  return n;
}

VecNet concat(const VecNet& a, const VecNet& b) {
  std::vector<GenNumber> c = a.comps();
  c.insert(c.end(), b.comps().begin(), b.comps().end());
  return VecNet(std::move(c));
}

}  // namespace colombeau
