#include "colombeau/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "colombeau/error.hpp"

namespace colombeau {

namespace quad {

namespace {

using GL64 = boost::math::quadrature::gauss<double, 64>;

struct SimpsonPanel {
  const std::function<void(double, std::span<double>)>& f;
  std::size_t m;
  int max_depth;
  std::vector<double>& value;
  std::vector<double>& error;

  std::vector<double> at(double x) const {
    std::vector<double> out(m, 0.0);
    f(x, out);
    return out;
  }

  static std::vector<double> simpson(double h, const std::vector<double>& fa,
                                     const std::vector<double>& fm, const std::vector<double>& fb) {
    std::vector<double> s(fa.size());
    for (std::size_t c = 0; c < s.size(); ++c) s[c] = h / 6.0 * (fa[c] + 4.0 * fm[c] + fb[c]);
    return s;
  }

  void run(double a, double b, const std::vector<double>& fa, const std::vector<double>& fm,
           const std::vector<double>& fb, const std::vector<double>& whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const auto flm = at(0.5 * (a + mid));
    const auto frm = at(0.5 * (mid + b));
    const auto left = simpson(mid - a, fa, flm, fm);
    const auto right = simpson(b - mid, fm, frm, fb);
    double worst = 0;
    for (std::size_t c = 0; c < m; ++c)
      worst = std::max(worst, std::abs(left[c] + right[c] - whole[c]));
    if (!std::isfinite(worst)) throw Error(ErrorCode::quadrature_failure, "non-finite integrand");
    if (worst <= 15.0 * tol || mid <= a || mid >= b) {
      for (std::size_t c = 0; c < m; ++c) {
        const double d = left[c] + right[c] - whole[c];
        value[c] += left[c] + right[c] + d / 15.0;
        error[c] += std::abs(d) / 15.0;
      }
      return;
    }
    if (depth >= max_depth)
      throw Error(ErrorCode::quadrature_failure, "adaptive Simpson did not converge");
    run(a, mid, fa, flm, fm, left, tol / 2, depth + 1);
    run(mid, b, fm, frm, fb, right, tol / 2, depth + 1);
  }
};

}  // namespace

std::vector<double> gauss_legendre(const std::function<void(double, std::span<double>)>& f,
                                   std::size_t components, const std::vector<double>& breaks,
                                   int subdivisions) {
  const auto& nodes = GL64::abscissa();
  const auto& weights = GL64::weights();
  std::vector<double> total(components, 0.0), panel(components), fx(components);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double h = (breaks[i + 1] - breaks[i]) / subdivisions;
    for (int s = 0; s < subdivisions; ++s) {
      const double lo = breaks[i] + s * h;
      const double hi = s + 1 == subdivisions ? breaks[i + 1] : lo + h;
      const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
      std::fill(panel.begin(), panel.end(), 0.0);
      for (std::size_t q = 0; q < nodes.size(); ++q) {
        for (const double x : {c - r * nodes[q], c + r * nodes[q]}) {
          std::fill(fx.begin(), fx.end(), 0.0);
          f(x, fx);
          for (std::size_t k = 0; k < components; ++k) panel[k] += weights[q] * fx[k];
        }
      }
      for (std::size_t k = 0; k < components; ++k) total[k] += r * panel[k];
    }
  }
  return total;
}

double gauss_legendre(const std::function<double(double)>& f, const std::vector<double>& breaks,
                      int subdivisions) {
  return gauss_legendre([&](double x, std::span<double> out) { out[0] = f(x); }, 1, breaks,
                        subdivisions)[0];
}

SimpsonResult adaptive_simpson(const std::function<void(double, std::span<double>)>& f,
                               std::size_t components, const std::vector<double>& breaks,
                               double tol, int max_depth) {
  SimpsonResult res{std::vector<double>(components, 0.0), std::vector<double>(components, 0.0)};
  if (breaks.size() < 2) return res;
  const double panel_tol = tol / static_cast<double>(breaks.size() - 1);
  SimpsonPanel p{f, components, max_depth, res.value, res.error};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const auto fa = p.at(a), fb = p.at(b), fm = p.at(0.5 * (a + b));
    p.run(a, b, fa, fm, fb, SimpsonPanel::simpson(b - a, fa, fm, fb), panel_tol, 0);
  }
  return res;
}

}  // namespace quad

namespace {

/// Coefficients (ascending) of Q_j with ψ₀^{(j)} = ψ₀·Q_j/(1-x²)^{2j}:
/// Q_0 = 1, Q_{j+1} = (1-x²)² Q_j' + (4j x(1-x²) - 2x) Q_j.
const std::vector<double>& derivative_poly(int j) {
  static std::mutex mu;
  static std::vector<std::vector<double>> table{{1.0}};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= j) {
    const int i = static_cast<int>(table.size()) - 1;
    const auto& q = table.back();
    std::vector<double> next(q.size() + 3, 0.0);
    // (1 - 2x² + x⁴) q'
    for (std::size_t d = 1; d < q.size(); ++d) {
      const double c = d * q[d];
      next[d - 1] += c;
      next[d + 1] -= 2 * c;
      next[d + 3] += c;
    }
    // (4i - 2) x q - 4i x³ q
    for (std::size_t d = 0; d < q.size(); ++d) {
      next[d + 1] += (4.0 * i - 2.0) * q[d];
      next[d + 3] -= 4.0 * i * q[d];
    }
    while (next.size() > 1 && next.back() == 0.0) next.pop_back();
    table.push_back(std::move(next));
  }
  return table[j];
}

double horner(const std::vector<double>& c, double x) {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

double raw_bump(double x) {
  if (!(std::abs(x) < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  return out;
}

void check_order(int n) {
  if (n < 0 || n > 12)
    throw Error(ErrorCode::invalid_argument, "mollifier order must be in 0..12");
}

}  // namespace

double BumpBase::operator()(double x) const { return C * raw_bump(x); }

double BumpBase::derivative(int j, double x) const {
  if (j == 0) return (*this)(x);
  if (!(std::abs(x) < 1.0)) return 0.0;
  const double u = 1.0 - x * x;
  return C * horner(derivative_poly(j), x) * std::exp(-1.0 / u - 2.0 * j * std::log(u));
}

BumpBase build_base(const Config& cfg) {
  const std::vector<double> breaks{-1.0, 0.0, 1.0};
  auto f = [](double x, std::span<double> out) { out[0] = raw_bump(x); };
  // ∫ ≈ 0.444; the relative tolerance scaled to an absolute one.
  const auto s = quad::adaptive_simpson(f, 1, breaks, 0.44 * cfg.quad_tol);
  const auto g = quad::gauss_legendre(f, 1, breaks, 16);
  BumpBase base;
  base.simpson_integral = s.value[0];
  base.gauss_integral = g[0];
  if (!(s.value[0] > 0) || std::abs(s.value[0] - g[0]) > 10 * cfg.quad_tol * s.value[0])
    throw Error(ErrorCode::quadrature_failure, "bump normalization: Simpson and Gauss disagree");
  base.C = 1.0 / s.value[0];
  return base;
}

LiftCoefficients lift_coefficients(int n, double eta) {
  const double en = std::pow(eta, n);
  return {-en / (1.0 - en), 1.0 / (eta - eta * en)};
}

MollifierTree::MollifierTree(BumpBase base) : base_(base), terms_{{1.0, 1.0}} {}

MollifierTree MollifierTree::lifted(const Level& level) const {
  MollifierTree out(*this);
  out.levels_.push_back(level);
  std::map<double, double, std::greater<>> merged;
  for (const auto& t : terms_) {
    merged[t.scale] += level.a * t.coeff;
    merged[t.scale * level.eta] += level.b * t.coeff;
  }
  out.terms_.clear();
  for (const auto& [s, c] : merged) out.terms_.push_back({s, c});
  return out;
}

MollifierTree MollifierTree::prefix(int n) const {
  MollifierTree out(base_);
  for (int i = 0; i < std::min(n, order()); ++i) out = out.lifted(levels_[i]);
  return out;
}

double MollifierTree::eval_rec(int level, double x) const {
  if (!(std::abs(x) < 1.0)) return 0.0;
  if (level == 0) return base_(x);
  const Level& l = levels_[level - 1];
  return l.a * eval_rec(level - 1, x) + l.b * eval_rec(level - 1, x / l.eta);
}

double MollifierTree::deriv_rec(int level, int j, double x) const {
  if (!(std::abs(x) < 1.0)) return 0.0;
  if (level == 0) return base_.derivative(j, x);
  const Level& l = levels_[level - 1];
  return l.a * deriv_rec(level - 1, j, x) +
         l.b * std::pow(l.eta, -j) * deriv_rec(level - 1, j, x / l.eta);
}

double MollifierTree::eval(double x) const { return eval_rec(order(), x); }

double MollifierTree::derivative(int j, double x) const { return deriv_rec(order(), j, x); }

double MollifierTree::eval_flat(double x) const {
  double sum = 0;
  for (const auto& t : terms_) {
    if (std::abs(x) >= t.scale) break;
    sum += t.coeff * base_(x / t.scale);
  }
  return sum;
}

double MollifierTree::derivative_flat(int j, double x) const {
  double sum = 0;
  for (const auto& t : terms_) {
    if (std::abs(x) >= t.scale) break;
    sum += t.coeff * std::pow(t.scale, -j) * base_.derivative(j, x / t.scale);
  }
  return sum;
}

std::vector<double> MollifierTree::breakpoints() const {
  std::vector<double> b;
  for (const auto& t : terms_) b.push_back(-t.scale);
  b.push_back(0.0);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) b.push_back(it->scale);
  return b;
}

double MomentReport::max_moment(int k_hi) const {
  double m = 0;
  for (const auto& r : rows)
    if (r.k >= 1 && r.k <= k_hi) m = std::max(m, std::abs(r.moment));
  return m;
}

double MomentReport::max_disagreement() const {
  double m = 0;
  for (const auto& r : rows) m = std::max(m, std::abs(r.moment - r.gauss));
  return m;
}

double moment_tolerance(const Config& cfg) { return 1e3 * cfg.quad_tol; }

MomentReport moment_report(const MollifierTree& tree, int k_max, const Config& cfg) {
  if (k_max < 0) throw Error(ErrorCode::invalid_argument, "k_max must be nonnegative");
  const std::size_t m = static_cast<std::size_t>(k_max) + 2;
  auto f = [&](double x, std::span<double> out) {
    const double v = tree.eval_flat(x);
    double p = 1;
    for (int k = 0; k <= k_max; ++k) {
      out[k] = p * v;
      p *= x;
    }
    out[k_max + 1] = std::abs(v);
  };
  const auto breaks = tree.breakpoints();
  const auto s = quad::adaptive_simpson(f, m, breaks, cfg.quad_tol);
  const auto g = quad::gauss_legendre(f, m, breaks, 16);
  MomentReport rep;
  for (int k = 0; k <= k_max; ++k)
    rep.rows.push_back({k, s.value[k], g[k], std::abs(s.value[k] - g[k]) + s.error[k]});
  rep.l1 = s.value[k_max + 1];
  rep.l1_gauss = g[k_max + 1];
  rep.l1_error = std::abs(rep.l1 - rep.l1_gauss) + s.error[k_max + 1];
  return rep;
}

void write_moments_csv(const MomentReport& report, const std::string& path) {
  auto out = open_out(path);
  out << "k,moment,abs_error_estimate\n";
  for (const auto& r : report.rows) out << r.k << ',' << fmt(r.moment) << ',' << fmt(r.error) << '\n';
}

MollifierTree lift_order(const MollifierTree& tree, double delta_target, const Config& cfg) {
  if (!(delta_target > 0)) throw Error(ErrorCode::invalid_argument, "δ must be positive");
  const int n = tree.order() + 1;
  check_order(n);
  const double tol = moment_tolerance(cfg);

  const auto pre = moment_report(tree, n - 1, cfg);
  if (std::abs(pre.rows[0].moment - 1.0) > tol || pre.max_moment(n - 1) > tol)
    throw Error(ErrorCode::precondition_moment_failure,
                "input tree must have unit mass and moments 1.." + std::to_string(n - 1) + " vanishing");
  if (pre.l1 > 1.0 + delta_target / 2 + tol)
    throw Error(ErrorCode::precondition_moment_failure, "input tree exceeds the L1 budget 1+δ/2");

  double eta = 0;
  for (int j = 1; j <= 60; ++j) {
    const double e = std::ldexp(1.0, -j), en = std::pow(e, n);
    if ((1 + en) / (1 - en) * (1 + delta_target / 2) <= 1 + delta_target) {
      eta = e;
      break;
    }
  }
  if (eta == 0) throw Error(ErrorCode::budget_infeasible, "no η = 2^-j with j ≤ 60 meets the budget");

  const auto [a, b] = lift_coefficients(n, eta);
  Level level{n, eta, a, b, delta_target, 0.0};
  const auto post = moment_report(tree.lifted(level), n, cfg);
  if (std::abs(post.rows[0].moment - 1.0) > tol || post.max_moment(n) > tol ||
      post.l1 > 1.0 + delta_target + tol)
    throw Error(ErrorCode::quadrature_failure,
                "lifted tree fails its quadrature postconditions at n=" + std::to_string(n));
  level.l1 = post.l1;
  return tree.lifted(level);
}

MollifierTree build_vanishing(const BumpBase& base, int N, double delta, const Config& cfg) {
  check_order(N);
  if (!(delta > 0)) throw Error(ErrorCode::invalid_argument, "δ must be positive");
  MollifierTree tree(base);
  for (int n = 1; n <= N; ++n) tree = lift_order(tree, std::ldexp(delta, n - N), cfg);
  return tree;
}

MollifierTree build_vanishing(int N, double delta, const Config& cfg) {
  return build_vanishing(build_base(cfg), N, delta, cfg);
}

std::pair<double, int> seminorm(const MollifierTree& tree, int n) {
  constexpr int mesh = 400;
  std::vector<double> xs;
  for (const auto& t : tree.terms())
    for (int i = 1; i < mesh; ++i) xs.push_back(t.scale * (-1.0 + 2.0 * i / mesh));
  double best = 0;
  int reached = -1;
  for (int j = 0; j <= n; ++j) {
    double sup = 0;
    bool finite = true;
    for (const double x : xs) {
      const double v = std::abs(tree.derivative_flat(j, x));
      if (!std::isfinite(v)) {
        finite = false;
        break;
      }
      sup = std::max(sup, v);
    }
    if (!finite) break;
    best = std::max(best, sup);
    reached = j;
  }
  return {best, reached};
}

int DiagonalTable::level_at(double eps) const {
  int n = 0;
  for (const auto& r : rows)
    if (eps <= r.eps) n = r.n;
  return n;
}

DiagonalTable assemble_generalized(const MollifierTree& tree, const Config& cfg) {
  const double tol = moment_tolerance(cfg);
  DiagonalTable table;
  table.decreasing = true;
  bool moments = true;
  double prev = 1.0;
  for (int n = 0; n <= tree.order(); ++n) {
    const auto phi = tree.prefix(n);
    const auto [M, reached] = seminorm(phi, n);
    if (reached < n) table.overflow = true;
    const double eps = std::min(prev / 2, 1.0 / M);
    const auto rep = moment_report(phi, n, cfg);
    table.rows.push_back({n, M, reached, eps, rep.l1, rep.max_moment(n), rep.rows[0].moment});
    if (!(eps < prev)) table.decreasing = false;
    if (rep.max_moment(n) > tol || std::abs(rep.rows[0].moment - 1.0) > tol) moments = false;
    prev = eps;
  }
  // Every sampled ε ≤ ε_m must select a tree of order ≥ m.
  std::vector<double> probes;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) probes.push_back(std::ldexp(1.0, -k));
  for (const auto& r : table.rows) probes.push_back(r.eps);
  for (const auto& r : table.rows)
    for (const double e : probes)
      if (e <= r.eps && table.level_at(e) < r.n) moments = false;
  table.moments_ok = moments;
  return table;
}

void write_samples_csv(const MollifierTree& tree, const std::string& path, int points) {
  auto out = open_out(path);
  out << "x,phi\n";
  for (int i = 0; i < points; ++i) {
    const double x = -1.0 + 2.0 * i / (points - 1);
    out << fmt(x) << ',' << fmt(tree.eval_flat(x)) << '\n';
  }
}

void write_schedule_csv(const MollifierTree& tree, const DiagonalTable& table, const std::string& path) {
  auto out = open_out(path);
  out << "n,eta,a,b,L1,M,eps\n";
  for (const auto& r : table.rows) {
    out << r.n << ',';
    if (r.n == 0) {
      out << ",,";
    } else {
      const Level& l = tree.levels()[r.n - 1];
      out << fmt(l.eta) << ',' << fmt(l.a) << ',' << fmt(l.b);
    }
    out << ',' << fmt(r.l1) << ',' << fmt(r.M) << ',' << fmt(r.eps) << '\n';
  }
}

void write_diagonal_csv(const DiagonalTable& table, const Config& cfg, const std::string& path) {
  auto out = open_out(path);
  out << "n,eps,log2_eps,M,M_order,mass,max_moment,first_grid_k\n";
  for (const auto& r : table.rows) {
    int first = -1;
    for (int k = cfg.k_min; k <= cfg.k_max && first < 0; ++k)
      if (std::ldexp(1.0, -k) <= r.eps) first = k;
    out << r.n << ',' << fmt(r.eps) << ',' << fmt(std::log2(r.eps)) << ',' << fmt(r.M) << ','
        << r.M_order << ',' << fmt(r.mass) << ',' << fmt(r.max_moment) << ',' << first << '\n';
  }
}

TensorMollifier::TensorMollifier(MollifierTree tree, int d)
    : tree_(std::move(tree)), d_(d), s_(std::sqrt(static_cast<double>(d))) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
}

double TensorMollifier::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != d_) throw Error(ErrorCode::dimension_mismatch, "point dimension");
  double v = 1;
  for (const double xi : x) v *= s_ * tree_.eval_flat(xi * s_);
  return v;
}

double TensorMollifier::moment(std::span<const int> beta, const std::vector<double>& moments_1d) const {
  if (static_cast<int>(beta.size()) != d_) throw Error(ErrorCode::dimension_mismatch, "multi-index");
  double v = 1;
  for (const int b : beta) {
    if (b < 0 || b >= static_cast<int>(moments_1d.size()))
      throw Error(ErrorCode::invalid_argument, "moment order outside the table");
    v *= std::pow(s_, -b) * moments_1d[b];
  }
  return v;
}

TensorMollifier tensorize(const MollifierTree& tree, int d) { return TensorMollifier(tree, d); }

}  // namespace colombeau
