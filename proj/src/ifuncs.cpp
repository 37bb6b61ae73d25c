#include "colombeau/ifuncs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

using Component = GraphFamily::Component;

Real inf() { return std::numeric_limits<Real>::infinity(); }

bool finite(const Real& x) { return boost::multiprecision::isfinite(x); }

/// Components of one shape at ε; empty when the shape is empty at this ε.
std::vector<Component> shape_at(const Shape& s, const Real& eps) {
  if (const auto* iv = std::get_if<Interval>(&s)) {
    Real lo = iv->lo.eval(eps), hi = iv->hi.eval(eps);
    if (lo > hi) return {};
    return {{lo, hi}};
  }
  if (const auto* b = std::get_if<Box>(&s)) {
    Real lo = b->sides[0].lo.eval(eps), hi = b->sides[0].hi.eval(eps);
    if (lo > hi) return {};
    return {{lo, hi}};
  }
  if (const auto* p = std::get_if<Points>(&s)) {
    std::vector<Component> out;
    for (const auto& v : p->pts) {
      const Real x = v[0].eval(eps);
      out.push_back({x, x});
    }
    return out;
  }
  const auto& e = std::get<Exterior>(s);
  const Real r = abs(e.r.eval(eps));
  return {{-inf(), -r}, {r, inf()}};
}

std::vector<Component> merge(std::vector<Component> comps) {
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.lo < b.lo; });
  std::vector<Component> out;
  for (auto& c : comps) {
    if (!out.empty() && c.lo <= out.back().hi) {
      if (c.hi > out.back().hi) out.back().hi = c.hi;
    } else {
      out.push_back(std::move(c));
    }
  }
  return out;
}

/// Points a + (b − a)·i/n, i = 0..n.
std::vector<Real> uniform_points(const Real& a, const Real& b, int n) {
  std::vector<Real> xs;
  if (a == b) return {a};
  for (int i = 0; i <= n; ++i) xs.push_back(a + (b - a) * i / n);
  return xs;
}

/// max of h over [a, b]: uniform sampling, then golden-section refinement of the
/// best bracket down to width `tol`.
Real search_max(const std::function<Real(const Real&)>& h, const Real& a, const Real& b, const Real& tol) {
  const int n = 64;
  const auto xs = uniform_points(a, b, n);
  std::vector<Real> hs;
  for (const auto& x : xs) hs.push_back(h(x));
  const auto best = static_cast<std::size_t>(std::max_element(hs.begin(), hs.end()) - hs.begin());
  Real result = hs[best];
  if (xs.size() == 1) return result;
  Real lo = xs[best == 0 ? 0 : best - 1];
  Real hi = xs[std::min(best + 1, xs.size() - 1)];
  const Real phi = (boost::multiprecision::sqrt(Real(5)) - 1) / 2;
  Real x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  Real h1 = h(x1), h2 = h(x2);
  while (hi - lo > tol) {
    if (h1 < h2) {
      lo = x1;
      x1 = x2;
      h1 = h2;
      x2 = lo + phi * (hi - lo);
      h2 = h(x2);
    } else {
      hi = x2;
      x2 = x1;
      h2 = h1;
      x1 = hi - phi * (hi - lo);
      h1 = h(x1);
    }
    if (h1 > result) result = h1;
    if (h2 > result) result = h2;
  }
  return result;
}

/// Search resolution: fine enough that a quadratic extremum is located to a
/// value error below ε^{m_max}.
Real search_tol(const Real& eps, const Config& cfg) {
  const int e = std::max(cfg.m_mesh, static_cast<int>(std::ceil(cfg.m_max / 2)) + 1);
  return boost::multiprecision::pow(eps, e);
}

GenNumber sampled(const Grid& grid, const std::function<Real(int)>& f) {
  std::vector<Real> v;
  for (int k = grid.k_min; k <= grid.k_max; ++k) v.push_back(f(k));
  return SampledNet(grid, std::move(v));
}

}  // namespace

ExprFn make_fn(std::string_view body, const SetFamily& domain) {
  if (domain.dim() != 1) throw Error(ErrorCode::dimension_mismatch, "expression maps need a one-dimensional domain");
  return {Expr::parse(body), domain};
}

std::optional<int> GraphFamily::interpolant_mesh() const {
  if (!base_) return std::nullopt;
  return mesh_;
}

Real GraphFamily::clip(const Real& x, int k) const {
  const auto& comps = components(k);
  if (comps.empty()) throw Error(ErrorCode::empty_family, "domain is empty at eps = 2^-" + std::to_string(k));
  Real best;
  Real best_d = inf();
  for (const auto& c : comps) {
    const Real p = x < c.lo ? c.lo : (x > c.hi ? c.hi : x);
    const Real d = abs(x - p);
    if (d < best_d) {
      best_d = d;
      best = p;
    }
  }
  return best;
}

Real GraphFamily::value(const Real& x, int k) const {
  if (!base_) return fn_.body.eval(x, eps(k));
  const Real h = boost::multiprecision::pow(eps(k), mesh_);
  const Real x0 = boost::multiprecision::floor(x / h) * h;
  const Real v0 = base_->g(x0, k);
  const Real v1 = base_->g(x0 + h, k);
  return v0 + (x - x0) / h * (v1 - v0);
}

GraphFamily make_graph(const ExprFn& f, const Config& cfg) {
  GraphFamily g;
  g.fn_ = f;
  g.grid_ = grid_of(cfg);
  g.bounded_ = is_sharply_bounded(f.domain, cfg).bounded;
  const auto& shapes = f.domain.shapes();
  g.per_shape_.assign(shapes.size(), {});
  for (int k = g.grid_.k_min; k <= g.grid_.k_max; ++k) {
    const Real eps = g.eps(k);
    std::vector<Component> all;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      auto comps = shape_at(shapes[s], eps);
      all.insert(all.end(), comps.begin(), comps.end());
      g.per_shape_[s].push_back(std::move(comps));
    }
    g.merged_.push_back(merge(std::move(all)));
    for (const auto& c : g.merged_.back()) {
      std::vector<Real> probes;
      if (finite(c.lo) && finite(c.hi)) {
        probes = uniform_points(c.lo, c.hi, 16);
      } else if (!finite(c.lo) && !finite(c.hi)) {
        for (int j : {0, 1, 10, 1000}) {
          probes.push_back(Real(j));
          probes.push_back(Real(-j));
        }
      } else {
        const Real r = finite(c.lo) ? c.lo : c.hi;
        const Real dir = finite(c.lo) ? 1 : -1;
        for (int j : {0, 1, 10, 1000}) probes.push_back(r + dir * j * (1 + abs(r)));
      }
      for (const auto& x : probes) {
        try {
          (void)f.body.eval(x, eps);
        } catch (const Error& e) {
          throw Error(ErrorCode::domain_evaluation, std::string(e.what()) + " at x = " + x.str(12) +
                                                        ", eps = 2^-" + std::to_string(k));
        }
      }
    }
  }
  return g;
}

Judgement graph_contains(const GraphFamily& g, const GenNumber& x, const GenNumber& y, const Config& cfg) {
  const GenNumber d = sampled(g.grid(), [&](int k) {
    const Real eps = g.eps(k);
    const Real xs = x.eval(eps);
    const Real c = g.clip(xs, k);
    const Real dx = abs(xs - c), dy = abs(y.eval(eps) - g.value(c, k));
    return dx < dy ? dy : dx;
  });
  return is_negligible(d, cfg);
}

ImageBound image_bound(const GraphFamily& g, const Config& cfg) {
  if (!g.bounded_domain()) return {false, 0, std::nullopt};
  const std::string key = std::to_string(cfg.m_max) + '/' + std::to_string(cfg.m_mesh) + '/' +
                          std::to_string(cfg.moderate_max) + '/' + std::to_string(cfg.slope_window);
  std::lock_guard<std::mutex> hold(g.image_cache_->lock);
  if (g.image_cache_->entry && g.image_cache_->entry->first == key) return g.image_cache_->entry->second;
  const GenNumber sup = sampled(g.grid(), [&](int k) {
    Real best = 0;
    const Real tol = search_tol(g.eps(k), cfg);
    for (const auto& c : g.components(k)) {
      const Real m = search_max([&](const Real& x) -> Real { return abs(g.value(x, k)); }, c.lo, c.hi, tol);
      if (m > best) best = m;
    }
    return best;
  });
  ImageBound out{false, 0, sup};
  if (is_moderate(sup, cfg).value) {
    const double nu = valuation(sup, cfg).value;
    out.bounded = true;
    out.M = std::isinf(nu) ? 0 : std::max(0, static_cast<int>(std::ceil(-nu - 0.05)));
  }
  g.image_cache_->entry = {key, out};
  return out;
}

EvalResult eval_at(const GraphFamily& g, const GenNumber& x, const Config& cfg) {
  if (!contains(g.fn().domain, VecNet(x), cfg).member.value)
    throw Error(ErrorCode::outside_domain, "point " + x.to_string() + " is not in the domain");
  const GenNumber v = sampled(g.grid(), [&](int k) { return g.g(x.eval(g.eps(k)), k); });
  const bool guaranteed = g.bounded_domain() && image_bound(g, cfg).bounded;
  return {v, guaranteed};
}

SetFamily image_family(const GraphFamily& g, const Config& cfg) {
  if (!g.bounded_domain())
    throw Error(ErrorCode::not_sharply_bounded, "image of an unbounded domain need not be internal");
  std::vector<Shape> shapes;
  const auto& dom = g.fn().domain.shapes();
  for (std::size_t s = 0; s < dom.size(); ++s) {
    if (const auto* p = std::get_if<Points>(&dom[s])) {
      std::vector<VecNet> pts;
      for (std::size_t i = 0; i < p->pts.size(); ++i)
        pts.push_back(VecNet(sampled(g.grid(), [&](int k) { return g.value(g.shape_components(s, k)[i].lo, k); })));
      shapes.push_back(Points{std::move(pts)});
      continue;
    }
    auto extreme = [&](double sign) {
      return sampled(g.grid(), [&](int k) {
        const auto& comps = g.shape_components(s, k);
        if (comps.empty()) return g.value(g.clip(Real(0), k), k);
        const auto& c = comps.front();
        const Real m = search_max([&](const Real& x) -> Real { return sign * g.value(x, k); }, c.lo, c.hi,
                                  search_tol(g.eps(k), cfg));
        return Real(sign * m);
      });
    };
    shapes.push_back(Interval{extreme(-1.0), extreme(1.0)});
  }
  return SetFamily(std::move(shapes), 1, "image");
}

MembershipReport image_membership(const GraphFamily& g, const GenNumber& y, const Config& cfg) {
  return contains(image_family(g, cfg), VecNet(y), cfg);
}

ModulusReport continuity_modulus(const GraphFamily& g, int n, int m_cap, const Config& cfg) {
  if (!g.bounded_domain()) throw Error(ErrorCode::not_sharply_bounded, "continuity modulus needs a bounded domain");
  const Grid& grid = g.grid();
  struct Sample {
    Real x, gx;
    const Component* comp;
  };
  std::vector<std::vector<Sample>> samples(static_cast<std::size_t>(grid.size()));
  for (int k = grid.k_min; k <= grid.k_max; ++k) {
    for (const auto& c : g.components(k)) {
      if (c.lo == c.hi) continue;
      for (const auto& x : uniform_points(c.lo, c.hi, 32)) samples[g.index(k)].push_back({x, g.value(x, k), &c});
    }
  }
  auto holds = [&](int m, int k) {
    const Real eps = g.eps(k);
    const Real h = boost::multiprecision::pow(eps, m);
    const Real bound = boost::multiprecision::pow(eps, n);
    for (const auto& s : samples[g.index(k)]) {
      for (const Real& step : {Real(h), Real(-h), Real(h / 2), Real(-h / 2)}) {
        Real x = s.x + step;
        if (x < s.comp->lo) x = s.comp->lo;
        if (x > s.comp->hi) x = s.comp->hi;
        if (x == s.x) continue;
        if (abs(g.value(x, k) - s.gx) > bound) return false;
      }
    }
    return true;
  };
  const int window = std::min(cfg.slope_window, grid.size());
  for (int m = 1; m <= m_cap; ++m) {
    bool ok = true;
    for (int k = grid.k_max; k > grid.k_max - window && ok; --k) ok = holds(m, k);
    if (!ok) continue;
    int threshold = grid.k_max - window + 1;
    while (threshold > grid.k_min && holds(m, threshold - 1)) --threshold;
    return {n, m, threshold};
  }
  throw Error(ErrorCode::no_modulus_found,
              "no m <= " + std::to_string(m_cap) + " bounds the oscillation by eps^" + std::to_string(n));
}

GraphFamily pl_interpolant(const GraphFamily& g, int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "interpolation mesh exponent must be positive");
  if (!g.bounded_domain()) throw Error(ErrorCode::not_sharply_bounded, "interpolation needs a bounded domain");
  GraphFamily h = g;
  h.base_ = std::make_shared<const GraphFamily>(g);
  h.mesh_ = m;
  h.image_cache_ = std::make_shared<GraphFamily::ImageCache>();
  return h;
}

InterpolantError interpolant_error(const GraphFamily& h, const Config& cfg) {
  if (!h.interpolant_mesh()) throw Error(ErrorCode::invalid_argument, "graph is not an interpolant");
  const GraphFamily& base = *h.interpolated();
  const int m = *h.interpolant_mesh();
  const GenNumber err = sampled(h.grid(), [&](int k) {
    const Real cell = boost::multiprecision::pow(h.eps(k), m);
    Real worst = 0;
    for (const auto& c : h.components(k)) {
      for (const auto& x : uniform_points(c.lo, c.hi, 32)) {
        const Real mid = base.clip((boost::multiprecision::floor(x / cell) + Real(0.5)) * cell, k);
        for (const Real& p : {x, mid}) {
          const Real e = abs(h.value(p, k) - base.g(p, k));
          if (e > worst) worst = e;
        }
      }
    }
    return worst;
  });
  return {err, valuation(err, cfg), is_negligible(err, cfg)};
}

ZeroSetDemo zero_set_demo(const Config& cfg) {
  const Grid grid = grid_of(cfg);
  struct Candidate {
    std::string name;
    std::function<double(double)> x_of_L;  // x_ε as a function of L = |ln ε|
  };
  const std::vector<Candidate> candidates = {
      {"0", [](double) { return 0.0; }},
      {"alpha", [](double L) { return std::exp(-L); }},
      {"1/log|log eps|", [](double L) { return 1.0 / std::log(L); }},
  };
  // Ratio ln f / ln ε for f = ε^{1/x} is 1/x; certified on ε = 2^{-2^j}.
  std::vector<double> ladder;
  for (int j = 8; j <= 62; j += 2) ladder.push_back(std::ldexp(std::log(2.0), j));
  auto certify_zero = [&](const std::function<double(double)>& x, double& deepest) {
    double prev = 0;
    bool increasing = true;
    for (double L : ladder) {
      const double r = x(L) == 0 ? std::numeric_limits<double>::infinity() : 1.0 / x(L);
      if (r < prev) increasing = false;
      prev = r;
    }
    deepest = prev;
    return increasing && deepest >= cfg.m_max;
  };
  const GenNumber gap = SampledNet::from_function(grid, [](const Real& eps) -> Real { return 1 / abs(log(eps)); });
  const double gap_nu = valuation(gap, cfg).value;
  bool gap_positive = true;
  for (int k = grid.k_min; k <= grid.k_max; ++k) gap_positive = gap_positive && gap.samples().sign(k) > 0;

  ZeroSetDemo demo;
  demo.all_ok = true;
  for (const auto& c : candidates) {
    ZeroSetCase z{c.name, false, false, false, 0};
    double ignored = 0;
    z.x_is_zero = certify_zero(c.x_of_L, ignored);
    z.y_greater = gap_positive && gap_nu < 1;
    z.fy_zero = certify_zero([&](double L) { return c.x_of_L(L) + 1.0 / L; }, z.deep_ratio);
    demo.all_ok = demo.all_ok && z.x_is_zero && z.y_greater && z.fy_zero;
    demo.cases.push_back(z);
  }
  return demo;
}

NonclosedImageDemo nonclosed_image_demo(int max_M, const Config& cfg) {
  const char* f = "x^2/(1+x^2)";
  NonclosedImageDemo d{};
  try {
    (void)image_membership(make_graph(make_fn(f, make_exterior(GenNumber::constant(0))), cfg),
                           GenNumber::constant(1), cfg);
  } catch (const Error& e) {
    d.unbounded_refused = e.code() == ErrorCode::not_sharply_bounded;
  }
  const GraphFamily unit = make_graph(make_fn(f, parse_set("interval(-1, 1)")), cfg);
  d.one_rejected = !image_membership(unit, GenNumber::constant(1), cfg).member.value;
  d.half_accepted = image_membership(unit, GenNumber::constant(0.5), cfg).member.value;
  d.ok = d.unbounded_refused && d.one_rejected && d.half_accepted;
  for (int M = 1; M <= max_M; ++M) {
    const GenNumber r = PiecewiseNet::monomial(1.0, -M);
    const GraphFamily g = make_graph(make_fn(f, make_interval(-r, r)), cfg);
    const auto rep = image_membership(g, GenNumber::constant(1), cfg);
    const double nu = valuation(*rep.distance, cfg).value;
    d.gap_valuations.push_back({M, nu});
    d.ok = d.ok && !rep.member.value && std::fabs(nu - 2 * M) < 0.05;
  }
  return d;
}

}  // namespace colombeau
