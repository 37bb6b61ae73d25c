#include "colombeau/isets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

const GenNumber& zero() {
  static const GenNumber z = GenNumber::constant(0.0);
  return z;
}

GenNumber eps_power(double e) { return PiecewiseNet::monomial(1.0, e); }

GenNumber clamp(const GenNumber& x, const GenNumber& lo, const GenNumber& hi) { return min(max(x, lo), hi); }

GenNumber pos_part(const GenNumber& x) { return max(x, zero()); }

GenNumber interval_dist(const Interval& s, const GenNumber& u) { return pos_part(max(s.lo - u, u - s.hi)); }

/// Sides of an interval or box shape.
const std::vector<Interval>* box_sides(const Shape& s, std::vector<Interval>& scratch) {
  if (const auto* i = std::get_if<Interval>(&s)) {
    scratch = {*i};
    return &scratch;
  }
  if (const auto* b = std::get_if<Box>(&s)) return &b->sides;
  return nullptr;
}

Shape box_shape(std::vector<Interval> sides) {
  if (sides.size() == 1) return sides.front();
  return Box{std::move(sides)};
}

GenNumber shape_dist(const Shape& s, const VecNet& u) {
  std::vector<Interval> scratch;
  if (const auto* sides = box_sides(s, scratch)) {
    GenNumber d = interval_dist((*sides)[0], u[0]);
    for (std::size_t j = 1; j < sides->size(); ++j) d = max(d, interval_dist((*sides)[j], u[j]));
    return d;
  }
  if (const auto* p = std::get_if<Points>(&s)) {
    GenNumber d = dist_inf(u, p->pts[0]);
    for (std::size_t j = 1; j < p->pts.size(); ++j) d = min(d, dist_inf(u, p->pts[j]));
    return d;
  }
  const auto& e = std::get<Exterior>(s);
  return pos_part(e.r - norm_inf(u));
}

GenNumber family_dist(const SetFamily& a, const VecNet& u) {
  GenNumber d = shape_dist(a.shapes()[0], u);
  for (std::size_t i = 1; i < a.shapes().size(); ++i) d = min(d, shape_dist(a.shapes()[i], u));
  return d;
}

/// Per refined piece select between two witness vectors with the same keys.
VecNet select_vec(const GenNumber& ka, const GenNumber& kb, const VecNet& if_ge, const VecNet& if_lt) {
  std::vector<GenNumber> out;
  for (std::size_t j = 0; j < if_ge.dim(); ++j) out.push_back(select_ge(ka, kb, if_ge[j], if_lt[j]));
  return VecNet(std::move(out));
}

/// Point of a box with maximal sup-norm: each coordinate at its larger-magnitude end.
VecNet far_corner(const std::vector<Interval>& sides) {
  std::vector<GenNumber> c;
  for (const auto& s : sides) c.push_back(select_ge(abs(s.hi), abs(s.lo), s.hi, s.lo));
  return VecNet(std::move(c));
}

/// Nearest point of {|x|_∞ ≥ r} to u: push the largest coordinates out to ±r.
VecNet push_out(const VecNet& u, const GenNumber& r) {
  const GenNumber n = norm_inf(u);
  std::vector<GenNumber> v;
  for (std::size_t j = 0; j < u.dim(); ++j) {
    GenNumber others = zero();
    for (std::size_t k = 0; k < u.dim(); ++k) {
      if (k != j) others = max(others, abs(u[k]));
    }
    const GenNumber pushed = select_ge(u[j], zero(), r, -r);
    v.push_back(select_ge(n, r, u[j], select_ge(abs(u[j]), others, pushed, u[j])));
  }
  return VecNet(std::move(v));
}

VecNet clamp_vec(const VecNet& p, const std::vector<Interval>& sides) {
  std::vector<GenNumber> c;
  for (std::size_t j = 0; j < sides.size(); ++j) c.push_back(clamp(p[j], sides[j].lo, sides[j].hi));
  return VecNet(std::move(c));
}

void require_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::dimension_mismatch, "dimensions differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

GenNumber shape_sup(const Shape& s) {
  std::vector<Interval> scratch;
  if (const auto* sides = box_sides(s, scratch)) return norm_inf(far_corner(*sides));
  const auto& p = std::get<Points>(s);
  GenNumber n = norm_inf(p.pts[0]);
  for (std::size_t j = 1; j < p.pts.size(); ++j) n = max(n, norm_inf(p.pts[j]));
  return n;
}

/// Exactly-zero pattern of a net near 0.
enum class ZeroClass { zero, nonzero, mixed };

ZeroClass zero_class(const GenNumber& x, const Config& cfg) {
  bool any_zero = false, any_nonzero = false;
  if (x.symbolic()) {
    const auto& net = x.net();
    for (std::size_t i = 0; i < net.pieces().size(); ++i) {
      if (!net.recurring()[i]) continue;
      (net.pieces()[i].value.is_zero() ? any_zero : any_nonzero) = true;
    }
  } else {
    const auto& s = x.samples();
    const int first = std::max(s.grid().k_min, s.grid().k_max - cfg.slope_window + 1);
    for (int k = first; k <= s.grid().k_max; ++k) (s.sign(k) == 0 ? any_zero : any_nonzero) = true;
  }
  if (any_zero && any_nonzero) return ZeroClass::mixed;
  return any_nonzero ? ZeroClass::nonzero : ZeroClass::zero;
}

enum class Keep { keep, drop };

/// Keep when all conditions are eventually ≥ 0, drop when one is eventually < 0.
Keep keep_if_nonneg(const std::vector<GenNumber>& conds, const Config& cfg) {
  bool all_nonneg = true;
  for (const auto& c : conds) {
    const auto cls = eventual_sign_class(c, cfg);
    if (cls == EventualSign::neg) return Keep::drop;
    if (cls == EventualSign::mixed) all_nonneg = false;
  }
  if (!all_nonneg)
    throw Error(ErrorCode::unsupported_shape_combo, "per-ε emptiness differs between recurring comb pieces");
  return Keep::keep;
}

}  // namespace

EventualSign eventual_sign_class(const GenNumber& x, const Config& cfg) {
  bool any_neg = false, any_nonneg = false;
  if (x.symbolic()) {
    const auto& net = x.net();
    for (std::size_t i = 0; i < net.pieces().size(); ++i) {
      if (!net.recurring()[i]) continue;
      (net.pieces()[i].value.eventual_sign() < 0 ? any_neg : any_nonneg) = true;
    }
  } else {
    const auto& s = x.samples();
    const int first = std::max(s.grid().k_min, s.grid().k_max - cfg.slope_window + 1);
    for (int k = first; k <= s.grid().k_max; ++k) (s.sign(k) < 0 ? any_neg : any_nonneg) = true;
  }
  if (any_neg && any_nonneg) return EventualSign::mixed;
  return any_neg ? EventualSign::neg : EventualSign::nonneg;
}

std::size_t shape_dim(const Shape& s) {
  if (std::holds_alternative<Interval>(s)) return 1;
  if (const auto* b = std::get_if<Box>(&s)) return b->sides.size();
  if (const auto* p = std::get_if<Points>(&s)) return p->pts.empty() ? 0 : p->pts.front().dim();
  return std::get<Exterior>(s).dim;
}

std::string shape_to_string(const Shape& s) {
  auto iv = [](const Interval& i) { return "interval(" + i.lo.to_string() + ", " + i.hi.to_string() + ")"; };
  if (const auto* i = std::get_if<Interval>(&s)) return iv(*i);
  if (const auto* b = std::get_if<Box>(&s)) {
    std::string out = "box(";
    for (std::size_t j = 0; j < b->sides.size(); ++j) out += (j ? ", " : "") + iv(b->sides[j]);
    return out + ")";
  }
  if (const auto* p = std::get_if<Points>(&s)) {
    std::string out = "points(";
    for (std::size_t j = 0; j < p->pts.size(); ++j) {
      if (j) out += "; ";
      out += p->pts[j].to_string();
    }
    return out + ")";
  }
  const auto& e = std::get<Exterior>(s);
  return "exterior(" + e.r.to_string() + (e.dim == 1 ? "" : ", " + std::to_string(e.dim)) + ")";
}

SetFamily::SetFamily(std::size_t dim, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim_ == 0) throw Error(ErrorCode::invalid_shape, "set dimension must be positive");
}

SetFamily::SetFamily(std::vector<Shape> shapes, std::size_t dim, std::string name)
    : shapes_(std::move(shapes)), dim_(dim), name_(std::move(name)) {
  if (dim_ == 0) throw Error(ErrorCode::invalid_shape, "set dimension must be positive");
  for (const auto& s : shapes_) {
    require_dim(shape_dim(s), dim_);
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      if (sides->empty()) throw Error(ErrorCode::invalid_shape, "box needs at least one side");
      for (const auto& side : *sides) {
        if (!eventually_ge(side.hi, side.lo).value)
          throw Error(ErrorCode::invalid_shape, "interval has lo > hi near 0: " + shape_to_string(s));
      }
    } else if (const auto* p = std::get_if<Points>(&s)) {
      if (p->pts.empty()) throw Error(ErrorCode::invalid_shape, "points shape needs at least one point");
      for (const auto& q : p->pts) require_dim(q.dim(), dim_);
    } else {
      const auto& e = std::get<Exterior>(s);
      if (!eventually_ge(e.r, zero()).value)
        throw Error(ErrorCode::invalid_shape, "exterior radius is negative near 0");
    }
  }
}

SetFamily::SetFamily(Shape shape) : SetFamily(std::vector<Shape>{shape}, shape_dim(shape)) {}

std::string SetFamily::to_string() const {
  if (shapes_.empty()) return dim_ == 1 ? "empty" : "empty(" + std::to_string(dim_) + ")";
  std::string out;
  for (std::size_t i = 0; i < shapes_.size(); ++i) out += (i ? " | " : "") + shape_to_string(shapes_[i]);
  return out;
}

SetFamily make_interval(const GenNumber& lo, const GenNumber& hi) { return SetFamily(Shape(Interval{lo, hi})); }

SetFamily make_points(const std::vector<VecNet>& pts) {
  if (pts.empty()) throw Error(ErrorCode::invalid_shape, "points shape needs at least one point");
  return SetFamily({Points{pts}}, pts.front().dim());
}

SetFamily make_exterior(const GenNumber& r, std::size_t dim) { return SetFamily({Exterior{r, dim}}, dim); }

MembershipReport contains(const InternalSet& a, const VecNet& u, const Config& cfg) {
  require_dim(a.dim(), u.dim());
  if (a.empty()) return {{false, u.symbolic() ? Backend::exact : Backend::heuristic}, std::nullopt};
  GenNumber d = family_dist(a, u);
  const Judgement j = is_negligible(d, cfg);
  return {j, std::move(d)};
}

BoundReport is_sharply_bounded(const SetFamily& a, const Config& cfg) {
  BoundReport out;
  if (a.empty()) {
    out.bounded = true;
    out.sup = zero();
    return out;
  }
  for (const auto& s : a.shapes()) {
    if (const auto* e = std::get_if<Exterior>(&s)) {
      (void)e;
      out.bounded = false;
      return out;
    }
  }
  GenNumber sup = shape_sup(a.shapes()[0]);
  for (std::size_t i = 1; i < a.shapes().size(); ++i) sup = max(sup, shape_sup(a.shapes()[i]));
  const ValuationEstimate v = valuation(sup, cfg);
  out.backend = v.backend;
  out.bounded = is_moderate(sup, cfg).value;
  if (out.bounded && std::isfinite(v.value)) {
    const double slack = v.backend == Backend::exact ? 1e-9 : 0.05;
    out.M = std::max(0, static_cast<int>(std::ceil(-v.value - slack)));
  }
  out.sup = std::move(sup);
  return out;
}

TrimResult trim_bounded(const InternalSet& a, int M, const Config& cfg) {
  const GenNumber bound = eps_power(-M);
  const GenNumber R = bound + GenNumber::constant(1.0);
  std::vector<Shape> kept;
  bool verified = true;
  for (const auto& s : a.shapes()) {
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      verified = verified && eventually_ge(bound, shape_sup(s), cfg).value;
      std::vector<Interval> clipped;
      std::vector<GenNumber> conds;
      for (const auto& side : *sides) {
        clipped.push_back({max(side.lo, -R), min(side.hi, R)});
        conds.push_back(clipped.back().hi - clipped.back().lo);
      }
      if (keep_if_nonneg(conds, cfg) == Keep::keep) kept.push_back(box_shape(std::move(clipped)));
    } else if (const auto* p = std::get_if<Points>(&s)) {
      verified = verified && eventually_ge(bound, shape_sup(s), cfg).value;
      std::vector<VecNet> pts;
      for (const auto& q : p->pts) {
        if (keep_if_nonneg({R - norm_inf(q)}, cfg) == Keep::keep) pts.push_back(q);
      }
      if (!pts.empty()) kept.push_back(Points{std::move(pts)});
    } else {
      const auto& e = std::get<Exterior>(s);
      verified = false;
      if (e.dim != 1)
        throw Error(ErrorCode::unsupported_shape_combo, "clipping an exterior in d > 1 gives a shell");
      if (keep_if_nonneg({R - e.r}, cfg) == Keep::keep) {
        kept.push_back(Interval{-R, -e.r});
        kept.push_back(Interval{e.r, R});
      }
    }
  }
  if (kept.empty()) throw Error(ErrorCode::empty_clip, "clipping to |x| <= eps^-M + 1 leaves nothing");
  return {SetFamily(std::move(kept), a.dim(), a.name()), verified};
}

namespace {

struct Candidate {
  GenNumber d;
  VecNet u, v;
};

void pair_candidates(const Shape& sa, const Shape& sb, std::vector<Candidate>& out) {
  std::vector<Interval> sa_scratch, sb_scratch;
  const auto* a_sides = box_sides(sa, sa_scratch);
  const auto* b_sides = box_sides(sb, sb_scratch);
  const auto* a_pts = std::get_if<Points>(&sa);
  if (const auto* e = std::get_if<Exterior>(&sb)) {
    std::vector<VecNet> us;
    if (a_sides) us.push_back(far_corner(*a_sides));
    else
      for (const auto& p : a_pts->pts) us.push_back(p);
    for (const auto& u : us) out.push_back({pos_part(e->r - norm_inf(u)), u, push_out(u, e->r)});
    return;
  }
  if (a_sides && b_sides) {
    std::vector<GenNumber> u, v;
    for (std::size_t j = 0; j < a_sides->size(); ++j) {
      const auto& ia = (*a_sides)[j];
      const auto& ib = (*b_sides)[j];
      u.push_back(clamp(max(ia.lo, ib.lo), ia.lo, ia.hi));
      v.push_back(clamp(u.back(), ib.lo, ib.hi));
    }
    VecNet uu(std::move(u)), vv(std::move(v));
    out.push_back({dist_inf(uu, vv), uu, vv});
    return;
  }
  const auto* b_pts = std::get_if<Points>(&sb);
  if (a_sides) {
    for (const auto& q : b_pts->pts) {
      VecNet u = clamp_vec(q, *a_sides);
      out.push_back({dist_inf(u, q), u, q});
    }
    return;
  }
  if (b_sides) {
    for (const auto& p : a_pts->pts) {
      VecNet v = clamp_vec(p, *b_sides);
      out.push_back({dist_inf(p, v), p, v});
    }
    return;
  }
  for (const auto& p : a_pts->pts) {
    for (const auto& q : b_pts->pts) out.push_back({dist_inf(p, q), p, q});
  }
}

}  // namespace

MinDistance min_distance(const InternalSet& a, const InternalSet& b, const Config& cfg) {
  require_dim(a.dim(), b.dim());
  if (a.empty() || b.empty()) throw Error(ErrorCode::empty_family, "min_distance needs nonempty families");
  if (!is_sharply_bounded(a, cfg).bounded)
    throw Error(ErrorCode::not_sharply_bounded, "first family is not sharply bounded");
  std::vector<Candidate> cands;
  for (const auto& sa : a.shapes()) {
    for (const auto& sb : b.shapes()) pair_candidates(sa, sb, cands);
  }
  Candidate best = cands.front();
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const auto& c = cands[i];
    best = Candidate{select_ge(c.d, best.d, best.d, c.d), select_vec(c.d, best.d, best.u, c.u),
                     select_vec(c.d, best.d, best.v, c.v)};
  }
  return {best.d, best.u, best.v};
}

MaxNorm max_norm(const InternalSet& a, const Config& cfg) {
  if (a.empty()) throw Error(ErrorCode::empty_family, "max_norm needs a nonempty family");
  if (!is_sharply_bounded(a, cfg).bounded)
    throw Error(ErrorCode::not_sharply_bounded, "family is not sharply bounded");
  std::vector<std::pair<GenNumber, VecNet>> cands;
  for (const auto& s : a.shapes()) {
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      VecNet c = far_corner(*sides);
      cands.emplace_back(norm_inf(c), c);
    } else {
      for (const auto& p : std::get<Points>(s).pts) cands.emplace_back(norm_inf(p), p);
    }
  }
  auto best = cands.front();
  for (std::size_t i = 1; i < cands.size(); ++i) {
    const auto& [n, w] = cands[i];
    best = {select_ge(best.first, n, best.first, n), select_vec(best.first, n, best.second, w)};
  }
  return {best.first, best.second};
}

SharpBallDemo sharp_ball_demo(int count, unsigned long seed, const Config& cfg) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> quarter(1, 16);
  std::uniform_real_distribution<double> mag(0.5, 4.0);
  std::bernoulli_distribution coin(0.5);
  const Grid grid = grid_of(cfg);
  const GenNumber h = SampledNet::from_function(
      grid, [](const Real& eps) -> Real { return Real(1) / boost::multiprecision::abs(boost::multiprecision::log(eps)); });

  SharpBallDemo demo;
  demo.h_valuation = valuation(h, cfg).value;
  demo.all_ok = std::fabs(demo.h_valuation) < 0.1;
  for (int i = 0; i < count; ++i) {
    const double c = quarter(rng) / 4.0;
    std::vector<Term> terms{{coin(rng) ? mag(rng) : -mag(rng), c}};
    if (coin(rng)) terms.push_back({coin(rng) ? mag(rng) : -mag(rng), c + quarter(rng) / 4.0});
    const GenNumber u = PiecewiseNet(PowerSum(std::move(terms), coin(rng) ? NeglSign::positive : NeglSign::none));
    const GenNumber v = eps_power(c / 2);

    SharpBallCase cs;
    cs.u = u.to_string();
    cs.c = valuation(u, cfg).value;
    cs.v_in_ball = sharp_norm(v, cfg) < 1.0;
    const GenNumber gap = abs(v) - abs(u);
    cs.v_strictly_larger = eventual_sign_class(gap, cfg) == EventualSign::nonneg && !is_negligible(gap, cfg).value;
    const GenNumber slack = h - abs(u).sampled(grid);
    cs.h_bounds_u = eventual_sign_class(slack, cfg) == EventualSign::nonneg;
    demo.all_ok = demo.all_ok && cs.c > 0 && cs.v_in_ball && cs.v_strictly_larger && cs.h_bounds_u;
    demo.cases.push_back(std::move(cs));
  }
  return demo;
}

VecNet interleave(const std::vector<std::pair<VecNet, Region>>& parts) {
  if (parts.empty()) throw Error(ErrorCode::not_a_partition, "no parts to interleave");
  std::vector<Region> regions;
  bool has_tail = false;
  for (const auto& [pt, region] : parts) {
    require_dim(pt.dim(), parts.front().first.dim());
    if (has_tail) throw Error(ErrorCode::not_a_partition, "parts after the tail part are unreachable");
    if (region.empty()) has_tail = true;
    regions.push_back(region);
  }
  const RegionScan scan = scan_regions(regions);
  if (scan.overlap) throw Error(ErrorCode::not_a_partition, "index sets overlap near 0");
  if (!has_tail && scan.gap_near_zero) throw Error(ErrorCode::not_a_partition, "index sets do not cover (0, eta)");

  const std::size_t d = parts.front().first.dim();
  bool symbolic = true;
  const Grid* grid = nullptr;
  for (const auto& [pt, region] : parts) {
    if (!pt.symbolic()) {
      symbolic = false;
      grid = &pt[0].samples().grid();
    }
  }
  std::vector<GenNumber> comps;
  for (std::size_t j = 0; j < d; ++j) {
    if (symbolic) {
      std::vector<std::pair<Region, PiecewiseNet>> sp;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sp.emplace_back(i + 1 == parts.size() ? Region{} : parts[i].second, parts[i].first[j].net());
      }
      comps.emplace_back(splice(sp));
    } else {
      std::vector<Real> vals;
      for (int k = grid->k_min; k <= grid->k_max; ++k) {
        const double lambda = -k * std::log(2.0);
        std::size_t pick = parts.size() - 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          bool hit = true;
          for (const auto& c : parts[i].second) hit = hit && c.contains_log(lambda);
          if (hit) {
            pick = i;
            break;
          }
        }
        vals.push_back(parts[pick].first[j].eval(grid->eps(k)));
      }
      comps.emplace_back(SampledNet(*grid, std::move(vals)));
    }
  }
  return VecNet(std::move(comps));
}

InternalSet internal_union(const InternalSet& a, const InternalSet& b) {
  require_dim(a.dim(), b.dim());
  std::vector<Shape> shapes = a.shapes();
  shapes.insert(shapes.end(), b.shapes().begin(), b.shapes().end());
  return SetFamily(std::move(shapes), a.dim());
}

namespace {

/// Component of a d = 1 family; missing ends are infinite.
struct Piece1 {
  std::optional<GenNumber> lo, hi;
};

std::vector<Piece1> components_1d(const SetFamily& f) {
  std::vector<Piece1> out;
  for (const auto& s : f.shapes()) {
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      out.push_back({(*sides)[0].lo, (*sides)[0].hi});
    } else if (const auto* p = std::get_if<Points>(&s)) {
      for (const auto& q : p->pts) out.push_back({q[0], q[0]});
    } else {
      const auto& e = std::get<Exterior>(s);
      out.push_back({std::nullopt, -e.r});
      out.push_back({e.r, std::nullopt});
    }
  }
  return out;
}

GenNumber dist_1d(const GenNumber& u, const std::vector<Piece1>& comps) {
  std::optional<GenNumber> best;
  for (const auto& c : comps) {
    GenNumber d = zero();
    if (c.lo) d = max(d, *c.lo - u);
    if (c.hi) d = max(d, u - *c.hi);
    best = best ? min(*best, d) : d;
  }
  return *best;
}

Real shape_dist_at(const Shape& s, const std::vector<Real>& u, const Real& eps) {
  std::vector<Interval> scratch;
  if (const auto* sides = box_sides(s, scratch)) {
    Real d = 0;
    for (std::size_t j = 0; j < sides->size(); ++j) {
      const Real lo = (*sides)[j].lo.eval(eps), hi = (*sides)[j].hi.eval(eps);
      if (lo - u[j] > d) d = lo - u[j];
      if (u[j] - hi > d) d = u[j] - hi;
    }
    return d;
  }
  if (const auto* p = std::get_if<Points>(&s)) {
    std::optional<Real> best;
    for (const auto& q : p->pts) {
      Real d = 0;
      for (std::size_t j = 0; j < u.size(); ++j) {
        const Real x = boost::multiprecision::abs(u[j] - q[j].eval(eps));
        if (x > d) d = x;
      }
      if (!best || d < *best) best = d;
    }
    return *best;
  }
  Real n = 0;
  for (const auto& x : u) n = boost::multiprecision::max(n, boost::multiprecision::abs(x));
  const Real gap = std::get<Exterior>(s).r.eval(eps) - n;
  return gap > 0 ? gap : Real(0);
}

Real family_dist_at(const SetFamily& b, const std::vector<Real>& u, const Real& eps) {
  Real best = shape_dist_at(b.shapes()[0], u, eps);
  for (std::size_t i = 1; i < b.shapes().size(); ++i) {
    const Real d = shape_dist_at(b.shapes()[i], u, eps);
    if (d < best) best = d;
  }
  return best;
}

/// Sampled fallback: per grid ε, the sup over corners, centres and seeded
/// random points of each shape of A. A lower estimate of the directed distance.
GenNumber sampled_directed(const SetFamily& a, const SetFamily& b, const Config& cfg) {
  const Grid grid = grid_of(cfg);
  const std::size_t d = a.dim();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> fractions;
  for (std::size_t mask = 0; mask < (std::size_t{1} << std::min<std::size_t>(d, 10)); ++mask) {
    std::vector<double> t(d, 0.0);
    for (std::size_t j = 0; j < std::min<std::size_t>(d, 10); ++j) t[j] = (mask >> j) & 1U ? 1.0 : 0.0;
    fractions.push_back(std::move(t));
  }
  fractions.emplace_back(d, 0.5);
  for (int i = 0; i < 64; ++i) {
    std::vector<double> t(d);
    for (auto& x : t) x = unit(rng);
    fractions.push_back(std::move(t));
  }
  std::vector<Real> vals;
  for (int k = grid.k_min; k <= grid.k_max; ++k) {
    const Real eps = grid.eps(k);
    Real sup = 0;
    auto consider = [&](const std::vector<Real>& u) {
      const Real dist = family_dist_at(b, u, eps);
      if (dist > sup) sup = dist;
    };
    for (const auto& s : a.shapes()) {
      std::vector<Interval> scratch;
      if (const auto* sides = box_sides(s, scratch)) {
        std::vector<Real> lo, hi;
        for (const auto& side : *sides) {
          lo.push_back(side.lo.eval(eps));
          hi.push_back(side.hi.eval(eps));
        }
        for (const auto& t : fractions) {
          std::vector<Real> u;
          for (std::size_t j = 0; j < d; ++j) u.push_back(lo[j] + (hi[j] - lo[j]) * t[j]);
          consider(u);
        }
      } else {
        for (const auto& q : std::get<Points>(s).pts) {
          std::vector<Real> u;
          for (std::size_t j = 0; j < d; ++j) u.push_back(q[j].eval(eps));
          consider(u);
        }
      }
    }
    vals.push_back(sup);
  }
  return SampledNet(grid, std::move(vals));
}

bool all_points(const SetFamily& a) {
  return std::all_of(a.shapes().begin(), a.shapes().end(),
                     [](const Shape& s) { return std::holds_alternative<Points>(s); });
}

bool single_box(const SetFamily& a) {
  return a.shapes().size() == 1 &&
         (std::holds_alternative<Interval>(a.shapes()[0]) || std::holds_alternative<Box>(a.shapes()[0]));
}

struct Directed {
  std::optional<GenNumber> delta;
  bool exact;
};

Directed directed_distance(const SetFamily& a, const SetFamily& b, const Config& cfg) {
  if (a.empty()) return {zero(), true};
  if (b.empty()) return {std::nullopt, true};
  if (!is_sharply_bounded(a, cfg).bounded)
    throw Error(ErrorCode::not_sharply_bounded, "first family is not sharply bounded");

  if (a.dim() == 1) {
    const auto bc = components_1d(b);
    std::vector<GenNumber> cands;
    for (const auto& ac : components_1d(a)) {
      cands.push_back(*ac.lo);
      cands.push_back(*ac.hi);
      for (std::size_t j = 0; j < bc.size(); ++j) {
        for (std::size_t k = 0; k < bc.size(); ++k) {
          if (j == k || !bc[j].hi || !bc[k].lo) continue;
          cands.push_back(clamp(scale(*bc[j].hi + *bc[k].lo, 0.5), *ac.lo, *ac.hi));
        }
      }
    }
    GenNumber delta = dist_1d(cands[0], bc);
    for (std::size_t i = 1; i < cands.size(); ++i) delta = max(delta, dist_1d(cands[i], bc));
    return {delta, true};
  }
  if (all_points(a)) {
    std::optional<GenNumber> delta;
    for (const auto& s : a.shapes()) {
      for (const auto& p : std::get<Points>(s).pts) {
        GenNumber d = family_dist(b, p);
        delta = delta ? max(*delta, d) : d;
      }
    }
    return {delta, true};
  }
  if (single_box(a) && single_box(b)) {
    std::vector<Interval> sa_scratch, sb_scratch;
    const auto& sa = *box_sides(a.shapes()[0], sa_scratch);
    const auto& sb = *box_sides(b.shapes()[0], sb_scratch);
    GenNumber delta = zero();
    for (std::size_t j = 0; j < sa.size(); ++j)
      delta = max(delta, max(sb[j].lo - sa[j].lo, sa[j].hi - sb[j].hi));
    return {delta, true};
  }
  return {sampled_directed(a, b, cfg), false};
}

}  // namespace

InclusionReport subset_report(const InternalSet& a, const InternalSet& b, const Config& cfg) {
  require_dim(a.dim(), b.dim());
  const Directed d = directed_distance(a, b, cfg);
  if (!d.delta) return {{false, Backend::exact}, std::nullopt};
  Judgement j = is_negligible(*d.delta, cfg);
  if (!d.exact) j.backend = Backend::heuristic;
  return {j, d.delta};
}

InclusionReport equality_report(const InternalSet& a, const InternalSet& b, const Config& cfg) {
  require_dim(a.dim(), b.dim());
  if (!is_sharply_bounded(b, cfg).bounded)
    throw Error(ErrorCode::not_sharply_bounded, "second family is not sharply bounded");
  const Directed ab = directed_distance(a, b, cfg);
  const Directed ba = directed_distance(b, a, cfg);
  if (!ab.delta || !ba.delta) return {{false, Backend::exact}, std::nullopt};
  GenNumber h = max(*ab.delta, *ba.delta);
  Judgement j = is_negligible(h, cfg);
  if (!ab.exact || !ba.exact) j.backend = Backend::heuristic;
  return {j, std::move(h)};
}

SetFamily fatten(const SetFamily& a, int m) {
  const GenNumber w = eps_power(m);
  std::vector<Shape> out;
  for (const auto& s : a.shapes()) {
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      std::vector<Interval> grown;
      for (const auto& side : *sides) grown.push_back({side.lo - w, side.hi + w});
      out.push_back(box_shape(std::move(grown)));
    } else if (const auto* p = std::get_if<Points>(&s)) {
      for (const auto& q : p->pts) {
        std::vector<Interval> grown;
        for (std::size_t j = 0; j < q.dim(); ++j) grown.push_back({q[j] - w, q[j] + w});
        out.push_back(box_shape(std::move(grown)));
      }
    } else {
      const auto& e = std::get<Exterior>(s);
      out.push_back(Exterior{pos_part(e.r - w), e.dim});
    }
  }
  return SetFamily(std::move(out), a.dim(), a.name());
}

namespace {

void intersect_shapes(const Shape& sa, const Shape& sb, std::vector<Shape>& out, const Config& cfg) {
  std::vector<Interval> sa_scratch, sb_scratch;
  const auto* a_sides = box_sides(sa, sa_scratch);
  const auto* b_sides = box_sides(sb, sb_scratch);
  const auto* a_pts = std::get_if<Points>(&sa);
  const auto* b_pts = std::get_if<Points>(&sb);
  const auto* a_ext = std::get_if<Exterior>(&sa);
  const auto* b_ext = std::get_if<Exterior>(&sb);

  if (a_sides && b_sides) {
    std::vector<Interval> sides;
    std::vector<GenNumber> conds;
    for (std::size_t j = 0; j < a_sides->size(); ++j) {
      sides.push_back({max((*a_sides)[j].lo, (*b_sides)[j].lo), min((*a_sides)[j].hi, (*b_sides)[j].hi)});
      conds.push_back(sides.back().hi - sides.back().lo);
    }
    if (keep_if_nonneg(conds, cfg) == Keep::keep) out.push_back(box_shape(std::move(sides)));
    return;
  }
  if ((a_sides && b_pts) || (a_pts && b_sides)) {
    const auto& sides = a_sides ? *a_sides : *b_sides;
    const auto& pts = a_pts ? a_pts->pts : b_pts->pts;
    std::vector<VecNet> kept;
    for (const auto& q : pts) {
      std::vector<GenNumber> conds;
      for (std::size_t j = 0; j < sides.size(); ++j) {
        conds.push_back(q[j] - sides[j].lo);
        conds.push_back(sides[j].hi - q[j]);
      }
      if (keep_if_nonneg(conds, cfg) == Keep::keep) kept.push_back(q);
    }
    if (!kept.empty()) out.push_back(Points{std::move(kept)});
    return;
  }
  if (a_pts && b_pts) {
    std::vector<VecNet> kept;
    for (const auto& p : a_pts->pts) {
      for (const auto& q : b_pts->pts) {
        bool all_zero = true, some_nonzero = false;
        for (std::size_t j = 0; j < p.dim(); ++j) {
          const auto cls = zero_class(p[j] - q[j], cfg);
          if (cls == ZeroClass::nonzero) some_nonzero = true;
          if (cls != ZeroClass::zero) all_zero = false;
        }
        if (some_nonzero) continue;
        if (!all_zero)
          throw Error(ErrorCode::unsupported_shape_combo, "points coincide only on some comb pieces");
        kept.push_back(p);
        break;
      }
    }
    if (!kept.empty()) out.push_back(Points{std::move(kept)});
    return;
  }
  if (a_ext && b_ext) {
    out.push_back(Exterior{max(a_ext->r, b_ext->r), a_ext->dim});
    return;
  }
  const Exterior& e = a_ext ? *a_ext : *b_ext;
  const Shape& other = a_ext ? sb : sa;
  if (const auto* p = std::get_if<Points>(&other)) {
    std::vector<VecNet> kept;
    for (const auto& q : p->pts) {
      if (keep_if_nonneg({norm_inf(q) - e.r}, cfg) == Keep::keep) kept.push_back(q);
    }
    if (!kept.empty()) out.push_back(Points{std::move(kept)});
    return;
  }
  std::vector<Interval> scratch;
  const auto& sides = *box_sides(other, scratch);
  if (zero_class(e.r, cfg) == ZeroClass::zero) {
    out.push_back(other);
    return;
  }
  if (sides.size() != 1)
    throw Error(ErrorCode::unsupported_shape_combo, "box minus a centred cube is not a finite union of boxes here");
  const Interval& iv = sides[0];
  const Interval left{iv.lo, min(iv.hi, -e.r)};
  const Interval right{max(iv.lo, e.r), iv.hi};
  if (keep_if_nonneg({left.hi - left.lo}, cfg) == Keep::keep) out.push_back(left);
  if (keep_if_nonneg({right.hi - right.lo}, cfg) == Keep::keep) out.push_back(right);
}

}  // namespace

SetFamily intersect_families(const SetFamily& a, const SetFamily& b, const Config& cfg) {
  require_dim(a.dim(), b.dim());
  std::vector<Shape> out;
  for (const auto& sa : a.shapes()) {
    for (const auto& sb : b.shapes()) intersect_shapes(sa, sb, out, cfg);
  }
  return SetFamily(std::move(out), a.dim());
}

InternalSet product(const InternalSet& a, const InternalSet& b) {
  const std::size_t d = a.dim() + b.dim();
  std::vector<Shape> out;
  auto as_boxes = [](const Shape& s) {
    std::vector<std::vector<Interval>> boxes;
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      boxes.push_back(*sides);
    } else if (const auto* p = std::get_if<Points>(&s)) {
      for (const auto& q : p->pts) {
        std::vector<Interval> deg;
        for (std::size_t j = 0; j < q.dim(); ++j) deg.push_back({q[j], q[j]});
        boxes.push_back(std::move(deg));
      }
    } else {
      throw Error(ErrorCode::unsupported_shape_combo, "products with an exterior are not representable");
    }
    return boxes;
  };
  for (const auto& sa : a.shapes()) {
    for (const auto& sb : b.shapes()) {
      const auto* pa = std::get_if<Points>(&sa);
      const auto* pb = std::get_if<Points>(&sb);
      if (pa && pb) {
        std::vector<VecNet> pts;
        for (const auto& p : pa->pts) {
          for (const auto& q : pb->pts) pts.push_back(concat(p, q));
        }
        out.push_back(Points{std::move(pts)});
        continue;
      }
      for (const auto& ba : as_boxes(sa)) {
        for (const auto& bb : as_boxes(sb)) {
          std::vector<Interval> sides = ba;
          sides.insert(sides.end(), bb.begin(), bb.end());
          out.push_back(Box{std::move(sides)});
        }
      }
    }
  }
  return SetFamily(std::move(out), d);
}

Projection project(const InternalSet& a, const std::vector<std::size_t>& coords, bool allow_unbounded,
                   const Config& cfg) {
  if (coords.empty()) throw Error(ErrorCode::invalid_argument, "projection needs at least one coordinate");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= a.dim()) throw Error(ErrorCode::dimension_mismatch, "projection coordinate out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (coords[i] == coords[j]) throw Error(ErrorCode::invalid_argument, "projection coordinates repeat");
    }
  }
  const bool bounded = is_sharply_bounded(a, cfg).bounded;
  if (!bounded && !allow_unbounded)
    throw Error(ErrorCode::not_sharply_bounded,
                "projection of a family without a sharply bounded representative need not be internal");
  std::vector<Shape> out;
  for (const auto& s : a.shapes()) {
    std::vector<Interval> scratch;
    if (const auto* sides = box_sides(s, scratch)) {
      std::vector<Interval> kept;
      for (auto c : coords) kept.push_back((*sides)[c]);
      out.push_back(box_shape(std::move(kept)));
    } else if (const auto* p = std::get_if<Points>(&s)) {
      std::vector<VecNet> pts;
      for (const auto& q : p->pts) {
        std::vector<GenNumber> comps;
        for (auto c : coords) comps.push_back(q[c]);
        pts.emplace_back(std::move(comps));
      }
      out.push_back(Points{std::move(pts)});
    } else {
      const auto& e = std::get<Exterior>(s);
      out.push_back(Exterior{coords.size() == a.dim() ? e.r : zero(), coords.size()});
    }
  }
  return {SetFamily(std::move(out), coords.size(), a.name()), bounded};
}

VecNet random_member(const SetFamily& a, std::mt19937_64& rng) {
  if (a.empty()) throw Error(ErrorCode::empty_family, "empty family has no members");
  std::uniform_int_distribution<std::size_t> pick(0, a.shapes().size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Shape& s = a.shapes()[pick(rng)];
  std::vector<Interval> scratch;
  if (const auto* sides = box_sides(s, scratch)) {
    std::vector<GenNumber> c;
    for (const auto& side : *sides) {
      // Endpoints are drawn often: they are where inclusion fails first.
      const double r = unit(rng);
      const double t = r < 0.2 ? 0.0 : (r < 0.4 ? 1.0 : unit(rng));
      c.push_back(side.lo + scale(side.hi - side.lo, t));
    }
    return VecNet(std::move(c));
  }
  if (const auto* p = std::get_if<Points>(&s)) {
    std::uniform_int_distribution<std::size_t> which(0, p->pts.size() - 1);
    return p->pts[which(rng)];
  }
  const auto& e = std::get<Exterior>(s);
  std::vector<GenNumber> c(e.dim, zero());
  std::uniform_int_distribution<std::size_t> coord(0, e.dim - 1);
  const GenNumber out = e.r + GenNumber::constant(unit(rng));
  c[coord(rng)] = unit(rng) < 0.5 ? out : -out;
  return VecNet(std::move(c));
}

}  // namespace colombeau
