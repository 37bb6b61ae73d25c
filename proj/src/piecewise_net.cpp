#include "colombeau/piecewise_net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "colombeau/error.hpp"

namespace colombeau {

bool CombPattern::contains_log(double lambda) const {
  const double t = (lambda - std::log(c)) / std::log(q);
  if (t < -1e-9) return false;
  const double k = std::floor(t + 1e-9);
  const long long ki = static_cast<long long>(k);
  return ((ki % m) + m) % m == r;
}

std::string CombPattern::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "comb " << c << ' ' << q << ' ' << m << ' ' << r;
  return os.str();
}

std::string region_to_string(const Region& region) {
  if (region.empty()) return "tail";
  std::string out;
  for (std::size_t i = 0; i < region.size(); ++i) {
    if (i) out += " & ";
    out += region[i].to_string();
  }
  return out;
}

RegionScan scan_regions(const std::vector<Region>& regions) {
  RegionScan out;
  out.active.assign(regions.size(), false);
  out.recurring.assign(regions.size(), false);

  std::vector<CombPattern> combs;
  std::vector<std::vector<std::size_t>> refs(regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (const auto& p : regions[i]) {
      auto it = std::find(combs.begin(), combs.end(), p);
      if (it == combs.end()) {
        combs.push_back(p);
        it = combs.end() - 1;
      }
      refs[i].push_back(static_cast<std::size_t>(it - combs.begin()));
    }
  }

  if (combs.empty()) {
    // Only tails: the first one is always active.
    for (std::size_t i = 0; i < regions.size(); ++i) {
      if (regions[i].empty()) {
        out.active[i] = out.recurring[i] = true;
        break;
      }
    }
    return out;
  }

  double top = 0.0;
  double width = 256.0;
  for (const auto& p : combs) {
    top = std::min(top, std::log(p.c));
    width = std::max(width, 64.0 * p.m * std::fabs(std::log(p.q)));
  }
  const double bottom = top - width;
  const double recurring_below = top - width / 2;

  std::vector<double> cuts{0.0, bottom};
  for (const auto& p : combs) {
    const double lc = std::log(p.c);
    const double lq = std::log(p.q);
    for (long k = 0;; ++k) {
      const double b = lc + static_cast<double>(k) * lq;
      if (b < bottom) break;
      cuts.push_back(b);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<char> in_comb(combs.size());
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    if (cuts[s + 1] - cuts[s] < 1e-12) continue;
    const double mid = 0.5 * (cuts[s] + cuts[s + 1]);
    for (std::size_t j = 0; j < combs.size(); ++j) in_comb[j] = combs[j].contains_log(mid);
    const bool deep = mid < recurring_below;
    std::optional<std::size_t> first;
    std::optional<std::size_t> first_comb;
    for (std::size_t i = 0; i < regions.size(); ++i) {
      bool hit = true;
      for (auto j : refs[i]) hit = hit && in_comb[j];
      if (!hit) continue;
      if (!first) first = i;
      if (deep && !regions[i].empty()) {
        if (first_comb && !out.overlap) out.overlap = std::make_pair(*first_comb, i);
        if (!first_comb) first_comb = i;
      }
    }
    if (!first) {
      if (deep) out.gap_near_zero = true;
      continue;
    }
    out.active[*first] = true;
    if (deep) out.recurring[*first] = true;
  }
  return out;
}

PiecewiseNet::PiecewiseNet() : PiecewiseNet(PowerSum{}) {}

PiecewiseNet::PiecewiseNet(PowerSum value) {
  pieces_.push_back({{}, std::move(value)});
  recurring_ = {true};
}

PiecewiseNet::PiecewiseNet(std::vector<Piece> pieces, bool) : pieces_(std::move(pieces)) { finalize(); }

PiecewiseNet PiecewiseNet::from_pieces(std::vector<Piece> pieces) {
  std::vector<Piece> combs;
  std::optional<Piece> tail;
  for (auto& p : pieces) {
    if (p.region.empty()) {
      if (tail) throw Error(ErrorCode::syntax, "net has more than one tail piece");
      tail = std::move(p);
    } else {
      for (const auto& c : p.region) {
        if (!(c.c > 0 && c.c < 1) || !(c.q > 0 && c.q < 1) || c.m < 1 || c.r < 0 || c.r >= c.m)
          throw Error(ErrorCode::syntax, "invalid comb parameters: " + c.to_string());
      }
      combs.push_back(std::move(p));
    }
  }
  if (!tail) throw Error(ErrorCode::syntax, "net has no tail piece");
  std::vector<Region> regions;
  for (const auto& p : combs) regions.push_back(p.region);
  const auto scan = scan_regions(regions);
  if (scan.overlap) {
    throw Error(ErrorCode::overlap, "comb pieces intersect near 0: [" +
                                        region_to_string(regions[scan.overlap->first]) + "] and [" +
                                        region_to_string(regions[scan.overlap->second]) + "]");
  }
  combs.push_back(std::move(*tail));
  return PiecewiseNet(std::move(combs), true);
}

void PiecewiseNet::finalize() {
  for (auto& p : pieces_) {
    Region dedup;
    for (const auto& c : p.region) {
      if (std::find(dedup.begin(), dedup.end(), c) == dedup.end()) dedup.push_back(c);
    }
    p.region = std::move(dedup);
  }
  std::vector<Region> regions;
  for (const auto& p : pieces_) regions.push_back(p.region);
  auto scan = scan_regions(regions);

  std::vector<Piece> kept;
  std::vector<bool> rec;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const bool last = i + 1 == pieces_.size();
    if (!scan.active[i] && !last) continue;
    kept.push_back(std::move(pieces_[i]));
    rec.push_back(scan.recurring[i]);
  }
  const bool uniform = std::all_of(kept.begin(), kept.end(),
                                   [&](const Piece& p) { return p.value == kept.front().value; });
  if (uniform) {
    PowerSum v = kept.front().value;
    kept.clear();
    kept.push_back({{}, std::move(v)});
    rec = {true};
  }
  pieces_ = std::move(kept);
  recurring_ = std::move(rec);
}

const PowerSum& PiecewiseNet::piece_at_log(double lambda) const {
  for (const auto& p : pieces_) {
    bool hit = true;
    for (const auto& c : p.region) hit = hit && c.contains_log(lambda);
    if (hit) return p.value;
  }
  return pieces_.back().value;
}

Real PiecewiseNet::eval(const Real& eps) const {
  if (pieces_.size() == 1) return pieces_.front().value.eval(eps);
  return piece_at_log(to_double(boost::multiprecision::log(eps))).eval(eps);
}

double PiecewiseNet::valuation() const {
  double v = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (recurring_[i]) v = std::min(v, pieces_[i].value.valuation());
  }
  return v;
}

bool PiecewiseNet::is_negligible() const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (recurring_[i] && !pieces_[i].value.is_negligible()) return false;
  }
  return true;
}

std::optional<int> PiecewiseNet::eventual_sign() const {
  std::optional<int> sign;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!recurring_[i]) continue;
    const int s = pieces_[i].value.eventual_sign();
    if (sign && *sign != s) return std::nullopt;
    sign = s;
  }
  return sign;
}

bool PiecewiseNet::eventually_nonneg() const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (recurring_[i] && pieces_[i].value.eventual_sign() < 0) return false;
  }
  return true;
}

std::string PiecewiseNet::to_string() const {
  if (pieces_.size() == 1) return pieces_.front().value.to_string();
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) out += " ; ";
    out += "[" + region_to_string(pieces_[i].region) + "] " + pieces_[i].value.to_string();
  }
  return out;
}

PiecewiseNet PiecewiseNet::combine(std::span<const PiecewiseNet* const> nets,
                                   const std::function<PowerSum(std::span<const PowerSum* const>)>& f) {
  const std::size_t n = nets.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "combine needs at least one net");
  std::vector<std::size_t> idx(n, 0);
  std::vector<Piece> out;
  std::vector<const PowerSum*> vals(n);
  bool all_single = true;
  for (auto* x : nets) all_single = all_single && x->is_single();
  while (true) {
    Region region;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& piece = nets[j]->pieces_[idx[j]];
      region.insert(region.end(), piece.region.begin(), piece.region.end());
      vals[j] = &piece.value;
    }
    out.push_back({std::move(region), f(vals)});
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++idx[j] < nets[j]->pieces_.size()) break;
      idx[j] = 0;
      if (j == 0) {
        j = n + 1;
        break;
      }
    }
    if (j == n + 1) break;
  }
  if (all_single) return PiecewiseNet(std::move(out.front().value));
  return PiecewiseNet(std::move(out), true);
}

PiecewiseNet PiecewiseNet::from_ordered(std::vector<Piece> pieces) {
  if (pieces.empty() || !pieces.back().region.empty())
    throw Error(ErrorCode::invalid_argument, "ordered pieces must end with a tail");
  return PiecewiseNet(std::move(pieces), true);
}

namespace {

PiecewiseNet unary(const PiecewiseNet& a, const std::function<PowerSum(const PowerSum&)>& f) {
  const PiecewiseNet* nets[] = {&a};
  return PiecewiseNet::combine(nets, [&](std::span<const PowerSum* const> v) { return f(*v[0]); });
}

PiecewiseNet binary(const PiecewiseNet& a, const PiecewiseNet& b,
                    const std::function<PowerSum(const PowerSum&, const PowerSum&)>& f) {
  const PiecewiseNet* nets[] = {&a, &b};
  return PiecewiseNet::combine(nets, [&](std::span<const PowerSum* const> v) { return f(*v[0], *v[1]); });
}

int sign_or_first(const PowerSum& d) {
  try {
    return d.eventual_sign();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::indeterminate_sign) throw;
    return 0;
  }
}

}  // namespace

PiecewiseNet operator+(const PiecewiseNet& a, const PiecewiseNet& b) {
  return binary(a, b, [](const PowerSum& x, const PowerSum& y) { return x + y; });
}

PiecewiseNet operator-(const PiecewiseNet& a, const PiecewiseNet& b) {
  return binary(a, b, [](const PowerSum& x, const PowerSum& y) { return x - y; });
}

PiecewiseNet operator*(const PiecewiseNet& a, const PiecewiseNet& b) {
  return binary(a, b, [](const PowerSum& x, const PowerSum& y) { return x * y; });
}

PiecewiseNet operator-(const PiecewiseNet& a) {
  return unary(a, [](const PowerSum& x) { return -x; });
}

PiecewiseNet scale(const PiecewiseNet& a, double factor) {
  return unary(a, [factor](const PowerSum& x) { return x.scaled(factor); });
}

PiecewiseNet abs(const PiecewiseNet& a) {
  return unary(a, [](const PowerSum& x) { return x.abs(); });
}

PiecewiseNet select_ge(const PiecewiseNet& key_a, const PiecewiseNet& key_b, const PiecewiseNet& if_ge,
                       const PiecewiseNet& if_lt) {
  const PiecewiseNet* nets[] = {&key_a, &key_b, &if_ge, &if_lt};
  return PiecewiseNet::combine(nets, [](std::span<const PowerSum* const> v) {
    return sign_or_first(*v[0] - *v[1]) >= 0 ? *v[2] : *v[3];
  });
}

PiecewiseNet max(const PiecewiseNet& a, const PiecewiseNet& b) { return select_ge(a, b, a, b); }

PiecewiseNet min(const PiecewiseNet& a, const PiecewiseNet& b) { return select_ge(b, a, a, b); }

PiecewiseNet indicator(const std::vector<CombPattern>& set) {
  std::vector<Piece> pieces;
  for (const auto& c : set) pieces.push_back({{c}, PowerSum::constant(1.0)});
  pieces.push_back({{}, PowerSum{}});
  return PiecewiseNet::from_pieces(std::move(pieces));
}

PiecewiseNet indicator_complement(const std::vector<CombPattern>& set) {
  return PiecewiseNet::constant(1.0) - indicator(set);
}

PiecewiseNet splice(const std::vector<std::pair<Region, PiecewiseNet>>& parts) {
  if (parts.empty()) throw Error(ErrorCode::invalid_argument, "splice needs at least one part");
  // Fold from the back: part i on its region, otherwise whatever follows.
  PiecewiseNet acc = parts.back().second;
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    const Region& region = parts[i].first;
    if (region.empty()) {
      acc = parts[i].second;
      continue;
    }
    std::vector<Piece> pieces;
    for (const auto& p : parts[i].second.pieces()) {
      Region r = region;
      r.insert(r.end(), p.region.begin(), p.region.end());
      pieces.push_back({std::move(r), p.value});
    }
    for (const auto& p : acc.pieces()) pieces.push_back(p);
    acc = PiecewiseNet::from_ordered(std::move(pieces));
  }
  return acc;
}

}  // namespace colombeau
