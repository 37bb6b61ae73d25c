#include "colombeau/saturation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "colombeau/error.hpp"
#include "colombeau/parse.hpp"

namespace colombeau {

namespace {

/// Non-empty lines with `#` comments stripped, paired with their line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({no, line});
  }
  return out;
}

std::string at_line(int no) { return " (line " + std::to_string(no) + ")"; }

VecNet origin(std::size_t dim) {
  return VecNet(std::vector<GenNumber>(dim, GenNumber::constant(0)));
}

bool zero_tail(const GenNumber& d, const Config& cfg) {
  if (d.symbolic()) return d.net().is_negligible();
  const auto& s = d.samples();
  const int first = std::max(s.grid().k_min, s.grid().k_max - cfg.slope_window + 1);
  for (int k = first; k <= s.grid().k_max; ++k)
    if (s.sign(k) != 0) return false;
  return true;
}

}  // namespace

ChainSpec ChainSpec::generate(int n_max, const std::function<SetFamily(int)>& family, std::optional<double> t) {
  ChainSpec c;
  for (int n = 1; n <= n_max; ++n) c.entries.push_back({n, t, family(n)});
  return c;
}

ChainSpec parse_chain(std::string_view text) {
  ChainSpec c;
  for (const auto& [no, line] : content_lines(text)) {
    Cursor cur(line);
    try {
      ChainEntry e{static_cast<int>(cur.integer()), std::nullopt, SetFamily()};
      if (!cur.accept('?')) e.t = cur.number();
      e.family = parse_set(cur.rest());
      c.entries.push_back(std::move(e));
    } catch (const Error& err) {
      throw Error(err.code(), err.what() + at_line(no));
    }
  }
  for (std::size_t i = 1; i < c.entries.size(); ++i)
    if (c.entries[i].n <= c.entries[i - 1].n)
      throw Error(ErrorCode::invalid_argument, "chain indices must increase strictly");
  return c;
}

std::vector<double> validate_chain(const ChainSpec& chain, const Config& cfg) {
  if (chain.entries.empty()) throw Error(ErrorCode::invalid_argument, "empty chain");
  std::vector<double> bounds;
  for (const auto& e : chain.entries) {
    const std::string label = "entry " + std::to_string(e.n);
    if (e.family.empty()) throw Error(ErrorCode::empty_entry, label + " is empty");
    const BoundReport b = is_sharply_bounded(e.family, cfg);
    if (!b.bounded)
      throw Error(ErrorCode::missing_bound,
                  label + " has no bound |u| <= alpha^-t; the bound hypothesis cannot be dropped");
    if (e.t) {
      const double nu = valuation(*b.sup, cfg).value;
      const double slack = b.backend == Backend::exact ? 1e-9 : 0.05;
      if (nu < -*e.t - slack)
        throw Error(ErrorCode::missing_bound, label + " exceeds its stated bound alpha^-" + std::to_string(*e.t));
      bounds.push_back(*e.t);
    } else {
      bounds.push_back(b.M);
    }
  }
  for (std::size_t i = 1; i < chain.entries.size(); ++i) {
    if (!subset_report(chain.entries[i].family, chain.entries[i - 1].family, cfg).holds.value)
      throw Error(ErrorCode::chain_not_decreasing, "entry " + std::to_string(chain.entries[i].n) +
                                                       " is not contained in entry " +
                                                       std::to_string(chain.entries[i - 1].n));
  }
  return bounds;
}

std::size_t SpliceNet::branch_at(int k) const {
  std::size_t b = 0;
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    if (thresholds[i].k <= k) b = i;
  return b;
}

SaturationResult saturation_witness(const ChainSpec& chain, const Config& cfg) {
  const std::vector<double> bounds = validate_chain(chain, cfg);
  const Grid grid = grid_of(cfg);
  const std::size_t dim = chain.entries.front().family.dim();
  const auto& entries = chain.entries;

  SaturationResult res;
  SpliceNet& sp = res.splice;
  int prev_k = grid.k_min - 1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    VecNet u;
    try {
      if (entries[i].pick && contains(entries[i].family, *entries[i].pick, cfg).member.value)
        u = *entries[i].pick;
      else
        u = min_distance(entries[i].family, make_points({origin(dim)}), cfg).u;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::empty_family)
        throw Error(ErrorCode::empty_entry, "entry " + std::to_string(entries[i].n) + " is eventually empty");
      throw;
    }
    std::vector<GenNumber> dists;
    for (std::size_t j = 0; j <= i; ++j) dists.push_back(*contains(entries[j].family, u, cfg).distance);
    const GenNumber norm = norm_inf(u);
    const int n = entries[i].n;
    auto ok_at = [&](int k) {
      const Real eps = grid.eps(k);
      const Real tol = eps_pow(eps, n);
      for (const auto& d : dists)
        if (d.eval(eps) > tol) return false;
      return norm.eval(eps) <= eps_pow(eps, -bounds.front() - 1);
    };
    int k = grid.k_max + 1;
    while (k > grid.k_min && ok_at(k - 1)) --k;
    k = std::max(k, prev_k + 1);
    if (k > grid.k_max)
      throw Error(ErrorCode::grid_too_shallow, "no grid threshold for entry " + std::to_string(n) +
                                                   " above eps = 2^-" + std::to_string(grid.k_max));
    sp.thresholds.push_back({n, k});
    sp.branches.push_back(u);
    prev_k = k;
  }

  std::vector<GenNumber> comps;
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Real> v;
    for (int k = grid.k_min; k <= grid.k_max; ++k) v.push_back(sp.branches[sp.branch_at(k)][c].eval(grid.eps(k)));
    comps.push_back(SampledNet(grid, std::move(v)));
  }
  sp.witness = VecNet(std::move(comps));

  res.all_members = true;
  for (const auto& e : entries) {
    const MembershipReport m = contains(e.family, sp.witness, cfg);
    const double nu = valuation(*m.distance, cfg).value;
    const bool depth_ok = zero_tail(*m.distance, cfg) || nu >= e.n;
    res.membership.push_back({e.n, m.member.value, nu, depth_ok});
    res.all_members = res.all_members && depth_ok;
  }
  res.witness_valuation = valuation(norm_inf(sp.witness), cfg).value;
  return res;
}

BallChain parse_balls(std::string_view text) {
  BallChain chain;
  for (const auto& [no, line] : content_lines(text)) {
    Cursor cur(line);
    try {
      Ball b{static_cast<int>(cur.integer()), 0, GenNumber()};
      b.r = cur.number();
      b.center = parse_net(cur.rest());
      chain.push_back(std::move(b));
    } catch (const Error& err) {
      throw Error(err.code(), err.what() + at_line(no));
    }
  }
  return chain;
}

SetFamily valuation_ball(const GenNumber& u, double s) {
  const GenNumber rad = PiecewiseNet::monomial(1.0, s);
  return make_interval(u - rad, u + rad);
}

NestedBallsResult nested_balls_witness(const BallChain& chain, const Config& cfg) {
  if (chain.empty()) throw Error(ErrorCode::invalid_argument, "empty ball chain");
  for (const auto& b : chain)
    if (!(b.r > 0)) throw Error(ErrorCode::invalid_argument, "radii must be positive");
  // Nesting: ⟦a_{n+1} − a_n⟧ ≤ r_n, and radii may only grow where the centers agree.
  std::size_t const_from = chain.size() - 1;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const GenNumber step = chain[i + 1].center - chain[i].center;
    const double d = sharp_norm(step, cfg);
    if (d > chain[i].r * (1 + 1e-12))
      throw Error(ErrorCode::not_nested, "center " + std::to_string(chain[i + 1].n) + " lies outside ball " +
                                             std::to_string(chain[i].n));
    if (chain[i + 1].r > chain[i].r && !is_negligible(step, cfg).value)
      throw Error(ErrorCode::not_nested, "radius grows from ball " + std::to_string(chain[i].n));
  }
  for (std::size_t i = chain.size() - 1; i > 0; --i) {
    if (chain[i - 1].r == chain[i].r && is_negligible(chain[i].center - chain[i - 1].center, cfg).value)
      const_from = i - 1;
    else
      break;
  }

  NestedBallsResult res;
  auto finish = [&](const GenNumber& x) {
    res.witness = x;
    res.all_ok = res.branches_ok;
    for (const auto& b : chain) {
      const GenNumber diff = x - (x.symbolic() ? b.center : GenNumber(b.center.sampled(x.samples().grid())));
      const double nu = valuation(diff, cfg).value;
      res.grid_valuations.push_back({b.n, nu});
      const double slack = x.symbolic() ? 1e-9 : 0.05;
      res.all_ok = res.all_ok && (std::isinf(nu) || nu >= -std::log(b.r) - slack);
    }
    return res;
  };
  if (const_from == 0) {
    res.eventually_constant = true;
    res.branches_ok = true;
    return finish(chain.back().center);
  }

  // V_n = V(a_{n+1}; −log r_n) sits between B_{n+1} and B_n; the last ball uses its own center.
  ChainSpec spec;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const GenNumber& c = i + 1 < chain.size() ? chain[i + 1].center : chain[i].center;
    SetFamily v = valuation_ball(c, -std::log(chain[i].r));
    spec.entries.push_back({chain[i].n, is_sharply_bounded(v, cfg).M + 1.0, std::move(v), VecNet(c)});
  }
  res.saturation = saturation_witness(spec, cfg);
  res.branches_ok = true;
  const auto& branches = res.saturation->splice.branches;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t m = i; m < branches.size(); ++m) {
      const double nu = valuation(branches[m][0] - chain[i].center, cfg).value;
      const double slack = branches[m][0].symbolic() && chain[i].center.symbolic() ? 1e-9 : 0.05;
      res.branches_ok = res.branches_ok && nu >= -std::log(chain[i].r) - slack;
    }
  }
  return finish(res.saturation->splice.witness[0]);
}

std::vector<GenNumber> parse_sequence(std::string_view text) {
  std::vector<GenNumber> seq;
  for (const auto& [no, line] : content_lines(text)) {
    try {
      seq.push_back(parse_net(line));
    } catch (const Error& err) {
      throw Error(err.code(), err.what() + at_line(no));
    }
  }
  return seq;
}

CauchyResult cauchy_limit(const std::vector<GenNumber>& seq, int depth, const Config& cfg) {
  if (depth < 1) throw Error(ErrorCode::invalid_argument, "depth must be positive");
  const std::size_t len = seq.size();
  if (len < 2) throw Error(ErrorCode::sequence_too_short, "need at least two terms");
  // diam[j] = max over j ≤ k < l of ⟦u_k − u_l⟧.
  std::vector<double> diam(len, 0.0);
  for (std::size_t j = len - 1; j-- > 0;) {
    double d = diam[j + 1];
    for (std::size_t l = j + 1; l < len; ++l) d = std::max(d, sharp_norm(seq[j] - seq[l], cfg));
    diam[j] = d;
  }
  CauchyResult res;
  for (int n = 1; n <= depth; ++n) {
    const double r = std::ldexp(1.0, -n);
    std::size_t j = 0;
    while (j + 1 < len && !(diam[j] < r)) ++j;
    if (j + 1 >= len) {
      // The tail diameter no longer shrinks over the second half: not Cauchy.
      if (diam[len / 2] > 0 && diam[len / 2] == diam[len - 2])
        throw Error(ErrorCode::not_cauchy, "tail diameter stalls at " + std::to_string(diam[len - 2]));
      throw Error(ErrorCode::sequence_too_short,
                  "cannot certify r_" + std::to_string(n) + " = 2^-" + std::to_string(n) + " within " +
                      std::to_string(len) + " terms");
    }
    res.j.push_back(static_cast<int>(j));
  }
  ChainSpec spec;
  for (int n = 1; n <= depth; ++n) {
    const GenNumber& centre = seq[static_cast<std::size_t>(res.j[n - 1])];
    SetFamily v = valuation_ball(centre, n * std::log(2.0));
    spec.entries.push_back({n, is_sharply_bounded(v, cfg).M + 1.0, std::move(v), VecNet(centre)});
  }
  res.saturation = saturation_witness(spec, cfg);
  res.limit = res.saturation.splice.witness[0];
  const Grid& grid = res.limit.samples().grid();
  for (std::size_t j = 0; j < len; ++j) {
    const GenNumber u = seq[j].symbolic() ? GenNumber(seq[j].sampled(grid)) : seq[j];
    const double nu = valuation(u - res.limit, cfg).value;
    res.table.push_back({static_cast<int>(j), nu, std::exp(-nu)});
  }
  return res;
}

}  // namespace colombeau
