// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "colombeau/error.hpp"
#include "colombeau/ifuncs.hpp"
#include "colombeau/isets.hpp"
#include "colombeau/mollifier.hpp"
#include "colombeau/parse.hpp"
#include "colombeau/saturation.hpp"
#include "generators.hpp"
#include "set_generators.hpp"

using namespace colombeau;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  /// Records a failed sub-check; keeps the first few messages.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || detail.str().size() < 400) detail << "[" << what << "] ";
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GenNumber eps_n(double n) { return PiecewiseNet::monomial(1.0, n); }

/// Σ_{k=from}^{to} ε^k.
GenNumber partial_sum(int from, int to) {
  GenNumber s = GenNumber::constant(0);
  for (int k = from; k <= to; ++k) s = s + eps_n(k);
  return s;
}

bool member(const SetFamily& a, const VecNet& u) { return contains(a, u).member.value; }

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::io;
}

void mollifier_identities(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto tree = build_vanishing(8, 0.1);
  const auto rep = moment_report(tree, 8);
  o.require(std::abs(rep.rows[0].moment - 1.0) <= 1e-9, "mass");
  double worst = 0, disagree = 0;
  for (const auto& r : rep.rows) {
    if (r.k >= 1) worst = std::max(worst, std::abs(r.moment));
    disagree = std::max(disagree, std::abs(r.moment - r.gauss));
  }
  o.require(worst <= 1e-8, "moments 1..8");
  o.require(disagree <= 1e-11, "Simpson vs Gauss");
  o.require(rep.l1 <= 1.1 + 1e-6, "L1 budget");
  for (int i = 1; i <= 400; ++i) {
    const double x = 1.0 + i / 200.0;
    o.require(tree.eval(x) == 0.0 && tree.eval(-x) == 0.0, "support");
  }
  double prev = moment_report(tree.prefix(0), 0).l1;
  for (const auto& l : tree.levels()) {
    o.require(std::abs(l.a + l.b * l.eta - 1.0) <= 1e-14, "a+bη=1 at n=" + std::to_string(l.n));
    o.require(std::abs(l.a + l.b * std::pow(l.eta, l.n + 1)) <= 1e-14, "a+bη^{n+1}=0 at n=" + std::to_string(l.n));
    const double en = std::pow(l.eta, l.n);
    const double measured = moment_report(tree.prefix(l.n), 0).l1;
    o.require(measured <= (1 + en) / (1 - en) * prev + 1e-9, "L1 monotone at n=" + std::to_string(l.n));
    prev = measured;
  }
  const double secs = seconds_since(t0);
  o.require(secs < 10.0, "runtime");
  o.detail << "mass-1=" << rep.rows[0].moment - 1.0 << " max|m_k|=" << worst << " dual=" << disagree
           << " L1=" << rep.l1 << " t=" << secs << "s";
}

void lift_spot_value(Outcome& o) {
  // Closed forms evaluated directly, then through the library.
  const double eta = 0.5;
  const int n = 1;
  const double a_direct = -std::pow(eta, n) / (1.0 - std::pow(eta, n));
  const double b_direct = 1.0 / (eta - std::pow(eta, n + 1));
  const auto lib = lift_coefficients(n, eta);
  o.require(a_direct == -1.0 && b_direct == 4.0, "direct evaluation");
  o.require(lib.a == -1.0 && lib.b == 4.0, "lift_coefficients");
  o.detail << "a=" << lib.a << " b=" << lib.b;
}

void saturation_chain(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto chain = ChainSpec::generate(20, [](int n) { return make_interval(-eps_n(n), eps_n(n)); });
  const auto r = saturation_witness(chain);
  const double secs = seconds_since(t0);
  o.require(r.witness_valuation >= 19, "witness valuation");
  const VecNet w = r.splice.witness;
  for (int k = 1; k <= 20; ++k) o.require(member(chain.entries[k - 1].family, w), "contains A_" + std::to_string(k));
  const auto ext = ChainSpec::generate(20, [](int n) { return make_exterior(eps_n(-n)); });
  o.require(error_of([&] { saturation_witness(ext); }) == ErrorCode::missing_bound, "exterior refused");
  o.require(secs < 5.0, "runtime");
  o.detail << "witness ν=" << r.witness_valuation << " t=" << secs << "s";
}

void spherical_completeness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  BallChain chain;
  for (int n = 1; n <= 20; ++n) chain.push_back({n, std::exp(-(n + 1.0)), partial_sum(1, n)});
  // Exact: ν(a_m − a_n) = n + 1 for m > n, so the balls are nested with ⟦a_m − a_n⟧ = r_n.
  for (int n = 1; n <= 20; ++n)
    for (int m = n + 1; m <= 20; ++m)
      o.require(valuation(partial_sum(1, m) - partial_sum(1, n)).value == n + 1, "exact nesting");
  const auto r = nested_balls_witness(chain);
  o.require(r.branches_ok, "symbolic branches");
  double worst = 1e9;
  for (const auto& [n, nu] : r.grid_valuations) {
    // ⟦x − a_n⟧ = e^{-ν} ≤ r_n up to the slope tolerance.
    o.require(nu >= n + 1 - 0.05, "grid ν at n=" + std::to_string(n));
    worst = std::min(worst, nu - (n + 1));
  }
  o.require(r.grid_valuations.size() == 20, "all balls checked");
  const double secs = seconds_since(t0);
  o.require(secs < 5.0, "runtime");
  o.detail << "min(ν - (n+1))=" << worst << " t=" << secs << "s";
}

void sharp_completeness(Outcome& o) {
  std::vector<GenNumber> seq;
  for (int j = 0; j <= 40; ++j) seq.push_back(partial_sum(0, j));
  const auto r = cauchy_limit(seq);
  double worst = 0;
  for (int j = 0; j <= 15; ++j) {
    const double nu = r.table.at(j).valuation;
    o.require(std::abs(nu - (j + 1)) <= 0.05, "j=" + std::to_string(j));
    worst = std::max(worst, std::abs(nu - (j + 1)));
  }
  o.require(r.saturation.all_members, "limit lies in every ball");
  o.detail << "max|ν(u_j - L) - (j+1)|=" << worst;
}

/// Endpoints, 17 fixed fractions and 10 random points of every component of A in B.
bool oracle_subset(const SetFamily& a, const SetFamily& b, testgen::Rng& rng) {
  for (const auto& s : a.shapes()) {
    const auto& iv = std::get<Interval>(s);
    std::vector<double> ts;
    for (int i = 0; i <= 16; ++i) ts.push_back(i / 16.0);
    for (int i = 0; i < 10; ++i) ts.push_back(rng.uniform(0.0, 1.0));
    for (double t : ts)
      if (!member(b, VecNet(iv.lo + scale(iv.hi - iv.lo, t)))) return false;
  }
  return true;
}

void internal_set_calculus(Outcome& o) {
  const auto zero = parse_set("points(0)"), negl = parse_set("points(NEGL)");
  o.require(equality_report(zero, negl).holds.value, "(a) equal");
  o.require(intersect_families(zero, negl).empty(), "(a) raw intersection empty");
  for (int m = 1; m <= 30; ++m) {
    const auto refined = intersect_families(fatten(zero, m), fatten(negl, m));
    o.require(!refined.empty() && member(refined, VecNet(GenNumber::constant(0))), "(a) refined m=" + std::to_string(m));
  }

  testgen::Rng rng(31);
  int disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    const auto [a, b] = testgen::family_pair(rng);
    const bool ab = subset_report(a, b).holds.value, ba = subset_report(b, a).holds.value;
    if (ab != oracle_subset(a, b, rng)) ++disagreements;
    if (ba != oracle_subset(b, a, rng)) ++disagreements;
    if ((ab && ba) != equality_report(a, b).holds.value) ++disagreements;
  }
  o.require(disagreements == 0, "(b) oracle");

  testgen::Rng crng(53);
  int limits_in = 0;
  for (int i = 0; i < 50; ++i) {
    const auto a = testgen::interval_family(crng);
    const VecNet u = random_member(a, crng.engine());
    double w = crng.coin() ? 1.0 : -1.0;
    if (!member(a, VecNet(u[0] + GenNumber(PiecewiseNet::monomial(w, 1))))) w = -w;
    bool all_in = true;
    for (int n = 1; n <= 20; ++n) all_in = all_in && member(a, VecNet(u[0] + GenNumber(PiecewiseNet::monomial(w, n))));
    o.require(all_in, "(c) sequence members");
    if (member(a, u)) ++limits_in;
  }
  o.require(limits_in == 50, "(c) limits");
  o.detail << "disagreements=" << disagreements << " limits=" << limits_in << "/50";
}

void attained_extrema(Outcome& o) {
  const auto box = parse_set("interval(0, eps^-2)");
  const auto mn = max_norm(box);
  o.require(gen_eq(mn.norm, eps_n(-2)).value, "max norm α^-2");
  o.require(member(box, mn.witness) && gen_eq(norm_inf(mn.witness), mn.norm).value, "witness attains");
  const auto md = min_distance(parse_set("interval(0,1)"), parse_set("interval(2,3)"));
  o.require(md.distance.symbolic() && md.distance.to_string() == "1", "min distance 1");
  o.require(gen_eq(dist_inf(md.u, md.v), GenNumber::constant(1)).value, "witness pair");
  const auto demo = sharp_ball_demo(20, default_config().seed);
  o.require(demo.cases.size() == 20 && demo.all_ok, "sharp ball");
  o.detail << "maxnorm=" << mn.norm.to_string() << " mindist=" << md.distance.to_string()
           << " sharp-ball cases=" << demo.cases.size();
}

void internal_functions(Outcome& o) {
  const Grid grid = grid_of(default_config());
  auto graph = [](const char* body, const char* dom) { return make_graph(make_fn(body, parse_set(dom))); };
  const std::vector<GraphFamily> graphs = {
      graph("x^2", "interval(0,1)"),
      graph("x^2/(1+x^2)", "interval(-1,1)"),
      graph("x/(1-x)", "interval(-1, 0.5)"),
      graph("eps^(1/x)", "interval(0,1)"),
      graph("3*x - eps*x^3", "interval(-2, eps^-1)"),
  };
  testgen::Rng rng(61);
  int agree = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& g = graphs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(graphs.size()) - 1))];
    const GenNumber x = random_member(g.fn().domain, rng.engine())[0];
    const double sign = rng.coin() ? 1.0 : -1.0;
    GenNumber xp = i % 2 == 0
                       ? x + GenNumber(PiecewiseNet::negligible(sign > 0 ? NeglSign::positive : NeglSign::negative))
                       : GenNumber(SampledNet::sample(x.net() + PiecewiseNet::monomial(sign, 30), grid));
    if (gen_eq(eval_at(g, x).value, eval_at(g, xp).value).value) ++agree;
  }
  o.require(agree == 50, "representative independence");

  const auto& f = graphs[1];
  int worst_gap = -100;
  for (int n = 1; n <= 10; ++n) {
    const auto r = continuity_modulus(f, n);
    o.require(r.m <= n + 1, "modulus n=" + std::to_string(n));
    worst_gap = std::max(worst_gap, r.m - n);
  }
  o.require(!image_membership(f, GenNumber::constant(1)).member.value, "1 rejected");
  o.require(image_membership(f, GenNumber::constant(0.5)).member.value, "1/2 accepted");
  const auto z = zero_set_demo();
  o.require(z.cases.size() == 3 && z.all_ok, "zero set");
  o.detail << "agree=" << agree << "/50 max(m(n)-n)=" << worst_gap << " zero cases=" << z.cases.size();
}

void net_calculus(Outcome& o) {
  testgen::Rng rng(101);
  int bad = 0;
  for (int i = 0; i < 500; ++i) {
    const GenNumber x = testgen::piecewise(rng), y = testgen::piecewise(rng);
    const double nx = sharp_norm(x), ny = sharp_norm(y), ns = sharp_norm(x + y);
    if (ns > std::max(nx, ny)) ++bad;
    if (nx != ny && ns != std::max(nx, ny)) ++bad;
  }
  o.require(bad == 0, "ultrametric");

  testgen::Rng rng2(202);
  int bad_add = 0;
  for (int i = 0; i < 500; ++i) {
    const GenNumber x = PiecewiseNet(testgen::power_sum(rng2)), y = PiecewiseNet(testgen::power_sum(rng2));
    const double vx = valuation(x).value, vy = valuation(y).value;
    if (valuation(x * y).value != vx + vy) ++bad_add;
    if (valuation(x + y).value < std::min(vx, vy)) ++bad_add;
  }
  o.require(bad_add == 0, "ν-additivity");

  testgen::Rng rng3(404);
  const Grid g{2, 48};
  int checked = 0;
  double worst = 0;
  for (int i = 0; i < 400 && checked < 150; ++i) {
    const auto x = testgen::piecewise(rng3, 3, -2, 4);
    std::vector<double> ex;
    for (std::size_t p = 0; p < x.pieces().size(); ++p) {
      if (!x.recurring()[p]) continue;
      for (const auto& t : x.pieces()[p].value.terms()) ex.push_back(t.expo);
    }
    std::sort(ex.begin(), ex.end());
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    if (ex.empty() || (ex.size() >= 2 && ex[1] - ex[0] < 0.5)) continue;
    ++checked;
    const double err = std::abs(fit_valuation(SampledNet::sample(x, g), 16).valuation - x.valuation());
    worst = std::max(worst, err);
  }
  o.require(checked >= 100 && worst <= 0.05, "round trip");
  o.detail << "ultrametric violations=" << bad << " additivity violations=" << bad_add << " round-trip max err="
           << worst << " over " << checked;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"mollifier identities", mollifier_identities},
      {"lift coefficients spot value", lift_spot_value},
      {"saturation", saturation_chain},
      {"spherical completeness", spherical_completeness},
      {"sharp completeness", sharp_completeness},
      {"internal-set calculus", internal_set_calculus},
      {"attained extrema", attained_extrema},
      {"internal functions", internal_functions},
      {"net calculus", net_calculus},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
