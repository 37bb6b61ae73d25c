#include <doctest.h>

#include <cmath>
#include <limits>

#include "colombeau/error.hpp"
#include "colombeau/gen_number.hpp"
#include "colombeau/parse.hpp"
#include "generators.hpp"

using namespace colombeau;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Comb intervals (lo, hi] with hi >= 2^-depth, listed directly from the definition.
std::vector<std::pair<double, double>> comb_intervals(const CombPattern& p, int depth) {
  std::vector<std::pair<double, double>> out;
  for (int k = 0;; ++k) {
    const double hi = p.c * std::pow(p.q, k);
    if (hi < std::ldexp(1.0, -depth)) break;
    if (k % p.m == p.r) out.emplace_back(p.c * std::pow(p.q, k + 1), hi);
  }
  return out;
}

bool combs_disjoint(const CombPattern& a, const CombPattern& b, int depth) {
  for (auto [alo, ahi] : comb_intervals(a, depth)) {
    for (auto [blo, bhi] : comb_intervals(b, depth)) {
      if (std::max(alo, blo) < std::min(ahi, bhi)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("nets.parse") {
  TEST_CASE("alpha and zero literals") {
    const auto a = parse_net("[tail] 1*eps^1");
    CHECK(a.valuation() == 1.0);
    CHECK(a.pieces().front().value == PowerSum::alpha());
    const auto z = parse_net("[tail] 0");
    CHECK(z.pieces().front().value.is_zero());
    CHECK(z.valuation() == kInf);
  }

  TEST_CASE("two-piece comb net is accepted and its combs are disjoint") {
    const auto x = parse_net("[comb 0.5 0.5 2 0] 1*eps^1 ; [tail] 1*eps^2");
    REQUIRE(x.pieces().size() == 2);
    const CombPattern even{0.5, 0.5, 2, 0};
    const CombPattern odd{0.5, 0.5, 2, 1};
    CHECK(combs_disjoint(even, odd, 48));
    CHECK_FALSE(combs_disjoint(even, CombPattern{0.5, 0.5, 1, 0}, 48));
  }

  TEST_CASE("overlapping combs are rejected") {
    CHECK_THROWS_AS(parse_net("[comb 0.5 0.5 1 0] 1 ; [comb 0.5 0.5 2 1] 2 ; [tail] 0"), Error);
    try {
      parse_net("[comb 0.5 0.5 2 0] 1 ; [comb 0.5 0.5 2 0] 2 ; [tail] 0");
      FAIL("expected OverlapError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::overlap);
    }
    CHECK_NOTHROW(parse_net("[comb 0.5 0.5 2 0] 1 ; [comb 0.5 0.5 2 1] 2 ; [tail] 0"));
  }

  TEST_CASE("syntax errors") {
    for (const char* bad : {"[tail]", "[comb 0.5 0.5 2] 1 ; [tail] 0", "[tail] 1 ; [tail] 2",
                            "[comb 0.5 0.5 2 0] 1", "[tail] 1*", "[tail] 1 ; 2", "[tail] 1 +",
                            "[comb 1.5 0.5 2 0] 1 ; [tail] 0", "[comb 0.5 0.5 2 2] 1 ; [tail] 0"}) {
      CAPTURE(bad);
      try {
        parse_net(bad);
        FAIL("expected SyntaxError");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::syntax);
      }
    }
  }

  TEST_CASE("shorthand forms") {
    CHECK(parse_net("eps").pieces().front().value == PowerSum::alpha());
    CHECK(parse_net("-2*eps^-3 + 1").pieces().front().value ==
          PowerSum({{-2.0, -3.0}, {1.0, 0.0}}));
    CHECK(parse_net("eps^(0.5) - NEGL").pieces().front().value ==
          PowerSum({{1.0, 0.5}}, NeglSign::negative));
  }

  TEST_CASE("printing round-trips") {
    testgen::Rng rng(7);
    for (int i = 0; i < 100; ++i) {
      const auto x = testgen::piecewise(rng);
      const auto y = parse_net(x.to_string());
      CHECK(gen_eq(x, y).value);
      CHECK(y.to_string() == x.to_string());
    }
  }
}

TEST_SUITE("nets.arith") {
  TEST_CASE("add and max on power sums") {
    const auto e2 = PiecewiseNet::monomial(1, 2), e3 = PiecewiseNet::monomial(1, 3);
    CHECK((e2 + e3).pieces().front().value == PowerSum({{1, 2}, {1, 3}}));
    CHECK(max(PiecewiseNet::alpha(), e2).pieces().front().value == PowerSum::alpha());
    CHECK(min(PiecewiseNet::alpha(), e2).pieces().front().value == PowerSum::monomial(1, 2));
  }

  TEST_CASE("abs uses the leading coefficient") {
    const auto x = parse_net("-3*eps + eps^2");
    const auto a = abs(x);
    CHECK(a.pieces().front().value == PowerSum({{3, 1}, {-1, 2}}));
    // Oracle: pointwise |x_ε| on the grid.
    for (int k = 4; k <= 40; ++k) {
      const Real eps = pow2(-k);
      CHECK(a.eval(eps) == boost::multiprecision::abs(x.eval(eps)));
    }
  }

  TEST_CASE("max of comb-split nets is resolved per piece") {
    const auto x = parse_net("[comb 0.5 0.5 2 0] eps ; [tail] eps^3");
    const auto y = parse_net("eps^2");
    const auto m = max(x, y);
    for (int k = 2; k <= 48; ++k) {
      const Real eps = pow2(-k);
      const Real a = x.eval(eps), b = y.eval(eps);
      CHECK(m.eval(eps) == (a >= b ? a : b));
    }
  }

  TEST_CASE("indeterminate sign only surfaces on sign queries") {
    const PowerSum u = PowerSum::negligible(NeglSign::positive) - PowerSum::negligible(NeglSign::positive);
    CHECK(u.negl() == NeglSign::unknown);
    CHECK_THROWS_AS(u.eventual_sign(), Error);
    const PiecewiseNet d(u);
    CHECK(d.is_negligible());
    CHECK_THROWS_AS(d.eventual_sign(), Error);
    // max/min pick the first operand; the result is gen-equal either way.
    CHECK(gen_eq(max(d, PiecewiseNet{}), PiecewiseNet{}).value);
  }

  TEST_CASE("negligible atom sign bookkeeping") {
    const auto n = PowerSum::negligible(NeglSign::positive);
    CHECK((n * PowerSum::constant(-2)).negl() == NeglSign::negative);
    CHECK((n * PowerSum({{-1, -2}, {1, 0}})).negl() == NeglSign::negative);
    CHECK((n + n).negl() == NeglSign::positive);
    CHECK((n * n).negl() == NeglSign::positive);
    CHECK((-n).eventual_sign() == -1);
  }
}

TEST_SUITE("nets.valuation") {
  TEST_CASE("basic valuations and sharp norms") {
    CHECK(valuation(GenNumber::alpha()).value == 1.0);
    CHECK(valuation(GenNumber{}).value == kInf);
    CHECK(sharp_norm(GenNumber::alpha()) == doctest::Approx(0.36788).epsilon(1e-5));
    CHECK(sharp_norm(GenNumber{}) == 0.0);
    CHECK(valuation(GenNumber(PiecewiseNet::negligible())).value == kInf);
  }

  TEST_CASE("comb net valuation is the minimum over recurring branches") {
    const auto x = parse_net("[comb 0.5 0.5 2 0] 1*eps^3 ; [tail] 1*eps^5");
    CHECK(x.valuation() == 3.0);
    // Oracle: slope fit on grid samples.
    const auto fit = fit_valuation(SampledNet::sample(x, Grid{2, 48}), 16);
    CHECK(fit.valuation == doctest::Approx(3.0).epsilon(1e-3));
  }

  TEST_CASE("a comb that stops recurring does not count") {
    // Two combs with m = 2 and r = 0 but different ratios only meet finitely often.
    const auto x = parse_net("[comb 0.5 0.5 1 0 & comb 0.5 0.25 1 0] eps^-1 ; [tail] eps");
    CHECK(x.valuation() == -1.0);
  }

  TEST_CASE("sharp norm of 5 eps^-2") {
    const GenNumber x = parse_net("5*eps^-2");
    CHECK(sharp_norm(x) == doctest::Approx(std::exp(2.0)));
    const auto fit = fit_valuation(x.sampled(Grid{2, 48}), 16);
    CHECK(fit.valuation == doctest::Approx(-2.0).epsilon(1e-6));
  }

  TEST_CASE("negligibility") {
    CHECK(is_negligible(GenNumber(PiecewiseNet::negligible())).value);
    CHECK_FALSE(is_negligible(GenNumber(PiecewiseNet::monomial(1, 100))).value);
    CHECK(is_negligible(GenNumber{}).value);
    // Heuristic backend on samples.
    const Grid g{2, 48};
    CHECK(is_negligible(GenNumber(SampledNet::sample(PiecewiseNet::negligible(), g))).value);
    CHECK(is_negligible(GenNumber(SampledNet::sample(PiecewiseNet{}, g))).value);
    CHECK_FALSE(is_negligible(GenNumber(SampledNet::sample(PiecewiseNet::monomial(1, 10), g))).value);
    CHECK(is_negligible(GenNumber(SampledNet::sample(PiecewiseNet::monomial(1, 30), g))).backend ==
          Backend::heuristic);
  }

  TEST_CASE("moderateness") {
    CHECK(is_moderate(GenNumber(PiecewiseNet::monomial(1, -7))).value);
    const Grid g{2, 48};
    const auto fast = SampledNet::from_function(
        g, [](const Real& eps) -> Real { return boost::multiprecision::exp(-boost::multiprecision::log(eps) / eps); });
    const auto fit = fit_valuation(fast, 16);
    CHECK(fit.valuation < -1e6);
    CHECK_FALSE(is_moderate(GenNumber(fast)).value);
    CHECK(is_moderate(GenNumber(SampledNet::sample(PiecewiseNet::monomial(1, -7), g))).value);
  }

  TEST_CASE("gen_eq examples") {
    CHECK(gen_eq(GenNumber{}, GenNumber(PiecewiseNet::negligible())).value);
    CHECK_FALSE(gen_eq(GenNumber::alpha(), GenNumber(parse_net("eps + eps^9"))).value);
    CHECK(gen_eq(GenNumber::alpha(), GenNumber(parse_net("eps + NEGL"))).value);
    CHECK_THROWS_AS(gen_eq(GenNumber::alpha(), GenNumber(SampledNet::sample(PiecewiseNet::alpha(), Grid{}))),
                    Error);
  }
}

TEST_SUITE("nets.indicator") {
  TEST_CASE("trivial index sets") {
    CHECK(gen_eq(GenNumber(indicator_complement({})), GenNumber::constant(1)).value);
    CHECK(gen_eq(GenNumber(indicator({})), GenNumber{}).value);
  }

  TEST_CASE("comb idempotents") {
    const CombPattern s{0.5, 0.5, 2, 0};
    const auto e = indicator({s});
    const auto ec = indicator_complement({s});
    // Direct evaluation oracle.
    for (int k = 1; k <= 40; ++k) {
      const bool in = (k - 1) % 2 == 0;  // 2^-k lies in interval k-1 of the comb
      CHECK(e.eval(pow2(-k)) == (in ? 1 : 0));
      CHECK(ec.eval(pow2(-k)) == (in ? 0 : 1));
    }
    CHECK((e * e).to_string() == e.to_string());
    CHECK((e * ec).to_string() == "0");
    CHECK((e + ec).to_string() == "1");
  }

  TEST_CASE("overlapping index sets are rejected") {
    CHECK_THROWS_AS(indicator({CombPattern{0.5, 0.5, 2, 0}, CombPattern{0.5, 0.5, 1, 0}}), Error);
  }

  TEST_CASE("idempotent identities on random comb sets") {
    testgen::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      const int m = rng.uniform_int(2, 4);
      std::vector<CombPattern> set;
      const auto base = testgen::dyadic_comb(rng, m, 0);
      for (int r = 0; r < m; ++r) {
        if (rng.coin()) {
          auto c = base;
          c.r = r;
          set.push_back(c);
        }
      }
      const auto e = indicator(set), ec = indicator_complement(set);
      CHECK((e * e).to_string() == e.to_string());
      CHECK((e * ec).is_negligible());
      CHECK((e * ec).to_string() == "0");
      CHECK((e + ec).to_string() == "1");
    }
  }
}

TEST_SUITE("nets.sample") {
  TEST_CASE("samples of alpha and zero") {
    const auto s = SampledNet::sample(PiecewiseNet::alpha(), Grid{2, 48});
    CHECK(s.sign(4) == 1);
    CHECK(s.logmag(4) == doctest::Approx(-4 * std::log(2.0)));
    const auto z = SampledNet::sample(PiecewiseNet{}, Grid{2, 48});
    for (int k = 2; k <= 48; ++k) CHECK(z.sign(k) == 0);
  }

  TEST_CASE("slope fit recovers eps^3") {
    const auto fit = fit_valuation(SampledNet::sample(PiecewiseNet::monomial(1, 3), Grid{2, 48}), 16);
    CHECK(fit.valuation >= 2.999);
    CHECK(fit.valuation <= 3.001);
  }

  TEST_CASE("negligible atom samples exactly") {
    const auto s = SampledNet::sample(PiecewiseNet::negligible(), Grid{2, 48});
    // ε^{1/ε} at ε = 2^-10 is 2^{-10240}.
    CHECK(s.at(10) == pow2(-10 * 1024));
  }

  TEST_CASE("invalid grids") {
    CHECK_THROWS_AS(SampledNet(Grid{0, 20}, std::vector<Real>(21)), Error);
    CHECK_THROWS_AS(SampledNet(Grid{2, 9}, std::vector<Real>(8)), Error);
  }
}

TEST_SUITE("nets.properties") {
  TEST_CASE("ultrametric inequality with equality for distinct norms") {
    testgen::Rng rng(101);
    for (int i = 0; i < 500; ++i) {
      const GenNumber x = testgen::piecewise(rng), y = testgen::piecewise(rng);
      const double nx = sharp_norm(x), ny = sharp_norm(y), ns = sharp_norm(x + y);
      CHECK(ns <= std::max(nx, ny));
      if (nx != ny) CHECK(ns == std::max(nx, ny));
    }
  }

  TEST_CASE("valuation is additive on products of power sums") {
    testgen::Rng rng(202);
    for (int i = 0; i < 500; ++i) {
      const GenNumber x = PiecewiseNet(testgen::power_sum(rng));
      const GenNumber y = PiecewiseNet(testgen::power_sum(rng));
      const double vx = valuation(x).value, vy = valuation(y).value;
      CHECK(valuation(x * y).value == vx + vy);
      CHECK(valuation(x + y).value >= std::min(vx, vy));
    }
  }

  TEST_CASE("valuation of products of comb-split nets is at least the sum") {
    // Zero divisors e_S·e_{S^c} = 0 make this an inequality for split nets.
    testgen::Rng rng(203);
    for (int i = 0; i < 500; ++i) {
      const GenNumber x = testgen::piecewise(rng), y = testgen::piecewise(rng);
      const double vx = valuation(x).value, vy = valuation(y).value;
      CHECK(valuation(x * y).value >= vx + vy);
      CHECK(valuation(x + y).value >= std::min(vx, vy));
      if (x.net().is_single() || y.net().is_single()) CHECK(valuation(x * y).value == vx + vy);
    }
  }

  TEST_CASE("gen_eq is an equivalence compatible with the ring operations") {
    testgen::Rng rng(303);
    auto perturb = [&](const GenNumber& a) {
      return a + GenNumber(PiecewiseNet::negligible(rng.coin() ? NeglSign::positive : NeglSign::negative));
    };
    for (int i = 0; i < 200; ++i) {
      const GenNumber a = testgen::piecewise(rng), b = testgen::piecewise(rng);
      const GenNumber a2 = perturb(a), b2 = perturb(b), a3 = perturb(a2);
      CHECK(gen_eq(a, a).value);
      CHECK(gen_eq(a, a2).value == gen_eq(a2, a).value);
      CHECK(gen_eq(a, a2).value);
      CHECK(gen_eq(a, a3).value);
      CHECK(gen_eq(a + b, a2 + b2).value);
      CHECK(gen_eq(a - b, a2 - b2).value);
      CHECK(gen_eq(a * b, a2 * b2).value);
      CHECK(gen_eq(a, b).value == gen_eq(a2, b2).value);
    }
  }

  TEST_CASE("sampled valuation matches the symbolic one") {
    testgen::Rng rng(404);
    const Grid g{2, 48};
    int checked = 0;
    for (int i = 0; i < 400 && checked < 150; ++i) {
      const auto x = testgen::piecewise(rng, 3, -2, 4);
      // Leading gap across the exponents of all recurring pieces.
      std::vector<double> ex;
      for (std::size_t p = 0; p < x.pieces().size(); ++p) {
        if (!x.recurring()[p]) continue;
        for (const auto& t : x.pieces()[p].value.terms()) ex.push_back(t.expo);
      }
      std::sort(ex.begin(), ex.end());
      ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
      if (ex.size() < 1 || (ex.size() >= 2 && ex[1] - ex[0] < 0.5)) continue;
      ++checked;
      const double fit = fit_valuation(SampledNet::sample(x, g), 16).valuation;
      CAPTURE(x.to_string());
      CHECK(std::fabs(fit - x.valuation()) <= 0.05);
    }
    CHECK(checked >= 100);
  }
}
