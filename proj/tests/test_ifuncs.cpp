#include <doctest.h>

#include "colombeau/error.hpp"
#include "colombeau/ifuncs.hpp"
#include "colombeau/parse.hpp"
#include "generators.hpp"

using namespace colombeau;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::io;
}

const Grid grid = grid_of(default_config());

GenNumber sampled(const char* net) { return SampledNet::sample(parse_net(net), grid); }

GenNumber inv_log() {
  return SampledNet::from_function(grid, [](const Real& eps) -> Real { return 1 / abs(log(eps)); });
}

GraphFamily graph(const char* body, const char* domain) { return make_graph(make_fn(body, parse_set(domain))); }

}  // namespace

TEST_SUITE("ifuncs.expr") {
  TEST_CASE("evaluation") {
    const Real eps = pow2(-10);
    CHECK(Expr::parse("x^2/(1+x^2)").eval(Real(1), eps) == Real(0.5));
    CHECK(Expr::parse("eps^(1/x)").eval(Real(0), eps) == 0);
    CHECK(Expr::parse("eps^(1/x)").eval(Real(0.5), eps) == pow2(-20));
    CHECK(Expr::parse("-x^2").eval(Real(3), eps) == -9);
    CHECK(Expr::parse("2^-1").eval(Real(0), eps) == Real(0.5));
    CHECK(Expr::parse("min(abs(x), max(1, sqrt(4)))").eval(Real(-3), eps) == 2);
    CHECK(Expr::parse("log(exp(x))").eval(Real(2), eps) == Real(2));
    CHECK(Expr::parse("eps*3").constant_in_x());
    CHECK_FALSE(Expr::parse("x - x").constant_in_x());
  }

  TEST_CASE("errors") {
    CHECK(code_of([] { Expr::parse("x +"); }) == ErrorCode::syntax);
    CHECK(code_of([] { Expr::parse("sin(x)"); }) == ErrorCode::syntax);
    CHECK(code_of([] { Expr::parse("x)"); }) == ErrorCode::syntax);
    const Real eps = pow2(-4);
    CHECK(code_of([&] { Expr::parse("log(x)").eval(Real(0), eps); }) == ErrorCode::domain_evaluation);
    CHECK(code_of([&] { Expr::parse("x/(1-x)").eval(Real(1), eps); }) == ErrorCode::domain_evaluation);
    CHECK(code_of([&] { Expr::parse("x/x").eval(Real(0), eps); }) == ErrorCode::domain_evaluation);
    CHECK(code_of([&] { Expr::parse("x^0.5").eval(Real(-1), eps); }) == ErrorCode::domain_evaluation);
  }
}

TEST_SUITE("ifuncs.graph") {
  TEST_CASE("graph members") {
    const auto sq = graph("x^2", "interval(0,1)");
    CHECK(graph_contains(sq, GenNumber::alpha(), parse_net("eps^2")).value);
    CHECK_FALSE(graph_contains(sq, GenNumber::alpha(), parse_net("eps^2 + eps^3")).value);
    CHECK_FALSE(graph_contains(sq, GenNumber::constant(2), GenNumber::constant(4)).value);
    const auto z = graph("eps^(1/x)", "interval(0,1)");
    const GenNumber h = inv_log();
    CHECK(graph_contains(z, h, eval_at(z, h).value).value);
  }

  TEST_CASE("domain checks") {
    CHECK(code_of([] { graph("x/(1-x)", "interval(-1, 1)"); }) == ErrorCode::domain_evaluation);
    CHECK(code_of([] { graph("log(x)", "interval(-1, 1)"); }) == ErrorCode::domain_evaluation);
    CHECK(code_of([] { make_fn("x", parse_set("box(interval(0,1), interval(0,1))")); }) ==
          ErrorCode::dimension_mismatch);
  }

  TEST_CASE("x/(1-x) has moderate but growing images") {
    for (int k = 1; k <= 3; ++k) {
      const std::string dom = "interval(-1, 1 - eps^" + std::to_string(k) + ")";
      const auto g = graph("x/(1-x)", dom.c_str());
      const auto b = image_bound(g);
      CHECK(b.bounded);
      CHECK(b.M == k);
    }
  }

  TEST_CASE("nearest point clip") {
    const auto g = graph("x", "interval(0,1) | interval(3,4)");
    const int k = 10;
    CHECK(g.clip(Real(2), k) == 1);  // tie goes to the smaller point
    CHECK(g.clip(Real(2.5), k) == 3);
    CHECK(g.clip(Real(-7), k) == 0);
    CHECK(g.clip(Real(0.25), k) == Real(0.25));
  }
}

TEST_SUITE("ifuncs.eval") {
  TEST_CASE("examples") {
    const auto sq = graph("x^2", "interval(0,1)");
    const auto r = eval_at(sq, GenNumber::alpha());
    CHECK(r.guaranteed);
    CHECK(gen_eq(r.value, sampled("eps^2")).value);
    const auto f = graph("x^2/(1+x^2)", "interval(-1,1)");
    CHECK(gen_eq(eval_at(f, GenNumber::constant(1)).value, sampled("0.5")).value);
    // ε^{|log ε|} decays faster than any power.
    const auto z = graph("eps^(1/x)", "interval(0,1)");
    CHECK(gen_eq(eval_at(z, inv_log()).value, sampled("0")).value);
    CHECK(code_of([&] { eval_at(sq, GenNumber::constant(2)); }) == ErrorCode::outside_domain);
  }

  TEST_CASE("unbounded domains are evaluated without guarantee") {
    const auto g = graph("x^2/(1+x^2)", "exterior(0)");
    const auto r = eval_at(g, parse_net("eps^-1"));
    CHECK_FALSE(r.guaranteed);
    // Oracle: 1/(1 + ε^2) differs from 1 by ε^2 + O(ε^4).
    CHECK(std::fabs(valuation(r.value - sampled("1")).value - 2) < 0.05);
  }

  TEST_CASE("representative independence and graph consistency") {
    testgen::Rng rng(61);
    const std::vector<std::pair<const char*, const char*>> fixtures = {
        {"x^2", "interval(0,1)"},
        {"x^2/(1+x^2)", "interval(-1,1)"},
        {"x/(1-x)", "interval(-1, 0.5)"},
        {"eps^(1/x)", "interval(0,1)"},
        {"3*x - eps*x^3", "interval(-2, eps^-1)"},
    };
    std::vector<GraphFamily> graphs;
    for (const auto& [f, d] : fixtures) graphs.push_back(graph(f, d));
    int agree = 0;
    for (int i = 0; i < 50; ++i) {
      const auto& g = graphs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(graphs.size()) - 1))];
      const GenNumber x = random_member(g.fn().domain, rng.engine())[0];
      const double sign = rng.coin() ? 1.0 : -1.0;
      GenNumber xp;
      if (i % 2 == 0) xp = x + GenNumber(PiecewiseNet::negligible(sign > 0 ? NeglSign::positive : NeglSign::negative));
      else xp = GenNumber(SampledNet::sample(x.net() + PiecewiseNet::monomial(sign, 30), grid));
      const GenNumber y = eval_at(g, x).value;
      if (gen_eq(y, eval_at(g, xp).value).value) ++agree;
      CHECK(graph_contains(g, x, y).value);
    }
    CHECK(agree == 50);
  }
}

TEST_SUITE("ifuncs.image") {
  TEST_CASE("examples") {
    const auto f = graph("x^2/(1+x^2)", "interval(-1,1)");
    CHECK_FALSE(image_membership(f, GenNumber::constant(1)).member.value);
    CHECK(image_membership(f, GenNumber::constant(0.5)).member.value);
    CHECK(image_membership(f, GenNumber::constant(0)).member.value);
    const auto sq = graph("x^2", "interval(0,1)");
    CHECK(image_membership(sq, parse_net("eps^2")).member.value);
    CHECK(code_of([] { image_membership(graph("x^2/(1+x^2)", "exterior(0)"), GenNumber::constant(1)); }) ==
          ErrorCode::not_sharply_bounded);
  }

  TEST_CASE("interior extrema are located to negligible accuracy") {
    // max of x(1-x) on [0,1] is 1/4 at x = 1/2; min of (x - 1/3)^2 is 0.
    CHECK(image_membership(graph("x*(1-x)", "interval(0,1)"), GenNumber::constant(0.25)).member.value);
    CHECK(image_membership(graph("(x - 1/3)^2 + 1", "interval(-1,1)"), GenNumber::constant(1)).member.value);
    CHECK_FALSE(image_membership(graph("x*(1-x)", "interval(0,1)"), parse_net("0.25 + eps^5")).member.value);
  }

  TEST_CASE("point domains map pointwise") {
    const auto g = graph("x + eps", "points(1; 2)");
    CHECK(image_membership(g, parse_net("2 + eps")).member.value);
    CHECK_FALSE(image_membership(g, parse_net("1.5")).member.value);
  }

  TEST_CASE("closure of the image contains 1") {
    const auto d = nonclosed_image_demo(6);
    CHECK(d.unbounded_refused);
    CHECK(d.one_rejected);
    CHECK(d.half_accepted);
    REQUIRE(d.gap_valuations.size() == 6);
    for (const auto& [M, nu] : d.gap_valuations) CHECK(nu == doctest::Approx(2 * M).epsilon(0.01));
    CHECK(d.ok);
  }
}

TEST_SUITE("ifuncs.continuity") {
  TEST_CASE("x^2/(1+x^2) has modulus m(n) = n") {
    const auto f = graph("x^2/(1+x^2)", "interval(-1,1)");
    for (int n = 1; n <= 6; ++n) {
      const auto r = continuity_modulus(f, n);
      CHECK(r.m == n);
      CHECK(r.threshold_k <= grid.k_max - default_config().slope_window + 1);
    }
  }

  TEST_CASE("constant functions need only m = 1") {
    const auto c = graph("2 + eps", "interval(0,1)");
    for (int n : {1, 5, 20}) CHECK(continuity_modulus(c, n).m == 1);
  }

  TEST_CASE("square root needs twice the exponent") {
    const auto s = graph("sqrt(x)", "interval(0,1)");
    CHECK(continuity_modulus(s, 3).m == 6);
    CHECK(code_of([&] { continuity_modulus(s, 3, 5); }) == ErrorCode::no_modulus_found);
  }

  TEST_CASE("eps^(1/x) stays uniformly continuous") {
    // sup |f'| on [eps, 1] is |log eps|·eps, attained at x = 1.
    const auto z = graph("eps^(1/x)", "interval(eps, 1)");
    const int m = continuity_modulus(z, 4).m;
    CHECK(m <= 4);
    CHECK(code_of([&] { continuity_modulus(z, 4, m - 1); }) == ErrorCode::no_modulus_found);
  }

  TEST_CASE("unbounded domains are refused") {
    CHECK(code_of([] { continuity_modulus(graph("x", "exterior(1)"), 1); }) == ErrorCode::not_sharply_bounded);
  }
}

TEST_SUITE("ifuncs.interpolant") {
  TEST_CASE("square: error is a quarter of the squared mesh") {
    const auto sq = graph("x^2", "interval(0,1)");
    const auto e8 = interpolant_error(pl_interpolant(sq, default_config().m_mesh));
    CHECK(e8.valuation.value >= default_config().m_mesh - 1);
    CHECK(e8.valuation.value == doctest::Approx(16).epsilon(0.01));
    CHECK(e8.sup_error.samples().at(20) == pow2(-20 * 16) / 4);
    const auto e13 = interpolant_error(pl_interpolant(sq, 13));
    CHECK(e13.negligible.value);
  }

  TEST_CASE("linear and constant functions are reproduced") {
    for (const char* f : {"3*x - 1", "eps"}) {
      const auto e = interpolant_error(pl_interpolant(graph(f, "interval(-1, 2)"), 3));
      CHECK(e.negligible.value);
      CHECK(std::isinf(e.valuation.value));
    }
  }

  TEST_CASE("interpolant evaluates like the graph on mesh points") {
    const auto g = graph("x^2/(1+x^2)", "interval(-1,1)");
    const auto h = pl_interpolant(g, 4);
    const int k = 12;
    const Real node = pow2(-4 * k) * 1000;
    CHECK(h.value(node, k) == g.g(node, k));
    CHECK(interpolant_error(h).valuation.value >= default_config().m_mesh - 1);
  }
}

TEST_SUITE("ifuncs.zeroset") {
  TEST_CASE("each zero has a strictly larger zero") {
    const auto d = zero_set_demo();
    REQUIRE(d.cases.size() == 3);
    for (const auto& c : d.cases) {
      INFO(c.x);
      CHECK(c.x_is_zero);
      CHECK(c.y_greater);
      CHECK(c.fy_zero);
      CHECK(c.deep_ratio >= default_config().m_max);
    }
    CHECK(d.all_ok);
  }

  TEST_CASE("grid view of the first two cases") {
    // Oracle: f(y) = ε^{1/y} sampled directly, no graph machinery.
    const GenNumber h = inv_log();
    for (const GenNumber& x : {GenNumber::constant(0), GenNumber::alpha()}) {
      const GenNumber y = x + h;
      const GenNumber fy = map_sampled(y, grid, [](const Real& v, const Real& eps) -> Real { return pow(eps, 1 / v); });
      CHECK(is_negligible(fy).value);
      CHECK(eventually_ge(y, x).value);
      CHECK_FALSE(is_negligible(y - x).value);
    }
  }
}
