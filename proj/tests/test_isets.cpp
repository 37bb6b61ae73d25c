#include <doctest.h>

#include "colombeau/error.hpp"
#include "colombeau/isets.hpp"
#include "colombeau/parse.hpp"
#include "set_generators.hpp"

using namespace colombeau;

namespace {

GenNumber net(const char* s) { return parse_net(s); }
VecNet pt(const char* s) { return VecNet(net(s)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::io;
}

bool member(const SetFamily& a, const VecNet& u) { return contains(a, u).member.value; }

/// Brute force: endpoints, a fixed fraction grid and 10 random interior points
/// of every component of A must all lie in B.
bool oracle_subset(const SetFamily& a, const SetFamily& b, testgen::Rng& rng) {
  for (const auto& s : a.shapes()) {
    const auto& iv = std::get<Interval>(s);
    std::vector<double> ts;
    for (int i = 0; i <= 16; ++i) ts.push_back(i / 16.0);
    for (int i = 0; i < 10; ++i) ts.push_back(rng.uniform(0.0, 1.0));
    for (double t : ts) {
      if (!member(b, VecNet(iv.lo + scale(iv.hi - iv.lo, t)))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("isets.grammar") {
  TEST_CASE("shapes parse and print") {
    const auto a = parse_set("interval(0, eps^-1) | points(1; 2*eps) | exterior(eps^-3)");
    CHECK(a.dim() == 1);
    CHECK(a.shapes().size() == 3);
    CHECK(parse_set(a.to_string()).to_string() == a.to_string());
    const auto b = parse_set("box(interval(0,1), interval(2,3)) | points((eps, eps^2); (1, 1))");
    CHECK(b.dim() == 2);
    CHECK(parse_set("empty(3)").dim() == 3);
    CHECK(parse_set("empty").empty());
    const auto c = parse_set("points([comb 0.5 0.5 2 0] 1 ; [tail] 0; 3)");
    CHECK(std::get<Points>(c.shapes()[0]).pts.size() == 2);
  }

  TEST_CASE("invalid sets") {
    CHECK(code_of([] { parse_set("interval(1, 0)"); }) == ErrorCode::invalid_shape);
    CHECK(code_of([] { parse_set("exterior(-1)"); }) == ErrorCode::invalid_shape);
    CHECK(code_of([] { parse_set("interval(0,1) | box(interval(0,1), interval(0,1))"); }) ==
          ErrorCode::dimension_mismatch);
    CHECK(code_of([] { parse_set("ball(0,1)"); }) == ErrorCode::syntax);
    // lo ≤ hi up to a negligible amount is accepted.
    CHECK_NOTHROW(parse_set("interval(1 + NEGL, 1)"));
  }
}

TEST_SUITE("isets.contains") {
  TEST_CASE("examples") {
    const auto r1 = contains(parse_set("interval(0, eps^-1)"), pt("eps^-1"));
    CHECK(r1.member.value);
    CHECK(r1.distance->to_string() == "0");
    CHECK(member(parse_set("points(0)"), pt("NEGL")));
    const auto r3 = contains(parse_set("interval(0, 1)"), pt("1 + eps^3"));
    CHECK_FALSE(r3.member.value);
    // Oracle: direct distance formula max(u - hi, lo - u, 0) = ε^3.
    CHECK(gen_eq(*r3.distance, net("eps^3")).value);
  }

  TEST_CASE("sampled members against symbolic families") {
    const Grid g{2, 48};
    const GenNumber u = SampledNet::sample(parse_net("0.5 + eps^40"), g);
    const auto r = contains(parse_set("interval(0, 0.5)"), VecNet(u));
    CHECK(r.member.value);
    CHECK(r.member.backend == Backend::heuristic);
    const GenNumber v = SampledNet::sample(parse_net("0.5 + eps^3"), g);
    CHECK_FALSE(contains(parse_set("interval(0, 0.5)"), VecNet(v)).member.value);
  }

  TEST_CASE("empty family has no members") {
    CHECK_FALSE(member(parse_set("empty"), pt("0")));
  }
}

TEST_SUITE("isets.bounded") {
  TEST_CASE("examples") {
    const auto b = is_sharply_bounded(parse_set("interval(-eps^-2, eps^-2)"));
    CHECK(b.bounded);
    CHECK(b.M == 2);
    CHECK_FALSE(is_sharply_bounded(parse_set("exterior(eps^-4)")).bounded);
    const auto c = is_sharply_bounded(parse_set("interval(0, 1 + NEGL)"));
    CHECK(c.bounded);
    CHECK(c.M == 0);
    // Oracle: slope fit of the sampled sup net.
    const auto fit = fit_valuation(c.sup->sampled(Grid{2, 48}), 16);
    CHECK(std::fabs(fit.valuation) < 1e-9);
  }

  TEST_CASE("trim examples") {
    const auto a = parse_set("interval(0, eps^-1) | interval(eps^-5, eps^-5 + 1)");
    const auto t = trim_bounded(a, 1);
    CHECK(t.family.shapes().size() == 1);
    CHECK(equality_report(t.family, parse_set("interval(0, eps^-1)")).holds.value);
    CHECK_FALSE(t.precondition_verified);
    // The far component holds members beyond the α^{-1} bound.
    CHECK(is_sharply_bounded(a).M == 5);
    const auto u = trim_bounded(parse_set("interval(0, 1)"), 0);
    CHECK(u.precondition_verified);
    CHECK(equality_report(u.family, parse_set("interval(0,1)")).holds.value);
    CHECK(code_of([] { trim_bounded(parse_set("points(eps^-2)"), 1); }) == ErrorCode::empty_clip);
  }

  TEST_CASE("trimming a bounded family preserves the internal set") {
    testgen::Rng rng(5);
    for (int i = 0; i < 30; ++i) {
      const auto a = testgen::interval_family(rng);
      // The witness M only gives O(eps^-M); the clip needs a bound with constant 1.
      const auto t = trim_bounded(a, is_sharply_bounded(a).M + 1);
      CHECK(t.precondition_verified);
      CHECK(equality_report(t.family, a).holds.value);
    }
  }
}

TEST_SUITE("isets.extrema") {
  TEST_CASE("min_distance examples") {
    const auto r = min_distance(parse_set("interval(0,1)"), parse_set("interval(2,3)"));
    CHECK(r.distance.to_string() == "1");
    CHECK(r.u[0].to_string() == "1");
    CHECK(r.v[0].to_string() == "2");
    CHECK(gen_eq(min_distance(parse_set("interval(0,1)"), parse_set("interval(1 - eps, 3)")).distance,
                 GenNumber{})
              .value);
    const auto z = min_distance(parse_set("points(0)"), parse_set("points(NEGL)"));
    CHECK(gen_eq(z.distance, GenNumber{}).value);
    CHECK(intersect_families(parse_set("points(0)"), parse_set("points(NEGL)")).empty());
  }

  TEST_CASE("min_distance errors") {
    CHECK(code_of([] { min_distance(parse_set("exterior(1)"), parse_set("points(0)")); }) ==
          ErrorCode::not_sharply_bounded);
    CHECK(code_of([] { min_distance(parse_set("empty"), parse_set("points(0)")); }) == ErrorCode::empty_family);
  }

  TEST_CASE("distance to an exterior pushes the far corner out") {
    const auto r = min_distance(parse_set("box(interval(0,1), interval(-2,1))"), parse_set("exterior(3, 2)"));
    CHECK(r.distance.to_string() == "1");
    CHECK(member(parse_set("exterior(3, 2)"), r.v));
    CHECK(gen_eq(dist_inf(r.u, r.v), r.distance).value);
  }

  TEST_CASE("witnesses are optimal against random member pairs") {
    testgen::Rng rng(17);
    for (int i = 0; i < 20; ++i) {
      const auto a = testgen::interval_family(rng);
      const auto b = rng.coin() ? testgen::interval_family(rng) : parse_set("points(1.25; 3.75) | exterior(6)");
      const auto r = min_distance(a, b);
      CHECK(member(a, r.u));
      CHECK(member(b, r.v));
      CHECK(gen_eq(dist_inf(r.u, r.v), r.distance).value);
      for (int j = 0; j < 50; ++j) {
        const VecNet ua = random_member(a, rng.engine()), vb = random_member(b, rng.engine());
        CHECK(eventually_ge(dist_inf(ua, vb), r.distance).value);
      }
    }
  }

  TEST_CASE("max_norm examples") {
    const auto m = max_norm(parse_set("interval(0, eps^-2)"));
    CHECK(gen_eq(m.norm, net("eps^-2")).value);
    CHECK(gen_eq(m.witness[0], net("eps^-2")).value);
    CHECK(max_norm(parse_set("points(0)")).norm.to_string() == "0");
    const auto c = max_norm(parse_set("interval(-3, 1) | points(2 + eps)"));
    CHECK(c.norm.to_string() == "3");
    CHECK(code_of([] { max_norm(parse_set("exterior(1)")); }) == ErrorCode::not_sharply_bounded);
  }

  TEST_CASE("max norm witness dominates random members") {
    testgen::Rng rng(19);
    for (int i = 0; i < 20; ++i) {
      const auto a = testgen::interval_family(rng);
      const auto m = max_norm(a);
      CHECK(member(a, m.witness));
      for (int j = 0; j < 20; ++j) CHECK(eventually_ge(m.norm, norm_inf(random_member(a, rng.engine()))).value);
    }
  }

  TEST_CASE("sharp unit ball has no maximum") {
    const auto demo = sharp_ball_demo(20, 99);
    CHECK(demo.all_ok);
    CHECK(demo.cases.size() == 20);
    CHECK(std::fabs(demo.h_valuation) < 0.1);
  }
}

TEST_SUITE("isets.interleave") {
  const CombPattern even{0.5, 0.5, 2, 0};
  const CombPattern odd{0.5, 0.5, 2, 1};

  TEST_CASE("single part is the point itself") {
    const VecNet u = pt("eps + 2");
    CHECK(gen_eq(interleave({{u, {}}})[0], u[0]).value);
  }

  TEST_CASE("splice of two members stays in the set") {
    const auto a = parse_set("interval(0, 1)");
    const VecNet s = interleave({{pt("eps"), {even}}, {pt("1 - eps^2"), {odd}}});
    CHECK(member(a, s));
    // Direct evaluation of the splice.
    CHECK(s[0].eval(pow2(-5)) == pow2(-5));
    CHECK(s[0].eval(pow2(-6)) == 1 - pow2(-12));
  }

  TEST_CASE("internal sets exceed pointwise unions") {
    const auto a = parse_set("points(0; 1)");
    const VecNet s = interleave({{pt("0"), {even}}, {pt("1"), {}}});
    CHECK(member(a, s));
    CHECK_FALSE(gen_eq(s[0], GenNumber::constant(0)).value);
    CHECK_FALSE(gen_eq(s[0], GenNumber::constant(1)).value);
  }

  TEST_CASE("partition errors") {
    CHECK(code_of([&] { interleave({{pt("0"), {even}}, {pt("1"), {even}}}); }) == ErrorCode::not_a_partition);
    CHECK(code_of([&] { interleave({{pt("0"), {even}}, {pt("1"), {CombPattern{0.5, 0.5, 4, 1}}}}); }) ==
          ErrorCode::not_a_partition);
  }

  TEST_CASE("sampled parts splice on the grid") {
    const Grid g{2, 48};
    const VecNet u(GenNumber(SampledNet::sample(parse_net("eps"), g)));
    const VecNet s = interleave({{u, {even}}, {pt("0.5"), {odd}}});
    CHECK_FALSE(s.symbolic());
    CHECK(member(parse_set("interval(0, 1)"), s));
  }

  TEST_CASE("interleaving stability on random families") {
    testgen::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
      const auto a = testgen::interval_family(rng);
      const int m = rng.uniform_int(2, 4);
      const auto base = testgen::dyadic_comb(rng, m, 0);
      std::vector<std::pair<VecNet, Region>> parts;
      for (int r = 0; r < m; ++r) {
        auto c = base;
        c.r = r;
        parts.push_back({random_member(a, rng.engine()), {c}});
      }
      CHECK(member(a, interleave(parts)));
    }
  }
}

TEST_SUITE("isets.union") {
  TEST_CASE("examples") {
    const auto u = internal_union(parse_set("interval(0,1)"), parse_set("interval(2,3)"));
    CHECK(u.shapes().size() == 2);
    const VecNet s = interleave({{pt("0"), {CombPattern{0.5, 0.5, 2, 0}}}, {pt("3"), {}}});
    CHECK(member(u, s));
    CHECK_FALSE(member(parse_set("interval(0,1)"), s));
    CHECK_FALSE(member(parse_set("interval(2,3)"), s));
    const auto a = parse_set("interval(0, eps^-1) | points(5)");
    CHECK(equality_report(internal_union(a, a), a).holds.value);
    CHECK(equality_report(internal_union(a, parse_set("empty")), a).holds.value);
  }

  TEST_CASE("union contains both operands") {
    testgen::Rng rng(29);
    for (int i = 0; i < 50; ++i) {
      const auto [a, b] = testgen::family_pair(rng);
      const auto u = internal_union(a, b);
      CHECK(subset_report(a, u).holds.value);
      CHECK(subset_report(b, u).holds.value);
      CHECK(subset_report(a, u).delta->to_string() == "0");
    }
  }
}

TEST_SUITE("isets.inclusion") {
  TEST_CASE("examples") {
    CHECK(subset_report(parse_set("interval(0,1)"), parse_set("interval(-NEGL, 1 + NEGL)")).holds.value);
    const auto r = subset_report(parse_set("interval(0, 1 + eps^3)"), parse_set("interval(0,1)"));
    CHECK_FALSE(r.holds.value);
    CHECK(gen_eq(*r.delta, net("eps^3")).value);
    const auto e = equality_report(parse_set("interval(0,1)"), parse_set("interval(0, 1 + eps^3)"));
    CHECK_FALSE(e.holds.value);
    CHECK(gen_eq(*e.delta, net("eps^3")).value);
    CHECK(equality_report(parse_set("points(0)"), parse_set("points(NEGL)")).holds.value);
  }

  TEST_CASE("gap midpoints are found") {
    const auto r = subset_report(parse_set("interval(0, 3)"), parse_set("interval(0, 1) | interval(1 + eps^2, 3)"));
    CHECK_FALSE(r.holds.value);
    CHECK(gen_eq(*r.delta, net("0.5*eps^2")).value);
    const auto s = subset_report(parse_set("interval(-1, 1)"), parse_set("exterior(eps)"));
    CHECK(gen_eq(*s.delta, net("eps")).value);
  }

  TEST_CASE("boxes and points") {
    const auto a = parse_set("box(interval(0,1), interval(0, 1 + eps^2))");
    const auto b = parse_set("box(interval(-eps, 1), interval(0, 1))");
    const auto r = subset_report(a, b);
    CHECK(r.holds.backend == Backend::exact);
    CHECK(gen_eq(*r.delta, net("eps^2")).value);
    CHECK(subset_report(parse_set("points((0.5, 0.5); (1, NEGL))"), b).holds.value);
    // Two boxes in d = 2 use the sampled estimate.
    const auto c = subset_report(parse_set("box(interval(0,1), interval(0,1)) | box(interval(2,3), interval(0,1))"), b);
    CHECK(c.holds.backend == Backend::heuristic);
    CHECK_FALSE(c.holds.value);
  }

  TEST_CASE("empty families") {
    CHECK(subset_report(parse_set("empty"), parse_set("interval(0,1)")).holds.value);
    CHECK_FALSE(subset_report(parse_set("interval(0,1)"), parse_set("empty")).holds.value);
    CHECK(equality_report(parse_set("empty"), parse_set("empty")).holds.value);
  }

  TEST_CASE("unbounded first operand is refused") {
    CHECK(code_of([] { subset_report(parse_set("exterior(1)"), parse_set("interval(0,1)")); }) ==
          ErrorCode::not_sharply_bounded);
  }

  TEST_CASE("closure is the same internal set") {
    // Half-open families are represented by their closures; a representative
    // shrunk by a negligible amount is the same internal set.
    CHECK(equality_report(parse_set("interval(NEGL, 1 - NEGL)"), parse_set("interval(0, 1)")).holds.value);
  }

  TEST_CASE("subset and equality agree with the membership oracle") {
    testgen::Rng rng(31);
    int disagreements = 0;
    for (int i = 0; i < 200; ++i) {
      const auto [a, b] = testgen::family_pair(rng);
      const bool ab = subset_report(a, b).holds.value;
      const bool ba = subset_report(b, a).holds.value;
      if (ab != oracle_subset(a, b, rng)) ++disagreements;
      if (ba != oracle_subset(b, a, rng)) ++disagreements;
      CHECK((ab && ba) == equality_report(a, b).holds.value);
    }
    CHECK(disagreements == 0);
  }
}

TEST_SUITE("isets.intersection") {
  TEST_CASE("fattening") {
    CHECK(equality_report(fatten(parse_set("interval(0,1)"), 3), parse_set("interval(-eps^3, 1 + eps^3)")).holds.value);
    for (int m = 1; m <= 30; ++m) {
      CHECK(member(fatten(parse_set("points(eps)"), m), pt("eps")));
      const auto refined = intersect_families(fatten(parse_set("points(0)"), m), fatten(parse_set("points(NEGL)"), m));
      CHECK_FALSE(refined.empty());
      CHECK(member(refined, pt("0")));
    }
    CHECK(intersect_families(parse_set("points(0)"), parse_set("points(NEGL)")).empty());
  }

  TEST_CASE("membership in the refined intersection is membership in both") {
    testgen::Rng rng(37);
    for (int i = 0; i < 40; ++i) {
      const auto [a, b] = testgen::family_pair(rng);
      for (int j = 0; j < 5; ++j) {
        const VecNet u = random_member(rng.coin() ? a : b, rng.engine());
        const bool both = member(a, u) && member(b, u);
        bool all_m = true;
        for (int m = 1; m <= 12; ++m) {
          const auto f = intersect_families(fatten(a, m), fatten(b, m));
          all_m = all_m && !f.empty() && member(f, u);
        }
        CHECK(both == all_m);
      }
    }
  }

  TEST_CASE("shells are not supported") {
    CHECK(code_of([] { intersect_families(parse_set("box(interval(-2,2), interval(-2,2))"), parse_set("exterior(1, 2)")); }) ==
          ErrorCode::unsupported_shape_combo);
    const auto f = intersect_families(parse_set("interval(-2, 2)"), parse_set("exterior(1)"));
    CHECK(f.shapes().size() == 2);
  }
}

TEST_SUITE("isets.product") {
  TEST_CASE("examples") {
    const auto p = product(parse_set("interval(0,1)"), parse_set("interval(2,3)"));
    CHECK(p.dim() == 2);
    CHECK(member(p, VecNet({net("0.5"), net("2 + eps")})));
    CHECK(product(parse_set("interval(0,1)"), parse_set("empty")).empty());
    CHECK(code_of([] { product(parse_set("exterior(1)"), parse_set("interval(0,1)")); }) ==
          ErrorCode::unsupported_shape_combo);
  }

  TEST_CASE("membership factorizes") {
    testgen::Rng rng(41);
    for (int i = 0; i < 60; ++i) {
      const auto a = testgen::interval_family(rng, 2), b = testgen::interval_family(rng, 2);
      const auto p = product(a, b);
      for (int j = 0; j < 5; ++j) {
        const VecNet x = random_member(rng.coin() ? a : b, rng.engine());
        const VecNet y = random_member(rng.coin() ? a : b, rng.engine());
        CHECK(member(p, concat(x, y)) == (member(a, x) && member(b, y)));
      }
    }
  }

  TEST_CASE("projection") {
    const auto p = project(product(parse_set("interval(0,1)"), parse_set("interval(2,3)")), {0});
    CHECK(p.verified);
    CHECK(equality_report(p.family, parse_set("interval(0,1)")).holds.value);
    const auto q = project(parse_set("points((eps, eps^2))"), {0});
    CHECK(equality_report(q.family, parse_set("points(eps)")).holds.value);
    CHECK(code_of([] { project(parse_set("exterior(1, 2)"), {1}); }) == ErrorCode::not_sharply_bounded);
    const auto r = project(parse_set("exterior(1, 2)"), {1}, true);
    CHECK_FALSE(r.verified);
  }

  TEST_CASE("projection matches the existence of a fibre point") {
    testgen::Rng rng(43);
    for (int i = 0; i < 40; ++i) {
      const auto a = testgen::interval_family(rng, 2), b = testgen::interval_family(rng, 2);
      const auto pr = project(product(a, b), {1}).family;
      const VecNet anchor = random_member(a, rng.engine());
      for (int j = 0; j < 5; ++j) {
        const VecNet y = random_member(rng.coin() ? a : b, rng.engine());
        CHECK(member(pr, y) == member(product(a, b), concat(anchor, y)));
      }
    }
  }
}

TEST_SUITE("isets.properties") {
  TEST_CASE("representative independence under negligible perturbation") {
    testgen::Rng rng(47);
    for (int i = 0; i < 60; ++i) {
      const auto [a, b] = testgen::family_pair(rng);
      const auto a2 = testgen::negl_perturbed(rng, a);
      CHECK(equality_report(a, a2).holds.value);
      CHECK(subset_report(a, b).holds.value == subset_report(a2, b).holds.value);
      CHECK(gen_eq(max_norm(a).norm, max_norm(a2).norm).value);
      for (int j = 0; j < 5; ++j) {
        const VecNet u = random_member(rng.coin() ? a : b, rng.engine());
        CHECK(member(a, u) == member(a2, u));
      }
    }
  }

  TEST_CASE("closedness under sharp limits") {
    testgen::Rng rng(53);
    int limits_in = 0;
    for (int i = 0; i < 50; ++i) {
      const auto a = testgen::interval_family(rng);
      const VecNet u = random_member(a, rng.engine());
      // Approach u from the side that stays inside A.
      double w = rng.coin() ? 1.0 : -1.0;
      if (!member(a, VecNet(u[0] + GenNumber(PiecewiseNet::monomial(w, 1))))) w = -w;
      bool all_in = true;
      for (int n = 1; n <= 20; ++n) {
        const VecNet un(u[0] + GenNumber(PiecewiseNet::monomial(w, n)));
        CHECK(sharp_norm(un[0] - u[0]) == doctest::Approx(std::exp(-n)));
        all_in = all_in && member(a, un);
      }
      REQUIRE(all_in);
      if (member(a, u)) ++limits_in;
    }
    CHECK(limits_in == 50);
  }
}
