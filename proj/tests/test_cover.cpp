#include <random>

#include "doctest.h"
#include "inoue/autgroup.hpp"
#include "inoue/cover.hpp"
#include "inoue/error.hpp"

using namespace inoue;

TEST_CASE("transition matrices") {
  auto ctx = ScalarContext::make(2);
  for (int k = -4; k <= 4; ++k) {
    const ChartMap f = transition(Chart::u(k), Chart::u(k + 1), ctx);
    CHECK(f.exponents == ExponentMatrix{{{0, -1}, {1, 2}}});
    CHECK(f.coefficients[0].is_one());
    CHECK(f.coefficients[1].is_one());
    CHECK(compose(f, transition(Chart::u(k + 1), Chart::u(k), ctx)) ==
          ChartMap::identity(Chart::u(k), ctx));
    const ChartMap g = transition(Chart::u(k), Chart::v(), ctx);
    CHECK(g.exponents == ExponentMatrix{{{1, 1}, {k + 1, k}}});
    // x_k = w^{-k} x, y_k = w^{k+1} x^{-1}
    CHECK(transition(Chart::v(), Chart::u(k), ctx).exponents ==
          ExponentMatrix{{{-k, 1}, {k + 1, -1}}});
  }
  CHECK(transition(Chart::u(0), Chart::v(), ctx).exponents ==
        ExponentMatrix{{{1, 1}, {1, 0}}});
  CHECK_THROWS_AS(transition(Chart::u(0), Chart::u(2), ctx), ChartError);
  CHECK_THROWS_AS(transition(Chart::v(), Chart::v(), ctx), ChartError);
}

TEST_CASE("compose") {
  auto ctx = ScalarContext::make(3);
  const ChartMap f = transition(Chart::u(0), Chart::u(1), ctx);
  CHECK(compose(ChartMap::identity(Chart::u(0), ctx), f) == f);
  CHECK(compose(f, ChartMap::identity(Chart::u(1), ctx)) == f);
  // [[1,1],[2,1]] * [[0,-1],[1,2]] = [[1,1],[1,0]], computed by hand.
  const ChartMap h = compose(f, transition(Chart::u(1), Chart::v(), ctx));
  CHECK(h.exponents == ExponentMatrix{{{1, 1}, {1, 0}}});
  CHECK(h == transition(Chart::u(0), Chart::v(), ctx));
  CHECK_THROWS_AS(compose(f, f), ChartError);
}

TEST_CASE("compose agrees with pointwise composition") {
  auto ctx = ScalarContext::make(3);
  std::mt19937_64 rng(3);
  const Scalar s = Scalar::generator(ctx, "s"), t = Scalar::generator(ctx, "t");
  const ChartMap f = compose(torus_action(s * Scalar::delta(ctx), t, Chart::u(0)),
                             transition(Chart::u(0), Chart::u(1), ctx));
  const ChartMap g = compose(gamma_chart(3, Scalar::alpha(ctx), Chart::u(1)),
                             transition(Chart::u(4), Chart::v(), ctx));
  const ChartMap fg = compose(f, g);
  for (int i = 0; i < 20; ++i) {
    const Assignment a = random_assignment(ctx, rng);
    const Point p{{{0.3, 0.1}, {0.7, 0.0}}};
    const Point lhs = fg.apply(p, a);
    const Point rhs = g.apply(f.apply(p, a), a);
    for (int c = 0; c < 2; ++c) CHECK(std::abs(lhs[c] - rhs[c]) <= 1e-9 * std::abs(lhs[c]));
  }
}

TEST_CASE("cocycle consistency on the window") {
  auto ctx = ScalarContext::make(4);
  const int w = chart_window(4);
  for (int k = -w; k <= w; ++k)
    CHECK(transition(Chart::u(k), Chart::v(), ctx) ==
          compose(transition(Chart::u(k), Chart::u(k + 1), ctx),
                  transition(Chart::u(k + 1), Chart::v(), ctx)));
}

TEST_CASE("torus action") {
  auto ctx = ScalarContext::make(3);
  const Scalar s = Scalar::generator(ctx, "s"), t = Scalar::generator(ctx, "t");
  const ChartMap on_u0 = torus_action(s, t, Chart::u(0));
  CHECK(on_u0.coefficients[0] == t);
  CHECK(on_u0.coefficients[1] == s * t.inverse());
  const ChartMap on_v = torus_action(s, t, Chart::v());
  CHECK(on_v.coefficients[0] == s);
  CHECK(on_v.coefficients[1] == t);
  const Scalar s2 = Scalar::delta(ctx).pow(5), t2 = Scalar::root_of_unity(ctx, 6);
  for (int k = -9; k <= 9; ++k) {
    const Chart c = Chart::u(k);
    // equivariance with the U(k) -> V transition
    CHECK(compose(torus_action(s, t, c), transition(c, Chart::v(), ctx)) ==
          compose(transition(c, Chart::v(), ctx), torus_action(s, t, Chart::v())));
    // group action
    CHECK(compose(torus_action(s2, t2, c), torus_action(s, t, c)) ==
          torus_action(s * s2, t * t2, c));
  }
}

TEST_CASE("gamma_chart") {
  auto ctx = ScalarContext::make(2);
  const Scalar alpha = Scalar::alpha(ctx);
  const ChartMap g = gamma_chart(2, alpha, Chart::u(-2));
  CHECK(g.target == Chart::u(0));
  CHECK(g.coefficients[0].is_one());
  CHECK(g.coefficients[1] == alpha);
  const ChartMap gv = gamma_chart(2, alpha, Chart::v());
  CHECK(gv.exponents == ExponentMatrix{{{1, 0}, {2, 1}}});
  CHECK(gv.coefficients[0] == alpha);
  for (int m = 0; m <= 5; ++m) {
    for (int k = -6; k <= 6; ++k) {
      const Chart c = Chart::u(k);
      const ChartMap on_u = gamma_chart(m, alpha, c);
      if (m == 0) {
        CHECK(on_u == torus_action(alpha, Scalar::one(ctx), c));
      }
      // V-chart form equals the U-chart form conjugated by transitions.
      CHECK(compose(compose(transition(Chart::v(), c, ctx), on_u),
                    transition(on_u.target, Chart::v(), ctx)) ==
            gamma_chart(m, alpha, Chart::v()));
    }
  }
  CHECK(gamma_chart(0, alpha, Chart::v()) ==
        torus_action(alpha, Scalar::one(ctx), Chart::v()));
  CHECK_THROWS_AS(gamma_chart(-1, alpha, Chart::v()), DomainError);
}

TEST_CASE("curve_image") {
  auto ctx = ScalarContext::make(3);
  const Scalar alpha = Scalar::alpha(ctx);
  const MapFamily g = MapFamily::gamma(3, alpha);
  const MapFamily tor = MapFamily::torus(Scalar::generator(ctx, "s"), Scalar::generator(ctx, "t"));
  for (int k = -5; k <= 5; ++k) {
    CHECK(curve_image(g.on, CurveLabel::c(k)) == CurveLabel::c(k + 3));
    CHECK(curve_image(tor.on, CurveLabel::c(k)) == CurveLabel::c(k));
  }
  CHECK(curve_image(g.on, CurveLabel::e()) == CurveLabel::e());
  CHECK(curve_image(tor.on, CurveLabel::e()) == CurveLabel::e());
  // A chart transition is not a global automorphism of the curve family.
  auto bad = [&](Chart c) { return transition(c, Chart::v(), ctx); };
  CHECK_THROWS_AS(curve_image(bad, CurveLabel::c(0)), DomainError);
}

TEST_CASE("window override") {
  CHECK(chart_window(4) == 12);
  setenv("INOUE_AUT_WINDOW", "5", 1);
  CHECK(chart_window(4) == 5);
  setenv("INOUE_AUT_WINDOW", "junk", 1);
  CHECK(chart_window(4) == 12);
  unsetenv("INOUE_AUT_WINDOW");
}
