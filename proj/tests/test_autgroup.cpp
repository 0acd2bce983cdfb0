#include <random>

#include "doctest.h"
#include "inoue/autgroup.hpp"
#include "inoue/error.hpp"

using namespace inoue;

namespace {

ChartMap family_chart(const MapFamily& f, Chart c) { return f.on(c); }

CoverAut random_aut(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-3, 3);
  std::uniform_int_distribution<std::int64_t> z(0, ctx->modulus() - 1);
  const Scalar d = Scalar::delta(ctx), s = Scalar::generator(ctx, "s"),
               t = Scalar::generator(ctx, "t");
  return {e(rng), Scalar::root_of_unity(ctx, ctx->modulus(), z(rng)) * s.pow(e(rng)) * d.pow(e(rng)),
          Scalar::root_of_unity(ctx, ctx->modulus(), z(rng)) * t.pow(e(rng)) * d.pow(e(rng))};
}

}  // namespace

TEST_CASE("twist law of the normal form") {
  auto ctx = ScalarContext::make(3);
  const Scalar u = Scalar::generator(ctx, "s"), v = Scalar::generator(ctx, "t");
  const CoverAut g = CoverAut::gamma_beta_power(ctx, 2);
  // gamma^2 (u,v) gamma^-2 = (u, u^2 v)
  CHECK(compose(g, compose(CoverAut::torus(u, v), inverse(g))) ==
        CoverAut::torus(u, u.pow(2) * v));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const CoverAut a = random_aut(ctx, rng), b = random_aut(ctx, rng), c = random_aut(ctx, rng);
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    REQUIRE(compose(a, inverse(a)) == CoverAut::identity(ctx));
    REQUIRE(compose(inverse(a), a) == CoverAut::identity(ctx));
    REQUIRE(power(a, -2) == inverse(compose(a, a)));
  }
}

TEST_CASE("realize is a homomorphism matching the primitive construction") {
  std::mt19937_64 rng(9);
  for (int m = 1; m <= 5; ++m) {
    auto ctx = ScalarContext::make(m);
    const Scalar beta = Scalar::beta(ctx);
    const int w = chart_window(m);
    for (int trial = 0; trial < 10; ++trial) {
      const CoverAut a = random_aut(ctx, rng), b = random_aut(ctx, rng);
      const MapFamily pa = primitive_family(a, beta);
      for (int k = -w; k <= w; ++k) {
        const Chart c = Chart::u(k);
        REQUIRE(realize(a, c, beta) == family_chart(pa, c));
        const ChartMap first = realize(b, c, beta);
        REQUIRE(compose(first, realize(a, first.target, beta)) ==
                realize(compose(a, b), c, beta));
      }
      REQUIRE(realize(a, Chart::v(), beta) == family_chart(pa, Chart::v()));
      REQUIRE(from_v_chart(realize(a, Chart::v(), beta), beta) == a);
      // Chart-level equivariance with the U(k) -> V transitions.
      for (int k = -w; k <= w; ++k) {
        const ChartMap on_u = realize(a, Chart::u(k), beta);
        REQUIRE(compose(on_u, transition(on_u.target, Chart::v(), ctx)) ==
                compose(transition(Chart::u(k), Chart::v(), ctx),
                        realize(a, Chart::v(), beta)));
      }
    }
  }
}

TEST_CASE("explicit chart forms") {
  auto ctx = ScalarContext::make(4);
  const Scalar beta = Scalar::beta(ctx);
  // gamma_beta^m on V: (beta^m w, beta^{m(m-1)/2} w^m x)
  const ChartMap g = realize(CoverAut::gamma_beta_power(ctx, 4), Chart::v(), beta);
  CHECK(g.exponents == ExponentMatrix{{{1, 0}, {4, 1}}});
  CHECK(g.coefficients[0] == beta.pow(4));
  CHECK(g.coefficients[1] == beta.pow(6));
  // nu on V: (beta w, delta^{-(m-1)} w x)
  const ChartMap n = realize(nu(ctx), Chart::v(), beta);
  CHECK(n.exponents == ExponentMatrix{{{1, 0}, {1, 1}}});
  CHECK(n.coefficients[0] == beta);
  CHECK(n.coefficients[1] == Scalar::delta(ctx).pow(-3));
  // gamma_beta from U(0) to U(1): (beta^{-1} x, beta^2 y)
  const ChartMap u = realize(CoverAut::gamma_beta_power(ctx, 1), Chart::u(0), beta);
  CHECK(u == gamma_chart(1, beta, Chart::u(0)));
  CHECK(u.coefficients[0] == beta.inverse());
  CHECK(u.coefficients[1] == beta.pow(2));
}

TEST_CASE("nu^m = gamma_{m,alpha}") {
  for (int m = 1; m <= 8; ++m) {
    auto ctx = ScalarContext::make(m);
    const CoverAut big = gamma_m(ctx);
    CHECK(power(nu(ctx), m) == big);
    CHECK(big.shift == m);
    CHECK(big.u.is_one());
    CHECK(big == CoverAut{m, Scalar::one(ctx), Scalar::delta(ctx).pow(-m * (m - 1))});
    CHECK(commute(nu(ctx), CoverAut::gamma_beta_power(ctx, 1)));
    for (int i = 0; i < m; ++i) {
      const CoverAut r = nu_root(m, Scalar::delta(ctx), i);
      CHECK(power(r, m) == big);
      CHECK(r.u == Scalar::root_of_unity(ctx, m, i));
    }
  }
  auto ctx1 = ScalarContext::make(1);
  CHECK(nu(ctx1) == CoverAut::gamma_beta_power(ctx1, 1));
  CHECK(gamma_m(ctx1) == CoverAut::gamma_beta_power(ctx1, 1));
}

TEST_CASE("faithfulness on the window") {
  auto ctx = ScalarContext::make(3);
  const Scalar beta = Scalar::beta(ctx);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const CoverAut a = random_aut(ctx, rng);
    if (a == CoverAut::identity(ctx)) continue;
    bool moves = false;
    for (Chart c : {Chart::v(), Chart::u(0), Chart::u(1)})
      moves = moves || realize(a, c, beta) != ChartMap::identity(c, ctx);
    CHECK(moves);
  }
}

TEST_CASE("from_v_chart rejects non-normalizing maps") {
  auto ctx = ScalarContext::make(2);
  CHECK_THROWS_AS(from_v_chart(transition(Chart::u(0), Chart::v(), ctx), Scalar::beta(ctx)),
                  DomainError);
  CHECK_THROWS_AS(
      from_v_chart(ChartMap{Chart::v(), Chart::v(), {{{0, 1}, {1, 0}}},
                            {Scalar::one(ctx), Scalar::one(ctx)}},
                   Scalar::beta(ctx)),
      DomainError);
}

TEST_CASE("pointwise application agrees with composed chart maps") {
  auto ctx = ScalarContext::make(2);
  const Scalar beta = Scalar::beta(ctx);
  std::mt19937_64 rng(17);
  const CoverAut a = nu(ctx);
  const MapFamily pa = primitive_family(a, beta);
  for (int i = 0; i < 20; ++i) {
    const Assignment asg = random_assignment(ctx, rng);
    const PointOnW q{Chart::u(1), {{{0.6, 0.2}, {1.1, -0.3}}}};
    const PointOnW viaWord = apply_pointwise({pa}, q, asg);
    const ChartMap f = realize(a, Chart::u(1), beta);
    CHECK(points_agree(viaWord, {f.target, f.apply(q.p, asg)}, asg, ctx));
    // Same point expressed in V agrees after transit.
    const ChartMap fv = realize(a, Chart::v(), beta);
    const Point qv = transition(Chart::u(1), Chart::v(), ctx).apply(q.p, asg);
    CHECK(points_agree(viaWord, {Chart::v(), fv.apply(qv, asg)}, asg, ctx));
  }
}

TEST_CASE("verify_relations passes for m = 1..8") {
  for (int m = 1; m <= 8; ++m) {
    auto ctx = ScalarContext::make(m);
    const CheckList checks = verify_relations(ctx, 10, 100 + m);
    CHECK(checks.size() >= 20);
    for (const auto& c : checks) {
      INFO("m=" << m << " " << c.name << ": " << c.details);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("m = 2: rho = -1 commutes with gamma") {
  auto ctx = ScalarContext::make(2);
  const Scalar rho = Scalar::root_of_unity(ctx, 2);
  for (const auto& tname : {"t", "delta"}) {
    const Scalar t = Scalar::generator(ctx, tname);
    CHECK(commute(CoverAut::torus(rho, t), gamma_m(ctx)));
  }
  CHECK_FALSE(commute(CoverAut::torus(Scalar::root_of_unity(ctx, 4), Scalar::one(ctx)),
                      gamma_m(ctx)));
}
