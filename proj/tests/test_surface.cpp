#include "doctest.h"
#include "inoue/error.hpp"
#include "inoue/surface.hpp"

using namespace inoue;

namespace {

void require_all(const CheckList& checks, int m) {
  for (const auto& c : checks) {
    INFO("m=" << m << " " << c.name << ": " << c.details);
    CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("descends") {
  for (int m = 1; m <= 6; ++m) {
    const Surface s = Surface::standard(m);
    const Scalar t = Scalar::generator(s.ctx, "t");
    CHECK(descends(CoverAut::torus(s.rho(), t), s));
    CHECK(descends(s.nu(), s));
    CHECK_FALSE(descends(CoverAut::torus(Scalar::generator(s.ctx, "s"), t), s));
    if (m >= 2) {
      CHECK_FALSE(descends(CoverAut::torus(Scalar::root_of_unity(s.ctx, 2 * m), t), s));
    }
    CHECK_THROWS_AS(SurfaceAut::from_cover(CoverAut::torus(Scalar::delta(s.ctx), t), s),
                    DomainError);
  }
}

TEST_CASE("canonical representatives") {
  const Surface s = Surface::standard(3);
  const SurfaceAut n = SurfaceAut::from_cover(s.nu(), s);
  CHECK(power(n, 3) == SurfaceAut::identity(s));
  CHECK(power(n, 4) == n);
  CHECK(power(n, -1) == power(n, 2));
  CHECK(SurfaceAut::from_cover(s.gamma(), s) == SurfaceAut::identity(s));
  CHECK(power(n, 5).representative().shift == 2);
  CHECK(element_order(n) == 3);
  CHECK(element_order(SurfaceAut::from_cover(
            CoverAut::torus(s.rho(), Scalar::generator(s.ctx, "t")), s)) == 0);
}

TEST_CASE("induced_on_E") {
  const Surface s = Surface::standard(4);
  const Scalar one = Scalar::one(s.ctx);
  const Scalar t = Scalar::generator(s.ctx, "t");
  CHECK(induced_on_E(SurfaceAut::from_cover(CoverAut::torus(one, t), s)).is_one());
  CHECK(induced_on_E(SurfaceAut::from_cover(s.nu(), s)) == s.beta());
  CHECK(induced_on_E(SurfaceAut::from_cover(s.gamma(), s)).is_one());
  // nu^5 = gamma nu: translation beta^5 = alpha beta ~ beta.
  CHECK(induced_on_E(power(SurfaceAut::from_cover(s.nu(), s), 5)) == s.beta());
  CHECK(induced_on_E(SurfaceAut::from_cover(CoverAut::torus(s.rho(), t), s)) == s.rho());
}

TEST_CASE("cycle_rotation, dihedral image, h2 action") {
  const Surface s = Surface::standard(5);
  const SurfaceAut n = SurfaceAut::from_cover(s.nu(), s);
  const SurfaceAut r = SurfaceAut::from_cover(CoverAut::torus(s.rho(), s.rho().pow(2)), s);
  CHECK(cycle_rotation(n) == 1);
  CHECK(cycle_rotation(r) == 0);
  CHECK(cycle_rotation(power(n, 5)) == 0);
  CHECK(cycle_rotation(power(n, 3)) == 3);
  CHECK(dihedral_image(n) == Dihedral{1, false});
  IntMatrix id(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i) id[i][i] = 1;
  CHECK(h2_action(r) == id);
  CHECK(h2_action(power(n, 5)) == id);
  const IntMatrix p = h2_action(n);
  CHECK(p[0][0] == 1);
  for (int i = 0; i < 5; ++i) CHECK(p[1 + (i + 1) % 5][1 + i] == 1);
}

TEST_CASE("curve configuration") {
  const CurveConfig c1 = curve_config(Surface::standard(1));
  REQUIRE(c1.components.size() == 1);
  CHECK(c1.components[0].self_intersection == 0);
  CHECK(c1.adjacency == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(c1.elliptic_self_intersection == -1);
  const CurveConfig c4 = curve_config(Surface::standard(4));
  CHECK(c4.components.size() == 4);
  for (const auto& c : c4.components) CHECK(c.self_intersection == -2);
  CHECK(c4.adjacency.size() == 4);
  CHECK(c4.elliptic_self_intersection == -4);
  CHECK(curve_config(Surface::standard(2)).adjacency.size() == 2);
}

TEST_CASE("fixed loci of the named subgroups") {
  SUBCASE("torus subgroup (1, rho_l)") {
    const Surface s = Surface::standard(3, 3);  // zeta_3 available
    const Scalar one = Scalar::one(s.ctx);
    const SurfaceAut g =
        SurfaceAut::from_cover(CoverAut::torus(one, Scalar::root_of_unity(s.ctx, 3)), s);
    const FixedLocus f = fixed_locus(g, 3);
    CHECK(f.nodes.size() == 3);
    for (const auto& n : f.nodes) {
      CHECK(n.weight_x == 1);
      CHECK(n.weight_y == 2);
    }
    CHECK(f.fixed_components.empty());
    CHECK(f.e_pointwise_fixed);
    CHECK(f.euler_number(3) == 3);
  }
  SUBCASE("H_l inside M_j") {
    const Surface s = Surface::standard(6);
    for (int j = 0; j < 6; ++j) {
      const SurfaceAut gen =
          SurfaceAut::from_cover(CoverAut::torus(s.rho(), s.rho().pow(j)), s);
      const FixedLocus f = fixed_locus(power(gen, 3), 2);
      std::vector<int> expected;
      for (int i = 0; i < 6; ++i)
        if ((i - j) % 2 == 0) expected.push_back(i);
      CHECK(f.fixed_components == expected);
      CHECK(f.nodes.size() == 6);
      CHECK_FALSE(f.e_pointwise_fixed);
      CHECK(f.e_translation->order() == 2);
    }
  }
  SUBCASE("involution at m = 4") {
    const Surface s = Surface::standard(4);
    const Scalar minus = Scalar::root_of_unity(s.ctx, 2);
    const FixedLocus f =
        fixed_locus(SurfaceAut::from_cover(CoverAut::torus(minus, minus), s), 2);
    CHECK(f.fixed_components == std::vector<int>{1, 3});
    CHECK(f.euler_number(4) == 4);
  }
  SUBCASE("rotations are free") {
    const Surface s = Surface::standard(4);
    const FixedLocus f = fixed_locus(SurfaceAut::from_cover(s.nu(), s), 4);
    CHECK(f.fixed_point_free());
    CHECK(f.euler_number(4) == 0);
  }
  SUBCASE("errors") {
    const Surface s = Surface::standard(2);
    const SurfaceAut inf = SurfaceAut::from_cover(
        CoverAut::torus(Scalar::one(s.ctx), Scalar::generator(s.ctx, "t")), s);
    CHECK_THROWS_AS(fixed_locus(inf), DomainError);
    CHECK_THROWS_AS(fixed_locus(SurfaceAut::from_cover(s.nu(), s), 3), DomainError);
  }
}

TEST_CASE("H: cosets and generators") {
  for (int m = 1; m <= 6; ++m) {
    const HGroup h = build_H(Surface::standard(m));
    CHECK(h.cosets.size() == static_cast<std::size_t>(m * m));
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a)
        CHECK(h.coset_of(h.cosets[j * m + a]) == std::pair<std::int64_t, std::int64_t>{j, a});
    require_all(h.checks, m);
  }
}

TEST_CASE("twist law at m = 4, by hand") {
  const Surface s = Surface::standard(4);
  const Scalar t = Scalar::generator(s.ctx, "t");
  const SurfaceAut n = SurfaceAut::from_cover(s.nu(), s);
  const SurfaceAut x = SurfaceAut::from_cover(CoverAut::torus(s.rho(), t), s);
  const SurfaceAut y = SurfaceAut::from_cover(CoverAut::torus(s.rho(), s.rho() * t), s);
  CHECK(compose(n, compose(x, inverse(n))) == y);
}

TEST_CASE("m = 3: (rho, rho) is not central") {
  const Surface s = Surface::standard(3);
  const SurfaceAut x = SurfaceAut::from_cover(CoverAut::torus(s.rho(), s.rho()), s);
  CHECK_FALSE(commute(x, SurfaceAut::from_cover(s.nu(), s)));
}

TEST_CASE("m = 2: M_0 and M_1 are conjugate") {
  const Surface s = Surface::standard(2);
  const Scalar minus = s.rho();
  const SurfaceAut m0 = SurfaceAut::from_cover(CoverAut::torus(minus, Scalar::one(s.ctx)), s);
  const SurfaceAut m1 = SurfaceAut::from_cover(CoverAut::torus(minus, minus), s);
  const SurfaceAut n = SurfaceAut::from_cover(s.nu(), s);
  CHECK(compose(n, compose(m0, inverse(n))) == m1);
  CHECK(compose(n, compose(m1, inverse(n))) == m0);
}

TEST_CASE("structure suites pass for m = 1..8") {
  for (int m = 1; m <= 8; ++m) {
    const Surface s = Surface::standard(m);
    require_all(verify_theorem_1_1(s), m);
    require_all(verify_corollary_1_2(s), m);
    require_all(verify_remarks(s), m);
  }
}

TEST_CASE("homomorphism suite for m = 1..5") {
  for (int m = 1; m <= 5; ++m) require_all(verify_homomorphisms(Surface::standard(m)), m);
}

TEST_CASE("labels") {
  CHECK(Surface::standard(3).label() == "S(3, alpha)");
  const Surface s = Surface::standard(4);
  CHECK(surface_label(1, Scalar::root_of_unity(s.ctx, 4) * s.beta()) == "S(1, zeta_4*beta)");
  CHECK(surface_label(2, s.alpha().pow(2)) == "S(2, alpha^2)");
}
