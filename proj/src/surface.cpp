#include "inoue/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "inoue/error.hpp"

namespace inoue {

Surface Surface::standard(int m, std::int64_t torsion_factor) {
  if (m < 1) throw DomainError("surface: m must be positive");
  if (torsion_factor < 1) throw DomainError("surface: torsion factor must be positive");
  auto ctx = ScalarContext::make(m, 2 * m * torsion_factor);
  return {ctx, m, Scalar::delta(ctx)};
}

Surface Surface::with_theta(int m, const Scalar& theta) {
  if (m < 1) throw DomainError("surface: m must be positive");
  if (theta.context()->modulus() % (2 * m) != 0)
    throw DomainError("surface: torsion modulus must be a multiple of 2m");
  if (theta.free_exponent("delta") <= 0)
    throw DomainError("surface: theta must have positive delta exponent");
  return {theta.context(), m, theta};
}

std::string surface_label(int m, const Scalar& alpha) {
  return "S(" + std::to_string(m) + ", " + alpha.to_string() + ")";
}

std::string Surface::label() const { return surface_label(m, alpha()); }

bool descends(const CoverAut& g, const Surface& s) {
  const CoverAut gm = s.gamma();
  return compose(g, gm) == compose(gm, g);
}

SurfaceAut SurfaceAut::reduced(CoverAut rep, int m, Scalar beta, CoverAut gamma) {
  const std::int64_t q = floor_div(rep.shift, m);
  if (q != 0) rep = compose(rep, inoue::power(gamma, -q));
  return SurfaceAut(std::move(rep), m, std::move(beta), std::move(gamma));
}

SurfaceAut SurfaceAut::from_cover(const CoverAut& g, const Surface& s) {
  if (!descends(g, s))
    throw DomainError("surface: " + g.to_string() + " does not commute with gamma");
  return reduced(g, s.m, s.beta(), s.gamma());
}

SurfaceAut SurfaceAut::identity(const Surface& s) {
  return from_cover(CoverAut::identity(s.ctx), s);
}

SurfaceAut compose(const SurfaceAut& a, const SurfaceAut& b) {
  return SurfaceAut::reduced(compose(a.rep_, b.rep_), a.m_, a.beta_, a.gamma_);
}

SurfaceAut inverse(const SurfaceAut& a) {
  return SurfaceAut::reduced(inverse(a.rep_), a.m_, a.beta_, a.gamma_);
}

SurfaceAut power(const SurfaceAut& a, std::int64_t k) {
  SurfaceAut base = k < 0 ? inverse(a) : a;
  SurfaceAut result = compose(a, inverse(a));
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result = compose(result, base);
  return result;
}

bool commute(const SurfaceAut& a, const SurfaceAut& b) {
  return compose(a, b) == compose(b, a);
}

std::int64_t element_order(const SurfaceAut& a) {
  const std::int64_t m = a.m();
  const std::int64_t r = cycle_rotation(a);
  const std::int64_t k0 = m / std::gcd(r, m);
  const CoverAut h = power(a, k0).representative();
  const std::int64_t ou = h.u.order(), ov = h.v.order();
  if (ou == 0 || ov == 0) return 0;
  return k0 * std::lcm(ou, ov);
}

namespace {

Scalar normalize_mod(const Scalar& c, const Scalar& alpha) {
  const std::int64_t ea = alpha.free_exponent("delta");
  const std::int64_t q = floor_div(c.free_exponent("delta"), ea);
  return c * alpha.pow(-q);
}

std::function<ChartMap(Chart)> chart_family(const SurfaceAut& g) {
  return [rep = g.representative(), beta = g.beta()](Chart c) {
    return realize(rep, c, beta);
  };
}

std::int64_t image_index(const SurfaceAut& g, std::int64_t i) {
  const CurveLabel img = curve_image(chart_family(g), CurveLabel::c(i));
  return floor_mod(img.index, g.m());
}

}  // namespace

Scalar induced_on_E(const SurfaceAut& g) {
  const CoverAut& r = g.representative();
  return normalize_mod(r.u * g.beta().pow(r.shift), g.beta().pow(g.m()));
}

bool induces_translation(const SurfaceAut& g) {
  const ChartMap on_v = realize(g.representative(), Chart::v(), g.beta());
  if (curve_image(chart_family(g), CurveLabel::e()) != CurveLabel::e()) return false;
  if (on_v.exponents[0] != std::array<std::int64_t, 2>{1, 0}) return false;
  return normalize_mod(on_v.coefficients[0], g.beta().pow(g.m())) == induced_on_E(g);
}

std::int64_t cycle_rotation(const SurfaceAut& g) { return image_index(g, 0); }

Dihedral dihedral_image(const SurfaceAut& g) {
  const std::int64_t m = g.m();
  const std::int64_t a = image_index(g, 0);
  const ChartMap on_v = realize(g.representative(), Chart::v(), g.beta());
  bool reflection = det(on_v.exponents) < 0;
  if (m >= 3) reflection = reflection || floor_mod(image_index(g, 1) - a, m) == m - 1;
  return {a, reflection};
}

IntMatrix h2_action(const SurfaceAut& g) {
  const int m = g.m();
  IntMatrix p(m + 1, std::vector<int>(m + 1, 0));
  if (curve_image(chart_family(g), CurveLabel::e()) == CurveLabel::e()) p[0][0] = 1;
  for (int i = 0; i < m; ++i) p[1 + image_index(g, i)][1 + i] = 1;
  return p;
}

CurveConfig curve_config(const Surface& s) {
  CurveConfig cfg;
  const int m = s.m;
  for (int i = 0; i < m; ++i)
    cfg.components.push_back({"C" + std::to_string(i), m == 1 ? 0 : -2});
  for (int i = 0; i < m; ++i) cfg.adjacency.emplace_back(i, (i + 1) % m);
  cfg.elliptic_self_intersection = -m;
  return cfg;
}

bool FixedLocus::fixed_point_free() const {
  return nodes.empty() && fixed_components.empty() && !e_pointwise_fixed;
}

std::int64_t FixedLocus::euler_number(int m) const {
  if (fixed_point_free()) return 0;
  const std::set<int> fixed(fixed_components.begin(), fixed_components.end());
  std::int64_t e = 2 * static_cast<std::int64_t>(fixed.size());
  for (const auto& n : nodes) {
    const int on = static_cast<int>(fixed.count(n.index)) +
                   static_cast<int>(fixed.count((n.index + 1) % m));
    if (on == 2) e -= 1;
    if (on == 0) e += 1;
  }
  return e;
}

FixedLocus fixed_locus(const SurfaceAut& g, std::int64_t order) {
  const std::int64_t ord = element_order(g);
  if (ord == 0) throw DomainError("fixed_locus: " + g.to_string() + " has infinite order");
  if (ord != order)
    throw DomainError("fixed_locus: element has order " + std::to_string(ord) + ", not " +
                      std::to_string(order));
  FixedLocus out;
  out.order = ord;
  out.rotation = cycle_rotation(g);
  out.e_translation = induced_on_E(g);
  if (out.rotation != 0) return out;

  const CoverAut& r = g.representative();
  const std::int64_t n = r.u.context()->modulus();
  auto weight = [&](const Scalar& c) {
    const std::int64_t step = n / ord;
    if (c.torsion_exponent() % step != 0)
      throw DomainError("fixed_locus: coefficient outside mu_order");
    return c.torsion_exponent() / step;
  };
  for (int i = 0; i < g.m(); ++i) {
    const ChartMap f = realize(r, Chart::u(i), g.beta());
    out.nodes.push_back({i, weight(f.coefficients[0]), weight(f.coefficients[1])});
    // C(i) = {y_i = 0} is parametrized by x_i.
    if (f.coefficients[0].is_one()) out.fixed_components.push_back(i);
  }
  out.e_pointwise_fixed = out.e_translation->is_one();
  return out;
}

FixedLocus fixed_locus(const SurfaceAut& g) { return fixed_locus(g, element_order(g)); }

std::pair<std::int64_t, std::int64_t> HGroup::coset_of(const SurfaceAut& g) const {
  const CoverAut& r = g.representative();
  const std::int64_t m = surface.m;
  if (!r.u.is_torsion() || !r.u.pow(m).is_one())
    throw DomainError("coset_of: " + g.to_string() + " is not in H");
  return {r.shift, r.u.torsion_exponent() / (surface.ctx->modulus() / m)};
}

HGroup build_H(const Surface& s) {
  const int m = s.m;
  const Scalar one = Scalar::one(s.ctx);
  const Scalar t = Scalar::generator(s.ctx, "t");
  HGroup h{s,
           SurfaceAut::from_cover(s.nu(), s),
           SurfaceAut::from_cover(CoverAut::torus(s.rho(), one), s),
           SurfaceAut::from_cover(CoverAut::torus(one, t), s),
           {},
           {}};
  for (int j = 0; j < m; ++j)
    for (int a = 0; a < m; ++a) h.cosets.push_back(compose(power(h.nu, j), power(h.rho, a)));

  const SurfaceAut e = SurfaceAut::identity(s);
  h.checks.push_back({"nu descends and has order m", "Lemma 2.1",
                      element_order(h.nu) == m,
                      "order " + std::to_string(element_order(h.nu))});
  h.checks.push_back({"(rho,1) has order m", "Lemma 2.1", element_order(h.rho) == m,
                      "order " + std::to_string(element_order(h.rho))});
  bool meets = false;
  for (int k = 1; k < m; ++k) meets = meets || cycle_rotation(power(h.nu, k)) == 0;
  h.checks.push_back({"<nu> meets Aut_1 trivially", "Lemma 2.1", !meets,
                      "nu^k rotates the cycle for 0 < k < m"});
  const SurfaceAut twisted =
      SurfaceAut::from_cover(CoverAut::torus(s.rho(), s.rho()), s);
  h.checks.push_back({"nu (rho,1) nu^-1 = (rho, rho)", "Lemma 2.1",
                      compose(h.nu, compose(h.rho, inverse(h.nu))) == twisted,
                      twisted.to_string()});

  bool closed = true;
  std::string bad;
  for (const auto& x : h.cosets) {
    for (const auto& y : h.cosets) {
      try {
        const auto c = h.coset_of(compose(x, y));
        if (c.first < 0 || c.first >= m) throw DomainError("shift");
      } catch (const DomainError&) {
        closed = false;
        bad = x.to_string() + " * " + y.to_string();
      }
    }
    try {
      h.coset_of(inverse(x));
    } catch (const DomainError&) {
      closed = false;
      bad = "inverse of " + x.to_string();
    }
  }
  h.checks.push_back({"H is closed under composition and inverse", "Lemma 2.1", closed,
                      closed ? std::to_string(m * m) + " cosets mod C*" : bad});
  h.checks.push_back({"C*(t) descends with trivial rotation", "Lemma 2.1",
                      cycle_rotation(h.torus) == 0 && element_order(h.torus) == 0 &&
                          compose(h.torus, inverse(h.torus)) == e,
                      h.torus.to_string()});
  return h;
}

namespace {

// nu^j (rho^a, rho^b * tau)
SurfaceAut element(const HGroup& h, std::int64_t j, std::int64_t a, std::int64_t b,
                   const Scalar& tau) {
  const Surface& s = h.surface;
  return compose(h.cosets[j * s.m + a],
                 SurfaceAut::from_cover(
                     CoverAut::torus(Scalar::one(s.ctx), s.rho().pow(b) * tau), s));
}

SurfaceAut torus_elem(const Surface& s, const Scalar& u, const Scalar& v) {
  return SurfaceAut::from_cover(CoverAut::torus(u, v), s);
}

std::vector<CoverAut> cyclic_subgroup(const SurfaceAut& g) {
  std::vector<CoverAut> out;
  const std::int64_t ord = element_order(g);
  for (std::int64_t k = 0; k < ord; ++k) out.push_back(power(g, k).representative());
  return out;
}

bool same_subgroup(const std::vector<CoverAut>& a, const std::vector<CoverAut>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

}  // namespace

CheckList verify_theorem_1_1(const Surface& s) {
  const HGroup h = build_H(s);
  const int m = s.m;
  const Scalar t = Scalar::generator(s.ctx, "t");
  const Scalar s2 = Scalar::generator(s.ctx, "s");
  CheckList out = h.checks;

  {
    bool torus_central = true;
    for (const auto& g : h.cosets) torus_central = torus_central && commute(g, h.torus);
    int central = 0;
    bool only_torus = true;
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const SurfaceAut g = element(h, j, a, b, t);
          const bool c = commute(g, h.nu) && commute(g, h.rho) && commute(g, h.torus);
          if (c) ++central;
          if (c != (j == 0 && a == 0)) only_torus = false;
        }
    out.push_back({"C*(t) is central in H", "Thm 1.1(1)", torus_central,
                   "commutes with all m^2 coset representatives"});
    out.push_back({"center of H is exactly C*(t)", "Thm 1.1(1)", only_torus && central == m,
                   std::to_string(central) + " central elements among " +
                       std::to_string(m * m * m) + " with symbolic t"});
  }

  {
    bool rot0_is_torus = true, commutative = true, hom = true;
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a) {
        const SurfaceAut g = element(h, j, a, 0, t);
        const bool rot0 = cycle_rotation(g) == 0;
        if (rot0 != (j == 0) || (rot0 && g.representative().shift != 0)) rot0_is_torus = false;
      }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int a2 = 0; a2 < m; ++a2)
          for (int b2 = 0; b2 < m; ++b2) {
            const SurfaceAut x = torus_elem(s, s.rho().pow(a), s.rho().pow(b) * t);
            const SurfaceAut y = torus_elem(s, s.rho().pow(a2), s.rho().pow(b2) * s2);
            commutative = commutative && commute(x, y);
            hom = hom && compose(x, y) == torus_elem(s, s.rho().pow(a + a2),
                                                     s.rho().pow(b + b2) * t * s2);
          }
    bool injective = true;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if ((torus_elem(s, s.rho().pow(a), s.rho().pow(b)) == SurfaceAut::identity(s)) !=
            (a == 0 && b == 0))
          injective = false;
    out.push_back({"Aut_1 within H is the torus part (rho^a, v)", "Thm 1.1(2)", rot0_is_torus,
                   "rotation 0 exactly for shift 0"});
    out.push_back({"Aut_1 is commutative", "Thm 1.1(2)", commutative,
                   "exhaustive over mu_m x mu_m with symbolic t, s"});
    out.push_back({"(a, v) -> (rho^a, v) is an isomorphism mu_m x C* -> Aut_1",
                   "Thm 1.1(2)", hom && injective, "homomorphism and trivial kernel"});
  }

  {
    bool twist = true;
    std::string detail = "(t,s) in C* x mu_m is the torus element (s, t)";
    for (int a = 0; a < m; ++a) {
      const SurfaceAut x = torus_elem(s, s.rho().pow(a), t);
      const SurfaceAut y = compose(h.nu, compose(x, inverse(h.nu)));
      if (y != torus_elem(s, s.rho().pow(a), s.rho().pow(a) * t)) {
        twist = false;
        detail = "a=" + std::to_string(a) + ": " + y.to_string();
      }
    }
    bool unique = true;
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& g : h.cosets) unique = unique && seen.insert(h.coset_of(g)).second;
    out.push_back({"nu (rho^a, t) nu^-1 = (rho^a, rho^a t)", "Thm 1.1(3)", twist, detail});
    out.push_back({"H = <nu> x| Aut_1 with <nu> of order m", "Thm 1.1(3)",
                   unique && seen.size() == static_cast<std::size_t>(m * m) &&
                       power(h.nu, m) == SurfaceAut::identity(s),
                   "every element is nu^j (rho^a, v) uniquely"});
  }
  return out;
}

CheckList verify_corollary_1_2(const Surface& s) {
  const HGroup h = build_H(s);
  const int m = s.m;
  const Scalar one = Scalar::one(s.ctx);
  CheckList out;

  {
    // Order-m elements of Aut_1 have v^m = 1, so mu_m x mu_m is exhaustive.
    std::vector<std::vector<CoverAut>> found;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const SurfaceAut x = torus_elem(s, s.rho().pow(a), s.rho().pow(b));
        if (element_order(x) != m) continue;
        bool trivial = true;
        for (const auto& p : cyclic_subgroup(x))
          if (p.u.is_one() && !p.v.is_one()) trivial = false;
        if (!trivial) continue;
        const auto sub = cyclic_subgroup(x);
        bool dup = false;
        for (const auto& f : found) dup = dup || same_subgroup(f, sub);
        if (!dup) found.push_back(sub);
      }
    bool are_mj = found.size() == static_cast<std::size_t>(m);
    for (int j = 0; j < m && are_mj; ++j) {
      const auto mj = cyclic_subgroup(torus_elem(s, s.rho(), s.rho().pow(j)));
      bool present = false;
      for (const auto& f : found) present = present || same_subgroup(f, mj);
      are_mj = are_mj && present;
    }
    out.push_back({"exactly m cyclic subgroups of order m in Aut_1 meet C* trivially",
                   "Cor 1.2(1)", are_mj,
                   std::to_string(found.size()) + " subgroups, equal to M_j = <(rho, rho^j)>"});
    bool conj = true;
    for (int j = 0; j < m; ++j) {
      const SurfaceAut g = torus_elem(s, s.rho(), s.rho().pow(j));
      const SurfaceAut c = compose(h.nu, compose(g, inverse(h.nu)));
      conj = conj && c == torus_elem(s, s.rho(), s.rho().pow((j + 1) % m));
    }
    out.push_back({"nu M_j nu^-1 = M_{j+1}", "Cor 1.2(1)", conj,
                   "generator (rho, rho^j) goes to (rho, rho^(j+1))"});
  }

  {
    bool table = true, abelian = true;
    for (int j1 = 0; j1 < m; ++j1)
      for (int a1 = 0; a1 < m; ++a1)
        for (int j2 = 0; j2 < m; ++j2)
          for (int a2 = 0; a2 < m; ++a2) {
            const SurfaceAut& x = h.cosets[j1 * m + a1];
            const SurfaceAut& y = h.cosets[j2 * m + a2];
            const auto xy = h.coset_of(compose(x, y));
            table = table && xy == std::pair<std::int64_t, std::int64_t>{(j1 + j2) % m,
                                                                         (a1 + a2) % m};
            abelian = abelian && xy == h.coset_of(compose(y, x));
          }
    out.push_back({"H/C* Cayley table equals mu_m x mu_m", "Cor 1.2(2)", table && abelian,
                   std::to_string(m * m) + " elements, exhaustive"});
  }

  {
    bool iso = true, free = true;
    std::vector<std::vector<CoverAut>> subs;
    for (int i = 0; i < m; ++i) {
      const SurfaceAut g = SurfaceAut::from_cover(nu_root(m, s.theta, i), s);
      iso = iso && element_order(g) == m;
      std::set<std::int64_t> rotations;
      for (int k = 0; k < m; ++k) {
        const SurfaceAut gk = power(g, k);
        rotations.insert(cycle_rotation(gk));
        if (k > 0) free = free && fixed_locus(gk, element_order(gk)).fixed_point_free();
      }
      iso = iso && rotations.size() == static_cast<std::size_t>(m) &&
            cycle_rotation(g) == 1 % m;
      const auto sub = cyclic_subgroup(g);
      for (const auto& f : subs) iso = iso && !same_subgroup(f, sub);
      subs.push_back(sub);
    }
    out.push_back({"H_beta' = <nu_beta'> maps isomorphically onto H/Aut_1", "Cor 1.2(3)",
                   iso, std::to_string(subs.size()) + " distinct subgroups of order m"});
    out.push_back({"each H_beta' acts freely", "Example 1", free,
                   "all nontrivial powers fixed-point free"});

    // All complements: rotation-1 elements (1; rho^a, v) of order m.
    int complements = 0;
    std::set<std::int64_t> classes;
    bool one_per_class = true;
    const Scalar base_v = s.nu().v;
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < 2 * m; ++c) {
        const Scalar half = Scalar::root_of_unity(s.ctx, 2 * m, -a * (m - 1));
        const CoverAut x{1, s.rho().pow(a), half * base_v * Scalar::root_of_unity(s.ctx, 2 * m, c)};
        if (!descends(x, s)) continue;
        const SurfaceAut g = SurfaceAut::from_cover(x, s);
        if (element_order(g) != m) continue;
        ++complements;
        classes.insert(a);
      }
    for (std::int64_t a : classes) {
      int hits = 0;
      for (int i = 0; i < m; ++i)
        if (nu_root(m, s.theta, i).u == s.rho().pow(a)) ++hits;
      one_per_class = one_per_class && hits == 1;
    }
    // Conjugation fixes u and multiplies v by mu_m, so classes are labelled by u.
    bool conj_preserves_u = true;
    for (int a = 0; a < m; ++a) {
      const SurfaceAut g = SurfaceAut::from_cover(nu_root(m, s.theta, a), s);
      for (int j = 0; j < m; ++j)
        for (int b = 0; b < m; ++b) {
          const SurfaceAut x = element(h, j, b, 0, one);
          const SurfaceAut c = compose(x, compose(g, inverse(x)));
          conj_preserves_u = conj_preserves_u && c.representative().u == g.representative().u;
        }
    }
    out.push_back({"complements of Aut_1 form m conjugacy classes, one H_beta' each",
                   "Cor 1.2(3)",
                   complements == m * m && classes.size() == static_cast<std::size_t>(m) &&
                       one_per_class && conj_preserves_u,
                   std::to_string(complements) + " complements in " +
                       std::to_string(classes.size()) + " classes"});
  }
  return out;
}

CheckList verify_remarks(const Surface& s) {
  const HGroup h = build_H(s);
  const int m = s.m;
  const Scalar t = Scalar::generator(s.ctx, "t");
  const Scalar free_s = Scalar::generator(s.ctx, "s");
  CheckList out;

  {
    const std::int64_t n = s.ctx->modulus();
    bool ok = !descends(CoverAut::torus(free_s, t), s);
    int count = 0;
    for (std::int64_t a = 0; a < n; ++a) {
      const Scalar u = Scalar::root_of_unity(s.ctx, n, a);
      const bool d = descends(CoverAut::torus(u, t), s);
      count += d;
      ok = ok && d == u.pow(m).is_one();
    }
    out.push_back({"Aut_1 is the commutant of gamma in the torus", "Remark 1",
                   ok && count == m,
                   std::to_string(count) + " of " + std::to_string(n) + " roots descend"});
  }

  {
    bool no_reflection = true, kernel = true;
    std::set<std::int64_t> image;
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a) {
        const Dihedral d = dihedral_image(element(h, j, a, 0, t));
        no_reflection = no_reflection && !d.reflection;
        kernel = kernel && ((d.rotation == 0) == (j == 0));
        image.insert(d.rotation);
      }
    out.push_back({"H -> D_m has kernel Aut_1 and image the rotations", "Remark 2",
                   kernel && image.size() == static_cast<std::size_t>(m), "no reflections"});
    out.push_back({"no element of H induces a reflection", "Remark 2", no_reflection,
                   "orientation of every induced cycle map is preserved"});
  }

  {
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      const SurfaceAut g = SurfaceAut::from_cover(nu_root(m, s.theta, i), s);
      ok = ok && std::gcd(cycle_rotation(g), static_cast<std::int64_t>(m)) == 1;
      for (int k = 1; k < m; ++k) ok = ok && fixed_locus(power(g, k)).fixed_point_free();
    }
    out.push_back({"H_beta' act freely and rotate the cycle", "Remark 3", ok,
                   std::to_string(m) + " subgroups"});
  }

  {
    bool ok = true;
    IntMatrix id(m + 1, std::vector<int>(m + 1, 0));
    for (int i = 0; i <= m; ++i) id[i][i] = 1;
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const SurfaceAut g = element(h, j, a, b, t);
          ok = ok && (h2_action(g) == id) == (cycle_rotation(g) == 0);
        }
    out.push_back({"Aut_1 is the kernel of the action on H_2", "Remark 4", ok,
                   "exhaustive over torsion parts"});
  }

  {
    bool ok = true;
    for (int j = 0; j < m; ++j)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) ok = ok && induces_translation(element(h, j, a, b, t));
    ok = ok && induces_translation(h.torus);
    out.push_back({"every element of H restricts to a translation of E", "Lemma 2.2", ok,
                   "E-chart map is w -> c w"});
  }
  return out;
}

CheckList verify_homomorphisms(const Surface& s) {
  const HGroup h = build_H(s);
  const int m = s.m;
  const Scalar t = Scalar::generator(s.ctx, "t");
  const Scalar s2 = Scalar::generator(s.ctx, "s");
  const Scalar alpha = s.alpha();

  std::vector<SurfaceAut> left, right;
  for (int j = 0; j < m; ++j)
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) left.push_back(element(h, j, a, b, t));
      right.push_back(element(h, j, a, 0, s2));
    }

  auto matmul_int = [](const IntMatrix& x, const IntMatrix& y) {
    const std::size_t n = x.size();
    IntMatrix r(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
  };

  bool rot = true, on_e = true, h2 = true;
  std::set<std::int64_t> image;
  for (const auto& x : left) {
    const std::int64_t rx = cycle_rotation(x);
    image.insert(dihedral_image(x).reflection ? -1 : rx);
    const Scalar ex = induced_on_E(x);
    const IntMatrix hx = h2_action(x);
    for (const auto& y : right) {
      const SurfaceAut xy = compose(x, y);
      rot = rot && cycle_rotation(xy) == floor_mod(rx + cycle_rotation(y), m);
      on_e = on_e && induced_on_E(xy) == normalize_mod(ex * induced_on_E(y), alpha);
      h2 = h2 && h2_action(xy) == matmul_int(hx, h2_action(y));
    }
  }
  const std::string scope = std::to_string(left.size()) + " x " +
                            std::to_string(right.size()) + " pairs, symbolic t and s";
  return {{"cycle_rotation is a homomorphism on H", "Remark 2", rot, scope},
          {"induced_on_E is a homomorphism on H", "Lemma 2.2", on_e, scope},
          {"h2_action is a homomorphism on H", "Remark 4", h2, scope},
          {"image of H in D_m is the rotation subgroup", "Remark 2",
           image.size() == static_cast<std::size_t>(m) && !image.count(-1),
           std::to_string(image.size()) + " rotations, no reflections"}};
}

}  // namespace inoue
