#include "inoue/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "inoue/error.hpp"

namespace inoue {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string str(const Rational& r) {
  return r.denominator() == 1 ? str(r.numerator())
                              : str(r.numerator()) + "/" + str(r.denominator());
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + str(v[i]);
  return out + ")";
}

std::string join(const std::vector<CycleCurve>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i].label + ":" + str(v[i].self_intersection);
  return out + ")";
}

// a x + b y = gcd(a, b) >= 0
std::int64_t bezout(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t x, y;
  if (bezout(floor_mod(a, n), n, x, y) != 1)
    throw DomainError("quotient: " + str(a) + " is not invertible mod " + str(n));
  return floor_mod(x, n);
}

// C_a . C_b on the cycle of S(m, alpha).
std::int64_t cycle_intersection(int m, std::int64_t a, std::int64_t b) {
  a = floor_mod(a, m);
  b = floor_mod(b, m);
  if (m == 1) return 0;
  if (m == 2) return a == b ? -2 : 2;
  if (a == b) return -2;
  return floor_mod(a - b, m) == 1 || floor_mod(b - a, m) == 1 ? 1 : 0;
}

// b^T M^{-1} c for the intersection matrix of a chain of curves with
// self-intersections -a_t, consecutive ones meeting once.
Rational chain_form(const std::vector<std::int64_t>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c) {
  const std::size_t r = a.size();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    m[i][i] = Rational(-a[i]);
    if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = Rational(1);
    m[i][r] = c[i];
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && m[piv][col].numerator() == 0) ++piv;
    if (piv == r) throw DomainError("quotient: singular chain matrix");
    std::swap(m[col], m[piv]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || m[i][col].numerator() == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t k = col; k <= r; ++k) m[i][k] -= f * m[col][k];
    }
  }
  Rational out(0);
  for (std::size_t i = 0; i < r; ++i) out += b[i] * (m[i][r] / m[i][i]);
  return out;
}

// Blow down (-1)-curves, first in cycle order, while at least two curves
// remain. In a cycle of length >= 3 a neighbour meets the curve once; in a
// 2-cycle the other curve meets it twice.
std::vector<CycleCurve> blow_down(std::vector<CycleCurve> cycle, std::vector<std::string>* removed) {
  while (cycle.size() >= 2) {
    std::size_t i = 0;
    while (i < cycle.size() && cycle[i].self_intersection != -1) ++i;
    if (i == cycle.size()) break;
    if (removed) removed->push_back(cycle[i].label);
    const std::size_t n = cycle.size();
    if (n == 2) {
      cycle[1 - i].self_intersection += DegreeRule::blow_down_increment(2);
    } else {
      cycle[(i + n - 1) % n].self_intersection += DegreeRule::blow_down_increment(1);
      cycle[(i + 1) % n].self_intersection += DegreeRule::blow_down_increment(1);
    }
    cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return cycle;
}

std::int64_t order_or_throw(const SurfaceAut& g) {
  const std::int64_t l = element_order(g);
  if (l == 0) throw DomainError("quotient: " + g.to_string() + " has infinite order");
  return l;
}

// Stabilizer data of <g>: P = gcd(rotation, m) curve orbits, K = <g^k0>.
struct Orbits {
  std::int64_t l, rotation, period, k0, stab_order;
};

Orbits orbits_of(const SurfaceAut& g) {
  const std::int64_t l = order_or_throw(g);
  const std::int64_t m = g.m();
  const std::int64_t r = cycle_rotation(g);
  const std::int64_t p = std::gcd(r, m);
  const std::int64_t k0 = m / p;
  if (l % k0 != 0) throw DomainError("quotient: rotation order does not divide the order");
  return {l, r, p, k0, l / k0};
}

}  // namespace

DegreeRule DegreeRule::classify(std::int64_t order, std::int64_t ramification) {
  if (order < 1 || ramification < 1 || order % ramification != 0)
    throw DomainError("degree rule: ramification must divide the order");
  DegreeRule r;
  r.order = order;
  r.ramification = ramification;
  r.tag = ramification == 1          ? Tag::Free
          : ramification == order    ? Tag::PointwiseFixed
                                     : Tag::PartiallyRamified;
  return r;
}

Rational DegreeRule::image(const Rational& orbit_square) const {
  return Rational(ramification * ramification) * orbit_square / Rational(order);
}

Rational DegreeRule::image_intersection(std::int64_t order, std::int64_t e1, std::int64_t e2,
                                        const Rational& orbit_product) {
  return Rational(e1 * e2) * orbit_product / Rational(order);
}

std::string DegreeRule::tag_name() const {
  switch (tag) {
    case Tag::PointwiseFixed: return "pointwise fixed";
    case Tag::Free: return "free";
    case Tag::PartiallyRamified: return "ramified of index " + str(ramification);
  }
  return "";
}

std::vector<std::string> QuotientReport::singularity_summary() const {
  std::vector<std::string> order;
  std::map<std::string, int> count;
  for (const auto& s : singularities) {
    if (count[s.type()]++ == 0) order.push_back(s.type());
  }
  std::vector<std::string> out;
  for (const auto& t : order) out.push_back(std::to_string(count[t]) + "x" + t);
  return out;
}

Scalar quotient_translation(const Scalar& alpha, const Scalar& c) {
  const std::int64_t ea = alpha.free_exponent("delta");
  if (ea == 0) throw DomainError("quotient_translation: alpha must have infinite order");
  const auto& gens = alpha.context()->generators();
  for (const auto& name : gens)
    if (name != "delta" && (alpha.free_exponent(name) != 0 || c.free_exponent(name) != 0))
      throw DomainError("quotient_translation: only delta-monomials are translations of E");
  // minimal k > 0 with c^k = alpha^q
  const std::int64_t limit = 2 * alpha.context()->modulus() * std::abs(ea) + 2;
  std::int64_t k = 1, q = 0;
  for (; k <= limit; ++k) {
    const std::int64_t e = k * c.free_exponent("delta");
    if (e % ea != 0) continue;
    q = e / ea;
    if (c.pow(k) == alpha.pow(q)) break;
  }
  if (k > limit) throw DomainError("quotient_translation: <alpha, c> is not discrete of rank 1");
  // x k/g + y q/g = 1; theta generates Lambda modulo torsion of order g.
  const std::int64_t g = std::gcd(k, q);
  std::int64_t x, y;
  bezout(k / g, q / g, x, y);
  const Scalar theta = alpha.pow(x) * c.pow(y);
  Scalar out = theta.pow(g);
  if (out.free_exponent("delta") < 0) out = out.inverse();
  return out;
}

std::string identify_surface(int m_prime, const Scalar& cover_translation) {
  if (m_prime < 1) throw DomainError("identify_surface: m' must be positive");
  const Scalar c = cover_translation.free_exponent("delta") < 0 ? cover_translation.inverse()
                                                                : cover_translation;
  return surface_label(m_prime, c);
}

Surface extend_torsion(const Surface& s, std::int64_t order) {
  if (order < 1) throw DomainError("extend_torsion: order must be positive");
  const std::int64_t n = s.ctx->modulus();
  if (n % order == 0) return s;
  const std::int64_t n2 = std::lcm(n, order);
  const ContextPtr ctx = ScalarContext::make(s.ctx->m(), n2, s.ctx->generators());
  Scalar theta = Scalar::root_of_unity(ctx, n, s.theta.torsion_exponent());
  for (const auto& name : ctx->generators())
    theta *= Scalar::generator(ctx, name).pow(s.theta.free_exponent(name));
  return Surface::with_theta(s.m, theta);
}

RouteResult degree_route(const SurfaceAut& g, const Surface& s) {
  const Orbits o = orbits_of(g);
  const int m = s.m;
  const std::int64_t p = o.period, lk = o.stab_order;
  const SurfaceAut h = power(g, o.k0);

  std::vector<FixedLocus> stab;
  for (std::int64_t c = 0; c < lk; ++c) stab.push_back(fixed_locus(power(h, c)));
  std::vector<std::int64_t> e(p, 0);
  for (const auto& f : stab)
    for (int i : f.fixed_components)
      if (i < p) ++e[i];

  RouteResult out;
  if (lk > 1) {
    const FixedLocus fh = fixed_locus(h, lk);
    for (std::int64_t k = 0; k < p; ++k) {
      const std::int64_t w1 = floor_mod(fh.nodes[k].weight_x, lk);
      const std::int64_t w2 = floor_mod(fh.nodes[k].weight_y, lk);
      const std::int64_t ex = std::gcd(w1, lk), ey = std::gcd(w2, lk);
      if (ex != e[k] || ey != e[(k + 1) % p])
        throw DomainError("degree route: local weights disagree with the ramification of C_" +
                          str(k));
      if (lk % (ex * ey) != 0) throw DomainError("degree route: node stabilizer not cyclic");
      const std::int64_t d = lk / (ex * ey);
      if (d == 1) continue;
      const std::int64_t q = floor_mod((w2 / ey) * inverse_mod(w1 / ex, d), d);
      out.singularities.push_back({k, d, q, hj_chain(d, q)});
    }
  }

  std::vector<Rational> image(p);
  for (std::int64_t i = 0; i < p; ++i) {
    Rational o2(0);
    for (std::int64_t a = i; a < m; a += p)
      for (std::int64_t b = i; b < m; b += p) o2 += Rational(cycle_intersection(m, a, b));
    image[i] = DegreeRule::classify(o.l, e[i]).image(o2);
  }
  for (const auto& sg : out.singularities) {
    const std::size_t r = sg.chain.size();
    for (std::int64_t i = 0; i < p; ++i) {
      std::vector<Rational> b(r, Rational(0));
      if (sg.node == i) b[0] += 1;
      if ((sg.node + 1) % p == i) b[r - 1] += 1;
      image[i] += chain_form(sg.chain, b, b);
    }
  }

  auto sing_at = [&](std::int64_t k) -> const QuotientSingularity* {
    for (const auto& sg : out.singularities)
      if (sg.node == k) return &sg;
    return nullptr;
  };
  for (std::int64_t i = 0; i < p; ++i) {
    if (image[i].denominator() != 1)
      throw DomainError("degree route: C_" + str(i) + " has non-integral self-intersection " +
                        str(image[i]));
    out.resolved.push_back({"C" + str(i), image[i].numerator()});
    if (const QuotientSingularity* sg = sing_at(i))
      for (std::size_t t = 0; t < sg->chain.size(); ++t)
        out.resolved.push_back({"E" + str(i) + "." + str(static_cast<std::int64_t>(t + 1)),
                                -sg->chain[t]});
  }
  out.contracted = blow_down(out.resolved, &out.contractions);
  return out;
}

RouteResult fan_route(const SurfaceAut& g, const Surface& s) {
  const Orbits o = orbits_of(g);
  const int m = s.m;
  const CoverAut& rep = g.representative();
  const std::int64_t r = rep.shift;
  std::int64_t x, y;
  const std::int64_t d = bezout(r, m, x, y);

  const CoverAut z = compose(power(rep, o.k0), power(s.gamma(), -(o.k0 * r) / m));
  if (z.shift != 0 || !z.u.is_torsion() || !z.v.is_torsion())
    throw DomainError("fan route: stabilizer of C_0 is not a finite torus subgroup");
  const std::int64_t n = s.ctx->modulus();
  const std::int64_t ord = std::lcm(z.u.order(), z.v.order());
  const Lattice lattice =
      ord == 1 ? Lattice::standard()
               : Lattice::refined(ord, z.u.torsion_exponent() / (n / ord),
                                  z.v.torsion_exponent() / (n / ord));
  const FanRoute f = fan_quotient(lattice, d, {{{1, 0}, {d, 1}}});

  RouteResult out;
  for (const auto& sg : f.singularities) out.singularities.push_back({sg.node, sg.d, sg.q, sg.chain});
  auto cycle = [](const PeriodicFan& fan) {
    std::vector<CycleCurve> c;
    const auto self = fan.self_intersections();
    for (std::size_t i = 0; i < fan.rays.size(); ++i) c.push_back({fan.rays[i].label, self[i]});
    return c;
  };
  out.resolved = cycle(f.resolved);
  out.contracted = cycle(f.contracted);
  out.contractions = f.contractions;
  return out;
}

QuotientReport quotient_by_generator(const SurfaceAut& g, const Surface& s,
                                     const std::string& kind) {
  const Orbits o = orbits_of(g);
  const int m = s.m;
  QuotientReport rep;
  rep.kind = kind;
  rep.input_label = s.label();
  rep.order = o.l;
  rep.subgroup = "<" + g.to_string() + ">, order " + str(o.l);

  const SurfaceAut h = power(g, o.k0);
  std::int64_t e_elliptic = 0;
  std::vector<std::int64_t> e(o.period, 0);
  for (std::int64_t c = 0; c < o.stab_order; ++c) {
    const FixedLocus f = fixed_locus(power(h, c));
    if (f.e_pointwise_fixed) ++e_elliptic;
    for (int i : f.fixed_components)
      if (i < o.period) ++e[i];
  }
  if (o.stab_order > 1) {
    const FixedLocus fh = fixed_locus(h, o.stab_order);
    rep.fixed_components = fh.fixed_components;
    rep.fixed_nodes = fh.nodes;
    rep.e_pointwise_fixed = fh.e_pointwise_fixed;
  }
  rep.e_translation = induced_on_E(g).to_string();

  const RouteResult deg = degree_route(g, s);
  const RouteResult fan = fan_route(g, s);
  rep.singularities = deg.singularities;
  rep.resolved_cycle = deg.resolved;
  rep.contractions = deg.contractions;
  rep.final_cycle = deg.contracted;

  const Rational ee = DegreeRule::classify(o.l, e_elliptic).image(Rational(-m));
  if (ee.denominator() != 1)
    throw DomainError("quotient: elliptic image has non-integral self-intersection");
  rep.elliptic_self_int = ee.numerator();
  for (std::int64_t i = 0; i < o.period; ++i) rep.ramification.push_back({"C" + str(i), e[i]});
  rep.ramification.push_back({"E", e_elliptic});

  rep.m_prime = static_cast<int>(rep.final_cycle.size());
  rep.alpha_prime = quotient_translation(s.alpha(), induced_on_E(g));
  rep.result_label = identify_surface(rep.m_prime, *rep.alpha_prime);

  auto sing_text = [](const std::vector<QuotientSingularity>& v) {
    std::string t = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      t += (i ? " " : "") + str(v[i].node) + ":" + singularity_label(v[i].d, v[i].q) +
           join(v[i].chain);
    return t + "]";
  };
  rep.checks.push_back({"routes agree on singular points", "Sec 4 two routes",
                        deg.singularities == fan.singularities,
                        "degree " + sing_text(deg.singularities) + " fan " +
                            sing_text(fan.singularities)});
  rep.checks.push_back({"routes agree on the resolved cycle", "Sec 4 two routes",
                        deg.resolved == fan.resolved,
                        "degree " + join(deg.resolved) + " fan " + join(fan.resolved)});
  rep.checks.push_back({"routes agree on blow-downs and the final cycle", "Sec 4 two routes",
                        deg.contracted == fan.contracted && deg.contractions == fan.contractions,
                        "degree " + join(deg.contracted) + " fan " + join(fan.contracted)});

  std::int64_t fixed_sum = 0;
  for (std::int64_t k = 0; k < o.l; ++k) fixed_sum += fixed_locus(power(g, k)).euler_number(m);
  std::int64_t chains = 0;
  for (const auto& sg : rep.singularities) chains += static_cast<std::int64_t>(sg.chain.size());
  const bool divisible = fixed_sum % o.l == 0;
  const std::int64_t e_quot = fixed_sum / o.l;
  const std::int64_t e_final = e_quot + chains - static_cast<std::int64_t>(rep.contractions.size());
  rep.checks.push_back(
      {"Euler number conservation", "Sec 4 Euler",
       divisible && fixed_locus(SurfaceAut::identity(s)).euler_number(m) == m &&
           e_final == rep.m_prime,
       "sum e(Fix) = " + str(fixed_sum) + " = " + str(o.l) + " e(S'), e(S') = " + str(e_quot) +
           ", +" + str(chains) + " exceptional, -" + str(static_cast<std::int64_t>(rep.contractions.size())) +
           " blow-downs = " + str(e_final) + ", m' = " + str(rep.m_prime)});

  bool minimal = true;
  for (const auto& c : rep.final_cycle) {
    const std::int64_t want = rep.m_prime == 1 ? 0 : -2;
    minimal = minimal && c.self_intersection == want;
  }
  rep.checks.push_back({"minimal model has an m'-cycle with E^2 = -m'", "Example 2 minimality",
                        minimal && rep.elliptic_self_int == -rep.m_prime,
                        "E'^2 = " + str(rep.elliptic_self_int) + ", final cycle " +
                            join(rep.final_cycle)});
  return rep;
}

QuotientReport quotient_free_cyclic(const Surface& s, const Scalar& beta_prime) {
  const int m = s.m;
  int root = -1;
  for (int i = 0; i < m && root < 0; ++i)
    if (Scalar::root_of_unity(s.ctx, m, i) * s.beta() == beta_prime) root = i;
  if (root < 0 || beta_prime.pow(m) != s.alpha())
    throw DomainError("quotient_free_cyclic: " + beta_prime.to_string() +
                      " is not an m-th root of " + s.alpha().to_string());
  const SurfaceAut g = SurfaceAut::from_cover(nu_root(m, s.theta, root), s);
  QuotientReport rep = quotient_by_generator(g, s, "free");
  bool unramified = rep.singularities.empty();
  for (const auto& r : rep.ramification) unramified = unramified && r.index == 1;
  rep.checks.push_back({"unramified quotient", "Example 1", unramified,
                        str(static_cast<std::int64_t>(rep.singularities.size())) +
                            " singular points"});
  rep.checks.push_back({"cover datum C* -> C*/<beta'> with E^2 = -1", "Lemma 4.1",
                        rep.m_prime == 1 && rep.elliptic_self_int == -1 &&
                            rep.alpha_prime == beta_prime,
                        "alpha' = " + rep.alpha_prime->to_string()});
  return rep;
}

QuotientReport quotient_by_torus_cyclic(const Surface& s0, std::int64_t l) {
  if (l < 1) throw DomainError("quotient_by_torus_cyclic: l must be at least 1");
  const Surface s = extend_torsion(s0, l);
  const int m = s.m;
  const SurfaceAut g = SurfaceAut::from_cover(
      CoverAut::torus(Scalar::one(s.ctx), Scalar::root_of_unity(s.ctx, l)), s);
  QuotientReport rep = quotient_by_generator(g, s, "torus");
  if (l == 1) {
    rep.notes.push_back("trivial subgroup: identity quotient");
    return rep;
  }
  rep.notes.push_back("the subgroup is generated by (1, zeta_l) and has order l; "
                      "a statement of order m for it is read as a misprint");
  bool all_a = static_cast<std::int64_t>(rep.singularities.size()) == m;
  for (const auto& sg : rep.singularities) all_a = all_a && sg.d == l && sg.q == l - 1;
  rep.checks.push_back({"m singular points of type A_{l-1} at the nodes", "Example 2",
                        all_a, "singular points " + str(static_cast<std::int64_t>(rep.singularities.size()))});
  bool minus_two = true;
  for (const auto& c : rep.resolved_cycle) minus_two = minus_two && c.self_intersection == (m * l == 1 ? 0 : -2);
  rep.checks.push_back({"resolved cycle of ml (-2)-curves, already minimal", "Example 2",
                        static_cast<std::int64_t>(rep.resolved_cycle.size()) == m * l &&
                            minus_two && rep.contractions.empty(),
                        join(rep.resolved_cycle)});
  rep.checks.push_back({"E pointwise fixed, E'^2 = -lm", "Example 2",
                        rep.e_pointwise_fixed && rep.elliptic_self_int == -l * m,
                        "E'^2 = " + str(rep.elliptic_self_int)});
  rep.checks.push_back({"alpha' = alpha", "Example 2", rep.alpha_prime == s.alpha(),
                        rep.result_label});
  return rep;
}

QuotientReport quotient_by_mixed_cyclic(const Surface& s, std::int64_t j, std::int64_t l) {
  const int m = s.m;
  if (l < 1 || m % l != 0)
    throw DomainError("quotient_by_mixed_cyclic: l = " + str(l) + " does not divide m = " + str(m));
  if (j < 0 || j >= m) throw DomainError("quotient_by_mixed_cyclic: need 0 <= j < m");
  const SurfaceAut gj = SurfaceAut::from_cover(CoverAut::torus(s.rho(), s.rho().pow(j)), s);
  const SurfaceAut g = power(gj, m / l);
  QuotientReport rep = quotient_by_generator(g, s, "mixed");
  const std::int64_t n = m / l;

  std::vector<int> expected;
  for (int i = 0; i < m; ++i)
    if (floor_mod(i - j, l) == 0) expected.push_back(i);
  rep.checks.push_back({"pointwise fixed components are C_i, i = j mod l", "eq (bb)",
                        l == 1 || rep.fixed_components == expected,
                        std::to_string(rep.fixed_components.size()) + " fixed components"});
  const Scalar c = induced_on_E(g);
  rep.checks.push_back({"E unramified, translated by an element of order l", "eq (bb)",
                        c.order() == l && (l == 1 || !rep.e_pointwise_fixed),
                        "translation " + c.to_string()});
  std::vector<std::string> kept;
  for (const auto& cv : rep.final_cycle) kept.push_back(cv.label);
  std::vector<std::string> want;
  for (int i : expected) want.push_back("C" + str(i));
  rep.checks.push_back({"blow-downs remove everything between fixed components", "Prop 4.2",
                        l == 1 || kept == want, str(static_cast<std::int64_t>(rep.contractions.size())) +
                                                    " blow-downs"});
  rep.checks.push_back({"result S(n, alpha^l)", "Prop 4.2",
                        rep.m_prime == n && rep.alpha_prime == s.alpha().pow(l),
                        rep.result_label});
  return rep;
}

QuotientReport quotient_involution(const Surface& s) {
  const int m = s.m;
  if (m % 2 != 0) throw DomainError("quotient_involution: m must be even");
  const int n = m / 2;
  const Scalar minus = Scalar::root_of_unity(s.ctx, 2);
  const Scalar one = Scalar::one(s.ctx);
  const CoverAut iota = CoverAut::torus(minus, one);
  bool chart_form = true;
  for (int k = -chart_window(m); k <= chart_window(m); ++k) {
    const ChartMap f = realize(iota, Chart::u(k), s.beta());
    chart_form = chart_form && f.exponents == kIdentityMatrix &&
                 f.coefficients[0] == minus.pow(k) && f.coefficients[1] == minus.pow(k + 1);
  }
  const ChartMap fv = realize(iota, Chart::v(), s.beta());
  chart_form = chart_form && fv.exponents == kIdentityMatrix && fv.coefficients[0] == minus &&
               fv.coefficients[1] == one;
  const SurfaceAut g = SurfaceAut::from_cover(iota, s);
  const SurfaceAut g0 = SurfaceAut::from_cover(CoverAut::torus(s.rho(), one), s);

  QuotientReport rep = quotient_by_generator(g, s, "involution");
  rep.notes.push_back("with C_1, ..., C_m numbered so that C_{k+1} is the image of C(k), the "
                      "fixed components C(0), C(2), ... are the odd-numbered ones");
  rep.checks.push_back({"involution acts as ((-1)^k x, (-1)^(k+1) y) and (-w, x)", "eq (iv)",
                        chart_form && power(g0, n) == g, g.to_string() + " = g_0^n"});

  bool alternating = rep.singularities.empty() && static_cast<int>(rep.resolved_cycle.size()) == m;
  for (int i = 0; alternating && i < m; ++i)
    alternating = rep.resolved_cycle[i].self_intersection == (i % 2 == 0 ? -4 : -1);
  rep.checks.push_back({"smooth quotient with images -4, -1 alternating", "Example 4",
                        alternating, join(rep.resolved_cycle)});
  rep.checks.push_back({"n blow-downs, E'^2 = -n, result S(n, alpha^2)", "Example 4",
                        static_cast<int>(rep.contractions.size()) == n &&
                            rep.elliptic_self_int == -n && rep.m_prime == n &&
                            rep.alpha_prime == s.alpha().pow(2),
                        rep.result_label});

  const QuotientReport mixed = quotient_by_mixed_cyclic(s, 0, 2);
  const QuotientReport mixed1 = quotient_by_mixed_cyclic(s, 1, 2);
  rep.checks.push_back({"agrees with the order-2 subgroup of M_j", "Example 4",
                        mixed.resolved_cycle == rep.resolved_cycle &&
                            mixed.final_cycle == rep.final_cycle &&
                            mixed.result_label == rep.result_label &&
                            mixed1.result_label == rep.result_label,
                        "M_0: " + mixed.result_label + ", M_1: " + mixed1.result_label});

  // Stein factorization: the non-fixed (-2)-curves C(1), C(3), ... go to n
  // ordinary double points; the rest is the double cover branched along
  // the images of the fixed curves.
  bool stein = true;
  std::vector<std::string> contracted, branch;
  for (int k = 0; k < m; ++k) (k % 2 ? contracted : branch).push_back("C" + str(k));
  stein = stein && rep.contractions == contracted;
  std::vector<std::string> kept;
  for (const auto& c : rep.final_cycle) kept.push_back(c.label);
  stein = stein && kept == branch;
  const CurveConfig cfg = curve_config(s);
  for (int k = 1; k < m; k += 2) stein = stein && cfg.components[k].self_intersection == -2;
  rep.checks.push_back({"Stein factorization: n double points, double cover branched along the cycle",
                        "diagram (cmd)", stein,
                        str(n) + " A_1 points from C(1), C(3), ...; branch curves " +
                            str(static_cast<std::int64_t>(branch.size()))});
  return rep;
}

namespace {

// x in <a>
bool in_cyclic(const Scalar& x, const Scalar& a) {
  const std::int64_t ea = a.free_exponent("delta");
  const std::int64_t ex = x.free_exponent("delta");
  if (ea == 0 || ex % ea != 0) return false;
  return x == a.pow(ex / ea);
}

}  // namespace

Surface branched_cover_base(int n, int l) {
  if (n < 1 || l < 2) throw DomainError("branched_cover_base: need n >= 1, l >= 2");
  const ContextPtr ctx = ScalarContext::make(n * l, 2LL * n * l * l);
  return Surface::with_theta(n, Scalar::delta(ctx).pow(static_cast<std::int64_t>(l) * l));
}

Surface branched_cover_surface(const Surface& base, std::int64_t l, std::int64_t root) {
  if (l < 2) throw DomainError("build_branched_cover: l must be at least 2");
  if (root < 0 || root >= l) throw DomainError("build_branched_cover: root choice outside 0..l-1");
  const std::int64_t n = base.m, l2 = l * l;
  const ContextPtr& ctx = base.ctx;
  if (ctx->modulus() % (2 * n * l2) != 0)
    throw DomainError("build_branched_cover: context lacks the 2nl^2-th roots of unity");
  for (const auto& name : ctx->generators())
    if (name != "delta" && base.theta.free_exponent(name) != 0)
      throw DomainError("build_branched_cover: theta must be a delta-monomial");
  const std::int64_t e = base.theta.free_exponent("delta"), t = base.theta.torsion_exponent();
  if (e % l2 != 0 || t % l2 != 0)
    throw DomainError("build_branched_cover: theta must be an l^2-th power in its context");
  const Scalar theta0 = Scalar::delta(ctx).pow(e / l2) *
                        Scalar::root_of_unity(ctx, ctx->modulus(), t / l2);
  return Surface::with_theta(static_cast<int>(n * l),
                             theta0 * Scalar::root_of_unity(ctx, 2 * n * l2, root));
}

QuotientReport build_branched_cover(const Surface& base, std::int64_t l, std::int64_t root) {
  const Surface cover = branched_cover_surface(base, l, root);
  const int n = base.m;
  const std::int64_t nl = n * l;
  QuotientReport rep;
  rep.kind = "cover";
  rep.input_label = base.label();
  rep.order = l;
  rep.subgroup = "cyclic cover of degree " + str(l) + " branched along the cycle, root " + str(root);

  // [C] in Pic_0 = C*: automorphy factor of the deck generator on f = x_k y_k, f = w.
  auto factor_ok = [&](const CoverAut& a, const Scalar& want) {
    bool ok = true;
    for (int k = -chart_window(n); k <= chart_window(n); ++k) {
      const ChartMap f = realize(a, Chart::u(k), base.beta());
      ok = ok && f.exponents[0][0] + f.exponents[1][0] == 1 &&
           f.exponents[0][1] + f.exponents[1][1] == 1 &&
           f.coefficients[0] * f.coefficients[1] == want;
    }
    const ChartMap v = realize(a, Chart::v(), base.beta());
    return ok && v.exponents[0] == std::array<std::int64_t, 2>{1, 0} && v.coefficients[0] == want;
  };
  rep.checks.push_back({"nu*f = beta f and gamma*f = alpha f for the cycle equation",
                        "Sec 4 line bundle",
                        factor_ok(base.nu(), base.beta()) && factor_ok(base.gamma(), base.alpha()),
                        "[C] = " + base.alpha().to_string() + " in Pic_0"});

  std::vector<Scalar> roots;
  bool roots_ok = true;
  for (std::int64_t r = 0; r < l; ++r) {
    const Scalar a = branched_cover_surface(base, l, r).alpha();
    roots_ok = roots_ok && a.pow(l) == base.alpha();
    for (const auto& b : roots) roots_ok = roots_ok && a != b;
    roots.push_back(a);
  }
  bool connected = true;
  for (std::int64_t j = 1; j < l; ++j) connected = connected && !in_cyclic(cover.alpha().pow(j), base.alpha());
  rep.checks.push_back({"[C] has exactly l distinct l-th roots", "Sec 4 line bundle", roots_ok,
                        str(static_cast<std::int64_t>(roots.size())) + " roots"});
  rep.checks.push_back({"L^j nontrivial on E for 0 < j < l, so the preimage of E is connected",
                        "Sec 4 line bundle", connected, "restriction kernel generated by [C]"});

  // Totally ramified along each C_i: C^2 / l, then resolve n points A_{l-1}.
  const CurveConfig base_cfg = curve_config(base);
  const std::vector<std::int64_t> chain = hj_chain(l, l - 1);
  for (int k = 0; k < n; ++k) rep.singularities.push_back({k, l, l - 1, chain});
  const std::size_t r = chain.size();
  for (int i = 0; i < n; ++i) {
    Rational c2 = Rational(base_cfg.components[i].self_intersection, l);
    for (const auto& sg : rep.singularities) {
      std::vector<Rational> b(r, Rational(0));
      if (sg.node == i) b[0] += 1;
      if ((sg.node + 1) % n == i) b[r - 1] += 1;
      c2 += chain_form(chain, b, b);
    }
    if (c2.denominator() != 1)
      throw DomainError("build_branched_cover: non-integral self-intersection " + str(c2));
    rep.resolved_cycle.push_back({"C" + str(i), c2.numerator()});
    for (std::size_t t = 0; t < r; ++t)
      rep.resolved_cycle.push_back({"E" + str(i) + "." + str(static_cast<std::int64_t>(t + 1)),
                                    -chain[t]});
  }
  rep.final_cycle = blow_down(rep.resolved_cycle, &rep.contractions);
  rep.elliptic_self_int = l * base_cfg.elliptic_self_intersection;
  for (int i = 0; i < n; ++i) rep.ramification.push_back({"C" + str(i), l});
  rep.ramification.push_back({"E", 1});
  rep.m_prime = static_cast<int>(rep.final_cycle.size());
  rep.alpha_prime = cover.alpha();
  rep.result_label = identify_surface(rep.m_prime, *rep.alpha_prime);

  const std::int64_t e_branched = l * n - (l - 1) * n;
  rep.checks.push_back({"Euler number conservation", "Sec 4 Euler",
                        e_branched + static_cast<std::int64_t>(n * r) == rep.m_prime,
                        "e = l*" + str(n) + " - (l-1)*" + str(n) + " + " +
                            str(static_cast<std::int64_t>(n * r)) + " exceptional"});
  bool minimal = rep.contractions.empty() && rep.m_prime == nl && rep.elliptic_self_int == -nl;
  const CurveConfig cover_cfg = curve_config(cover);
  for (std::size_t i = 0; minimal && i < rep.resolved_cycle.size(); ++i)
    minimal = rep.resolved_cycle[i].self_intersection == cover_cfg.components[i].self_intersection;
  rep.checks.push_back({"minimal cover S(nl, alpha) with alpha^l = beta", "Lemma 4.3",
                        minimal && rep.alpha_prime->pow(l) == base.alpha(),
                        rep.result_label + ", cycle " + join(rep.resolved_cycle)});

  const QuotientReport back = quotient_by_mixed_cyclic(cover, 0, l);
  rep.checks.push_back({"quotient of the cover by H_l returns the base", "Prop 4.2 proof",
                        back.passed() && back.result_label == base.label() &&
                            back.alpha_prime == base.alpha(),
                        back.result_label + " vs " + base.label()});
  return rep;
}

}  // namespace inoue
