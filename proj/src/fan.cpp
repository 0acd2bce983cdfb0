#include "inoue/fan.hpp"

#include <cstdlib>
#include <numeric>

#include "inoue/error.hpp"

namespace inoue {

namespace {

// g = x a + y b
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  std::int64_t x1, y1;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
  if (b == 0 || a % b != 0) throw DomainError(what);
  return a / b;
}

Vec2 add(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }

// a with s = a * v; throws if s is not a multiple of v.
std::int64_t multiple_of(const Vec2& s, const Vec2& v) {
  if (det2(s, v) != 0) throw DomainError("rays: neighbour sum not on the middle ray");
  const int c = v[0] != 0 ? 0 : 1;
  return exact_div(s[c], v[c], "rays: neighbour sum not an integer multiple");
}

ExponentMatrix matpow(const ExponentMatrix& a, std::int64_t k) {
  ExponentMatrix base = k < 0 ? unimodular_inverse(a) : a;
  ExponentMatrix r = kIdentityMatrix;
  for (std::int64_t i = 0; i < std::abs(k); ++i) r = matmul(r, base);
  return r;
}

}  // namespace

std::int64_t det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec2 act(const ExponentMatrix& a, const Vec2& v) {
  return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

Lattice Lattice::standard() { return Lattice{}; }

Lattice Lattice::refined(std::int64_t l, std::int64_t a, std::int64_t b) {
  if (l < 1) throw DomainError("lattice: refinement index must be positive");
  a = floor_mod(a, l);
  b = floor_mod(b, l);
  if (std::gcd(std::gcd(a, b), l) != 1)
    throw DomainError("lattice: refinement (" + std::to_string(a) + ", " + std::to_string(b) +
                      ")/" + std::to_string(l) + " is not primitive");
  Lattice out;
  out.scale_ = l;
  out.gen_ = {a, b};
  std::int64_t c1, c3;
  const std::int64_t g1 = ext_gcd(l, a, c1, c3);
  const std::int64_t y2 = std::gcd(l, b * (l / g1));
  out.b00_ = g1;
  out.b11_ = y2 == 0 ? l : y2;
  out.b10_ = floor_mod(c3 * b, out.b11_);
  return out;
}

std::int64_t Lattice::index() const { return scale_ * scale_ / (b00_ * b11_); }

Vec2 Lattice::coordinates(const Vec2& w) const {
  const std::int64_t c1 = exact_div(w[0], b00_, "lattice: vector not in the lattice");
  const std::int64_t c2 = exact_div(w[1] - c1 * b10_, b11_, "lattice: vector not in the lattice");
  return {c1, c2};
}

bool Lattice::contains(const Vec2& w) const {
  try {
    coordinates(w);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::pair<Vec2, std::int64_t> Lattice::primitive_on_ray(const Vec2& n) const {
  const Vec2 c = coordinates({n[0] * scale_, n[1] * scale_});
  const std::int64_t g = std::gcd(c[0], c[1]);
  if (g == 0) throw DomainError("lattice: zero vector has no ray");
  return {{c[0] / g, c[1] / g}, g};
}

ExponentMatrix Lattice::in_basis(const ExponentMatrix& a) const {
  const Vec2 b1{b00_, b10_}, b2{0, b11_};
  const Vec2 c1 = coordinates(act(a, b1)), c2 = coordinates(act(a, b2));
  return {{{c1[0], c2[0]}, {c1[1], c2[1]}}};
}

Lattice quotient_lattice(const Lattice& base, std::int64_t l, std::int64_t j) {
  if (base.scale() != 1) throw DomainError("quotient_lattice: base must be N itself");
  if (l < 1 || j < 0 || j >= l) throw DomainError("quotient_lattice: need l >= 1, 0 <= j < l");
  return Lattice::refined(l, 1, j);
}

ExponentMatrix chart_characters(std::int64_t k) {
  const ContextPtr ctx = ScalarContext::make(1);
  ExponentMatrix x = transition(Chart::v(), Chart::u(0), ctx).exponents;
  for (std::int64_t i = 0; i < k; ++i)
    x = matmul(transition(Chart::u(i), Chart::u(i + 1), ctx).exponents, x);
  for (std::int64_t i = 0; i > k; --i)
    x = matmul(transition(Chart::u(i), Chart::u(i - 1), ctx).exponents, x);
  return x;
}

RaySequence rays_of_W(std::int64_t lo, std::int64_t hi) {
  RaySequence out{lo, {}};
  for (std::int64_t k = lo; k <= hi; ++k) {
    // C(k) = {y_k = 0}: the dual vector pairing to 0 with x_k and 1 with y_k.
    const ExponentMatrix inv = unimodular_inverse(chart_characters(k));
    out.rays.push_back({inv[0][1], inv[1][1]});
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> continued_fraction(const std::vector<std::int64_t>& a) {
  if (a.empty()) return {1, 0};
  std::int64_t num = a.back(), den = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    const std::int64_t n2 = a[i] * num - den;
    den = num;
    num = n2;
  }
  return {num, den};
}

std::vector<std::int64_t> hj_chain(std::int64_t d, std::int64_t q) {
  if (d < 1 || q < 0 || (d > 1 && (q == 0 || q >= d || std::gcd(d, q) != 1)))
    throw DomainError("hj_chain: invalid type 1/" + std::to_string(d) + "(1," +
                      std::to_string(q) + ")");
  std::vector<std::int64_t> out;
  if (d == 1) return out;
  while (q != 0) {
    const std::int64_t a = (d + q - 1) / q;
    out.push_back(a);
    const std::int64_t next = a * q - d;
    d = q;
    q = next;
  }
  return out;
}

std::string singularity_label(std::int64_t d, std::int64_t q) {
  if (d == 1) return "smooth";
  if (q == d - 1) return "A_" + std::to_string(d - 1);
  return "1/" + std::to_string(d) + "(1," + std::to_string(q) + ")";
}

std::vector<std::int64_t> cycle_self_intersections(const std::vector<Vec2>& rays) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i)
    if (std::abs(det2(rays[i], rays[i + 1])) != 1)
      throw DomainError("cycle_self_intersections: cone " + std::to_string(i) +
                        " is not unimodular; resolve it with hj_resolve first");
  for (std::size_t i = 1; i + 1 < rays.size(); ++i)
    out.push_back(multiple_of(add(rays[i - 1], rays[i + 1]), rays[i]));
  return out;
}

Chain hj_resolve(const Vec2& p, const Vec2& q) {
  const std::int64_t d = det2(p, q);
  if (d == 0) throw DomainError("hj_resolve: degenerate cone");
  if (d < 0) throw DomainError("hj_resolve: cone must be positively oriented");
  if (std::gcd(p[0], p[1]) != 1 || std::gcd(q[0], q[1]) != 1)
    throw DomainError("hj_resolve: rays must be primitive");
  Chain out;
  out.d = d;
  Vec2 cur = p;
  while (det2(cur, q) > 1) {
    const std::int64_t dd = det2(cur, q);
    std::int64_t k = 1;
    while (k < dd && (floor_mod(q[0] + k * cur[0], dd) != 0 ||
                      floor_mod(q[1] + k * cur[1], dd) != 0))
      ++k;
    if (k == dd) throw DomainError("hj_resolve: no boundary point found");
    cur = {(q[0] + k * cur[0]) / dd, (q[1] + k * cur[1]) / dd};
    out.rays.push_back(cur);
  }
  if (!out.rays.empty()) {
    std::vector<Vec2> all{p};
    all.insert(all.end(), out.rays.begin(), out.rays.end());
    all.push_back(q);
    out.a = cycle_self_intersections(all);
  }
  const auto [dn, qn] = continued_fraction(out.a);
  if (dn != d) throw DomainError("hj_resolve: continued fraction does not recover the order");
  out.q = d == 1 ? 0 : qn;
  return out;
}

Vec2 PeriodicFan::extended(std::int64_t i) const {
  const auto n = static_cast<std::int64_t>(rays.size());
  return act(matpow(period, floor_div(i, n)), rays[floor_mod(i, n)].v);
}

std::vector<std::int64_t> PeriodicFan::lift_degrees() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rays.size()); ++i)
    out.push_back(cycle_self_intersections({extended(i - 1), extended(i), extended(i + 1)})[0]);
  return out;
}

std::vector<std::int64_t> PeriodicFan::self_intersections() const {
  std::vector<std::int64_t> out;
  for (std::int64_t a : lift_degrees()) out.push_back(rays.size() == 1 ? 2 - a : -a);
  return out;
}

PeriodicFan contract_minus_one(PeriodicFan fan, std::vector<std::string>* removed) {
  while (fan.rays.size() >= 2) {
    const auto deg = fan.lift_degrees();
    std::size_t i = 0;
    while (i < deg.size() && deg[i] != 1) ++i;
    if (i == deg.size()) break;
    if (removed) removed->push_back(fan.rays[i].label);
    fan.rays.erase(fan.rays.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return fan;
}

FanRoute fan_quotient(const Lattice& lattice, std::int64_t shift, const ExponentMatrix& period) {
  if (shift < 1) throw DomainError("fan_quotient: shift must be positive");
  FanRoute out{lattice, {}, {}, {}, {}};
  const ExponentMatrix phi = lattice.in_basis(period);
  if (act(period, {1, 0}) != Vec2{1, shift})
    throw DomainError("fan_quotient: period map does not move v_0 to v_shift");

  std::vector<std::pair<Vec2, std::int64_t>> prim;
  for (std::int64_t k = 0; k < shift; ++k) prim.push_back(lattice.primitive_on_ray({1, k}));

  PeriodicFan& fan = out.resolved;
  fan.period = phi;
  for (std::int64_t k = 0; k < shift; ++k) {
    fan.rays.push_back({prim[k].first, "C" + std::to_string(k), prim[k].second});
    const Vec2 next = k + 1 < shift ? prim[k + 1].first : act(phi, prim[0].first);
    const Chain c = hj_resolve(prim[k].first, next);
    if (!c.smooth()) out.singularities.push_back({k, c.d, c.q, c.a});
    for (std::size_t t = 0; t < c.rays.size(); ++t)
      fan.rays.push_back({c.rays[t], "E" + std::to_string(k) + "." + std::to_string(t + 1), 1});
  }
  out.contracted = contract_minus_one(fan, &out.contractions);
  return out;
}

}  // namespace inoue
