#include "inoue/cover.hpp"

#include <cstdlib>
#include <sstream>

#include "inoue/error.hpp"

namespace inoue {

std::string Chart::to_string() const {
  return is_u() ? "U(" + std::to_string(index) + ")" : "V";
}

std::string CurveLabel::to_string() const {
  return kind == Kind::E ? "E~" : "C~(" + std::to_string(index) + ")";
}

ExponentMatrix matmul(const ExponentMatrix& a, const ExponentMatrix& b) {
  ExponentMatrix r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

std::int64_t det(const ExponentMatrix& a) {
  return a[0][0] * a[1][1] - a[0][1] * a[1][0];
}

ExponentMatrix unimodular_inverse(const ExponentMatrix& a) {
  const std::int64_t d = det(a);
  if (d != 1 && d != -1)
    throw DomainError("exponent matrix is not unimodular");
  return {{{a[1][1] * d, -a[0][1] * d}, {-a[1][0] * d, a[0][0] * d}}};
}

ChartMap ChartMap::identity(Chart chart, const ContextPtr& ctx) {
  return {chart, chart, kIdentityMatrix, {Scalar::one(ctx), Scalar::one(ctx)}};
}

ChartMap ChartMap::inverse() const {
  const ExponentMatrix b = unimodular_inverse(exponents);
  std::array<Scalar, 2> c{Scalar::one(coefficients[0].context()),
                          Scalar::one(coefficients[0].context())};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i] *= coefficients[j].pow(-b[i][j]);
  return {target, source, b, c};
}

Point ChartMap::apply(const Point& p, const Assignment& assignment) const {
  Point out;
  for (int i = 0; i < 2; ++i)
    out[i] = coefficients[i].eval(assignment) * ipow(p[0], exponents[i][0]) *
             ipow(p[1], exponents[i][1]);
  return out;
}

std::string ChartMap::to_string() const {
  const char* in[2] = {source.is_u() ? "x" : "w", source.is_u() ? "y" : "x"};
  std::ostringstream os;
  os << source.to_string() << " -> " << target.to_string() << ": (";
  for (int i = 0; i < 2; ++i) {
    if (i) os << ", ";
    os << coefficients[i].to_string();
    for (int j = 0; j < 2; ++j) {
      if (exponents[i][j] == 0) continue;
      os << '*' << in[j];
      if (exponents[i][j] != 1) os << '^' << exponents[i][j];
    }
  }
  os << ')';
  return os.str();
}

bool ChartMap::operator==(const ChartMap& other) const {
  return source == other.source && target == other.target &&
         exponents == other.exponents && coefficients == other.coefficients;
}

ChartMap compose(const ChartMap& f, const ChartMap& g) {
  if (!(f.target == g.source))
    throw ChartError("compose: " + f.target.to_string() + " does not match " +
                     g.source.to_string());
  ChartMap r{f.source, g.target, matmul(g.exponents, f.exponents),
             g.coefficients};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.coefficients[i] *= f.coefficients[j].pow(g.exponents[i][j]);
  return r;
}

ChartMap transition(Chart from, Chart to, const ContextPtr& ctx) {
  const Scalar one = Scalar::one(ctx);
  if (from.is_u() && to.is_u() && to.index == from.index + 1)
    return {from, to, {{{0, -1}, {1, 2}}}, {one, one}};
  if (from.is_u() && to.is_u() && to.index + 1 == from.index)
    return transition(to, from, ctx).inverse();
  if (from.is_u() && !to.is_u()) {
    const std::int64_t k = from.index;
    return {from, to, {{{1, 1}, {k + 1, k}}}, {one, one}};
  }
  if (!from.is_u() && to.is_u()) return transition(to, from, ctx).inverse();
  throw ChartError("transition: charts " + from.to_string() + " and " +
                   to.to_string() + " are not adjacent");
}

ChartMap transit(Chart from, Chart to, const ContextPtr& ctx) {
  if (from == to) return ChartMap::identity(from, ctx);
  if (!from.is_u() || !to.is_u()) return transition(from, to, ctx);
  ChartMap acc = ChartMap::identity(from, ctx);
  const std::int64_t step = to.index > from.index ? 1 : -1;
  for (std::int64_t k = from.index; k != to.index; k += step)
    acc = compose(acc, transition(Chart::u(k), Chart::u(k + step), ctx));
  return acc;
}

ChartMap torus_action(const Scalar& s, const Scalar& t, Chart chart) {
  if (!chart.is_u()) return {chart, chart, kIdentityMatrix, {s, t}};
  const std::int64_t k = chart.index;
  return {chart, chart, kIdentityMatrix,
          {s.pow(-k) * t, s.pow(k + 1) * t.inverse()}};
}

ChartMap gamma_chart(int m, const Scalar& alpha, Chart source) {
  if (m < 0) throw DomainError("gamma_chart: m must be non-negative");
  if (!source.is_u())
    return {source, source, {{{1, 0}, {m, 1}}},
            {alpha, Scalar::one(alpha.context())}};
  const std::int64_t k = source.index + m;
  return {source, Chart::u(k), kIdentityMatrix,
          {alpha.pow(-k), alpha.pow(k + 1)}};
}

MapFamily MapFamily::then(const MapFamily& next) const {
  auto first = *this;
  auto second = next;
  return {[first, second](Chart c) {
            ChartMap f = first.on(c);
            return compose(f, second.on(f.target));
          },
          [first, second](Chart c) {
            ChartMap g = second.invert(c);
            return compose(g, first.invert(g.target));
          }};
}

MapFamily MapFamily::torus(const Scalar& s, const Scalar& t) {
  return {[s, t](Chart c) { return torus_action(s, t, c); },
          [s, t](Chart c) {
            return torus_action(s.inverse(), t.inverse(), c);
          }};
}

MapFamily MapFamily::gamma(int m, const Scalar& alpha) {
  return {[m, alpha](Chart c) { return gamma_chart(m, alpha, c); },
          [m, alpha](Chart c) {
            Chart src = c.is_u() ? Chart::u(c.index - m) : c;
            return gamma_chart(m, alpha, src).inverse();
          }};
}

Chart home_chart(const CurveLabel& c) {
  return c.kind == CurveLabel::Kind::E ? Chart::v() : Chart::u(c.index);
}

CurveLabel curve_image(const std::function<ChartMap(Chart)>& family,
                       const CurveLabel& curve) {
  const ChartMap f = family(home_chart(curve));
  const auto& a = f.exponents;
  if (curve.kind == CurveLabel::Kind::E) {
    // {x = 0} on V: need x' = c w^p x^q with q > 0 and w' free of x.
    if (!f.target.is_u() && a[0][1] == 0 && a[0][0] != 0 && a[1][1] > 0)
      return CurveLabel::e();
    throw DomainError("curve_image: map does not carry E~ onto a curve");
  }
  if (!f.target.is_u())
    throw DomainError("curve_image: compact curve sent into V");
  // {y = 0} on U(k), parametrized by x.
  if (a[0][1] == 0 && a[0][0] != 0 && a[1][1] > 0)
    return CurveLabel::c(f.target.index);
  if (a[1][1] == 0 && a[1][0] != 0 && a[0][1] > 0)
    return CurveLabel::c(f.target.index + 1);
  throw DomainError("curve_image: map is not divisor-compatible on " +
                    f.source.to_string());
}

int chart_window(int m) {
  if (const char* env = std::getenv("INOUE_AUT_WINDOW")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 3 * m;
}

}  // namespace inoue
