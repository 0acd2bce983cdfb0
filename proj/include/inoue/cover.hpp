#pragma once

// The universal cover W: the atlas U(k) = C^2(x_k, y_k), k in Z, and
// V = C*(w) x C(x), with Laurent-monomial transitions, the two-torus action,
// the compact curves C(k) and the covering generator gamma_{m,alpha}.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "inoue/scalar.hpp"

namespace inoue {

struct Chart {
  enum class Kind { U, V };
  Kind kind = Kind::U;
  std::int64_t index = 0;  // meaningful for U charts only

  static Chart u(std::int64_t k) { return {Kind::U, k}; }
  static Chart v() { return {Kind::V, 0}; }

  bool is_u() const { return kind == Kind::U; }
  bool operator==(const Chart&) const = default;
  std::string to_string() const;
};

// Integer 2x2 matrix; row i holds the exponents of (z1, z2) in output i.
using ExponentMatrix = std::array<std::array<std::int64_t, 2>, 2>;

ExponentMatrix matmul(const ExponentMatrix& a, const ExponentMatrix& b);
std::int64_t det(const ExponentMatrix& a);
// Inverse of a unimodular matrix; throws DomainError if det != +-1.
ExponentMatrix unimodular_inverse(const ExponentMatrix& a);
constexpr ExponentMatrix kIdentityMatrix{{{1, 0}, {0, 1}}};

using Point = std::array<std::complex<double>, 2>;

// (z1, z2) -> (c1 z1^A11 z2^A12, c2 z1^A21 z2^A22) from source to target.
struct ChartMap {
  Chart source;
  Chart target;
  ExponentMatrix exponents;
  std::array<Scalar, 2> coefficients;

  static ChartMap identity(Chart chart, const ContextPtr& ctx);

  ChartMap inverse() const;
  Point apply(const Point& p, const Assignment& assignment) const;
  std::string to_string() const;

  bool operator==(const ChartMap& other) const;
  bool operator!=(const ChartMap& other) const { return !(*this == other); }
};

// g after f. Requires f.target == g.source.
ChartMap compose(const ChartMap& f, const ChartMap& g);

// Adjacent pairs only: (U(k), U(k+1)), (U(k), V) or their reverses.
ChartMap transition(Chart from, Chart to, const ContextPtr& ctx);

// Change of coordinates between any two charts, composed along adjacent
// U-charts when needed.
ChartMap transit(Chart from, Chart to, const ContextPtr& ctx);

ChartMap torus_action(const Scalar& s, const Scalar& t, Chart chart);

// gamma_{m,alpha} realized with the given source chart: U(k) -> U(k+m), V -> V.
ChartMap gamma_chart(int m, const Scalar& alpha, Chart source);

// A global map of W given chart by chart: on(c) has source c.
// invert(c) is the chart map of the inverse with source c.
struct MapFamily {
  std::function<ChartMap(Chart)> on;
  std::function<ChartMap(Chart)> invert;

  MapFamily inverse() const { return {invert, on}; }
  // This map followed by next.
  MapFamily then(const MapFamily& next) const;

  static MapFamily torus(const Scalar& s, const Scalar& t);
  static MapFamily gamma(int m, const Scalar& alpha);
};

struct CurveLabel {
  enum class Kind { C, E };
  Kind kind = Kind::C;
  std::int64_t index = 0;  // k for C(k)

  static CurveLabel c(std::int64_t k) { return {Kind::C, k}; }
  static CurveLabel e() { return {Kind::E, 0}; }
  bool operator==(const CurveLabel&) const = default;
  std::string to_string() const;
};

// Chart that carries the curve's defining equation: C(k) is {y_k = 0} on U(k)
// (equivalently {x_{k-1} = 0} on U(k-1)); E is {x = 0} on V.
Chart home_chart(const CurveLabel& c);

// Image of a curve under a global monomial map, read off from which
// coordinate hyperplane the home chart's divisor is sent to.
CurveLabel curve_image(const std::function<ChartMap(Chart)>& family,
                       const CurveLabel& curve);

// Chart window half-width for identities whose coefficients depend on k.
// Defaults to 3m; INOUE_AUT_WINDOW overrides.
int chart_window(int m);

}  // namespace inoue
