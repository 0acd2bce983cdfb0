#pragma once

// Automorphisms of W normalizing the two-torus, in the normal form
// (j; u, v) := tau_(u,v) o gamma_beta^j, where gamma_beta = gamma_{1,beta}.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "inoue/check.hpp"
#include "inoue/cover.hpp"
#include "inoue/scalar.hpp"

namespace inoue {

struct CoverAut {
  std::int64_t shift = 0;
  Scalar u;
  Scalar v;

  static CoverAut identity(const ContextPtr& ctx);
  static CoverAut torus(const Scalar& u, const Scalar& v);
  static CoverAut gamma_beta_power(const ContextPtr& ctx, std::int64_t j);

  bool operator==(const CoverAut& o) const {
    return shift == o.shift && u == o.u && v == o.v;
  }
  bool operator!=(const CoverAut& o) const { return !(*this == o); }
  std::string to_string() const;
};

// a o b (b acts first). The shifts add and conjugating a torus element past
// gamma_beta^j multiplies its second coordinate by the j-th power of the first:
// (j1; u1, v1)(j2; u2, v2) = (j1 + j2; u1 u2, v1 v2 u2^j1).
CoverAut compose(const CoverAut& a, const CoverAut& b);
CoverAut inverse(const CoverAut& a);
CoverAut power(const CoverAut& a, std::int64_t k);
bool commute(const CoverAut& a, const CoverAut& b);

// Chart map of a with the given source chart; U(k) goes to U(k + shift).
ChartMap realize(const CoverAut& a, Chart source, const Scalar& beta);

// Same automorphism assembled from the cover primitives (gamma_{1,beta}
// repeated, then the torus), independent of realize's closed forms.
MapFamily primitive_family(const CoverAut& a, const Scalar& beta);

// Recover the normal form from a V-chart map (w, x) -> (c1 w, c2 w^j x).
CoverAut from_v_chart(const ChartMap& on_v, const Scalar& beta);

// gamma_{m,alpha} with alpha = theta^{2m}, beta = theta^2.
CoverAut gamma_m(int m, const Scalar& theta);
// nu = s gamma_beta s^{-1} with s = theta^{m-1}, computed by composition.
CoverAut nu(int m, const Scalar& theta);
// nu for the m-th root zeta_m^i beta of alpha; needs zeta_{2m}.
CoverAut nu_root(int m, const Scalar& theta, std::int64_t i);

inline CoverAut gamma_m(const ContextPtr& ctx) {
  return gamma_m(ctx->m(), Scalar::delta(ctx));
}
inline CoverAut nu(const ContextPtr& ctx) { return nu(ctx->m(), Scalar::delta(ctx)); }

// Random admissible complex values for every free generator.
Assignment random_assignment(const ContextPtr& ctx, std::mt19937_64& rng);

// Points of W given in one chart.
struct PointOnW {
  Chart chart;
  Point p;
};

PointOnW apply_pointwise(const std::vector<MapFamily>& word, PointOnW q,
                         const Assignment& assignment);
// Relative agreement after moving b into a's chart.
bool points_agree(const PointOnW& a, const PointOnW& b,
                  const Assignment& assignment, const ContextPtr& ctx,
                  double tol = 1e-9);

// Exact checks of the torus normalization identities for gamma_{m,alpha},
// the shape of gamma_beta^m on V, nu^m = gamma_{m,alpha}, and the
// commutation criterion; each also re-verified pointwise at `samples`
// random parameter assignments.
CheckList verify_relations(const ContextPtr& ctx, int samples = 20,
                           std::uint64_t seed = 1);

}  // namespace inoue
