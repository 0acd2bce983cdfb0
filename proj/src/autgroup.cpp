#include "inoue/autgroup.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "inoue/error.hpp"

namespace inoue {

CoverAut CoverAut::identity(const ContextPtr& ctx) {
  return {0, Scalar::one(ctx), Scalar::one(ctx)};
}

CoverAut CoverAut::torus(const Scalar& u, const Scalar& v) { return {0, u, v}; }

CoverAut CoverAut::gamma_beta_power(const ContextPtr& ctx, std::int64_t j) {
  return {j, Scalar::one(ctx), Scalar::one(ctx)};
}

std::string CoverAut::to_string() const {
  std::ostringstream os;
  os << '(' << shift << "; " << u.to_string() << ", " << v.to_string() << ')';
  return os.str();
}

CoverAut compose(const CoverAut& a, const CoverAut& b) {
  return {a.shift + b.shift, a.u * b.u, a.v * b.v * b.u.pow(a.shift)};
}

CoverAut inverse(const CoverAut& a) {
  return {-a.shift, a.u.inverse(), a.v.inverse() * a.u.pow(a.shift)};
}

CoverAut power(const CoverAut& a, std::int64_t k) {
  CoverAut base = k < 0 ? inverse(a) : a;
  CoverAut result = CoverAut::identity(a.u.context());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result = compose(result, base);
  return result;
}

bool commute(const CoverAut& a, const CoverAut& b) {
  return compose(a, b) == compose(b, a);
}

ChartMap realize(const CoverAut& a, Chart source, const Scalar& beta) {
  const std::int64_t j = a.shift;
  if (!source.is_u()) {
    return {source, source, {{{1, 0}, {j, 1}}},
            {a.u * beta.pow(j), a.v * beta.pow(j * (j - 1) / 2)}};
  }
  const std::int64_t k = source.index;
  const std::int64_t target = k + j;
  // Accumulated gamma_beta coefficients over the j chart steps.
  const std::int64_t steps = j * k + j * (j + 1) / 2;
  return {source, Chart::u(target), kIdentityMatrix,
          {beta.pow(-steps) * a.u.pow(-target) * a.v,
           beta.pow(steps + j) * a.u.pow(target + 1) * a.v.inverse()}};
}

MapFamily primitive_family(const CoverAut& a, const Scalar& beta) {
  const MapFamily step = MapFamily::gamma(1, beta);
  MapFamily acc = MapFamily::torus(Scalar::one(beta.context()),
                                   Scalar::one(beta.context()));
  for (std::int64_t i = 0; i < (a.shift < 0 ? -a.shift : a.shift); ++i)
    acc = acc.then(a.shift < 0 ? step.inverse() : step);
  return acc.then(MapFamily::torus(a.u, a.v));
}

CoverAut from_v_chart(const ChartMap& on_v, const Scalar& beta) {
  const auto& e = on_v.exponents;
  if (on_v.source.is_u() || on_v.target.is_u() || e[0][0] != 1 ||
      e[0][1] != 0 || e[1][1] != 1)
    throw DomainError("from_v_chart: not a torus-normalizing map on V");
  const std::int64_t j = e[1][0];
  return {j, on_v.coefficients[0] * beta.pow(-j),
          on_v.coefficients[1] * beta.pow(-(j * (j - 1) / 2))};
}

CoverAut gamma_m(int m, const Scalar& theta) {
  return from_v_chart(gamma_chart(m, theta.pow(2 * m), Chart::v()),
                      theta.pow(2));
}

CoverAut nu(int m, const Scalar& theta) {
  const ContextPtr& ctx = theta.context();
  const Scalar s = theta.pow(m - 1);
  const Scalar one = Scalar::one(ctx);
  return compose(compose(CoverAut::torus(s, one), CoverAut::gamma_beta_power(ctx, 1)),
                 CoverAut::torus(s.inverse(), one));
}

CoverAut nu_root(int m, const Scalar& theta, std::int64_t i) {
  const ContextPtr& ctx = theta.context();
  const Scalar beta = theta.pow(2);
  const Scalar root = Scalar::root_of_unity(ctx, m, i) * beta;
  // A square root of root^{m-1}: half-power of zeta_m times theta^{m-1}.
  const Scalar s = Scalar::root_of_unity(ctx, 2 * m, i * (m - 1)) * theta.pow(m - 1);
  const CoverAut gamma_root = from_v_chart(gamma_chart(1, root, Chart::v()), beta);
  const Scalar one = Scalar::one(ctx);
  return compose(compose(CoverAut::torus(s, one), gamma_root),
                 CoverAut::torus(s.inverse(), one));
}

Assignment random_assignment(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> near_one(0.8, 1.25);
  std::uniform_real_distribution<double> below_one(0.9, 0.99);
  Assignment out;
  for (const auto& g : ctx->generators()) {
    const double r = g == "delta" ? below_one(rng) : near_one(rng);
    out[g] = std::polar(r, phase(rng));
  }
  return out;
}

PointOnW apply_pointwise(const std::vector<MapFamily>& word, PointOnW q,
                         const Assignment& assignment) {
  for (const auto& fam : word) {
    const ChartMap f = fam.on(q.chart);
    q = {f.target, f.apply(q.p, assignment)};
  }
  return q;
}

bool points_agree(const PointOnW& a, const PointOnW& b,
                  const Assignment& assignment, const ContextPtr& ctx,
                  double tol) {
  const Point pb = transit(b.chart, a.chart, ctx).apply(b.p, assignment);
  for (int i = 0; i < 2; ++i) {
    const double scale = std::max(1.0, std::abs(a.p[i]));
    if (!(std::abs(a.p[i] - pb[i]) <= tol * scale)) return false;
  }
  return true;
}

namespace {

struct Relation {
  std::string name;
  std::string anchor;
  CoverAut lhs;
  CoverAut rhs;
  std::vector<MapFamily> lhs_word;  // application order
  std::vector<MapFamily> rhs_word;
};

ChartMap compose_word(const std::vector<MapFamily>& word, Chart c,
                      const ContextPtr& ctx) {
  ChartMap acc = ChartMap::identity(c, ctx);
  for (const auto& fam : word) acc = compose(acc, fam.on(acc.target));
  return acc;
}

std::vector<Chart> window_charts(int m) {
  const int w = chart_window(m);
  std::vector<Chart> charts{Chart::v()};
  for (int k = -w; k <= w; ++k) charts.push_back(Chart::u(k));
  return charts;
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(0.5, 1.5);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  return {std::polar(mod(rng), phase(rng)), std::polar(mod(rng), phase(rng))};
}

void check_relation(const Relation& r, const ContextPtr& ctx, const Scalar& beta,
                    int samples, std::mt19937_64& rng, CheckList& out) {
  const int m = ctx->m();
  out.push_back({r.name, r.anchor, r.lhs == r.rhs,
                 r.lhs.to_string() + " vs " + r.rhs.to_string()});

  bool charts_ok = true;
  std::string where;
  for (Chart c : window_charts(m)) {
    const ChartMap nf = realize(r.lhs, c, beta);
    if (nf != realize(r.rhs, c, beta) || nf != compose_word(r.lhs_word, c, ctx) ||
        nf != compose_word(r.rhs_word, c, ctx)) {
      charts_ok = false;
      where = c.to_string();
      break;
    }
  }
  out.push_back({r.name + " [charts]", r.anchor, charts_ok,
                 charts_ok ? "normal form, primitive words agree on window |k| <= " +
                                 std::to_string(chart_window(m)) + " and V"
                           : "mismatch on " + where});

  const auto charts = window_charts(m);
  std::uniform_int_distribution<std::size_t> pick(0, charts.size() - 1);
  int agreed = 0;
  for (int i = 0; i < samples; ++i) {
    const Assignment a = random_assignment(ctx, rng);
    const PointOnW start{charts[pick(rng)], random_point(rng)};
    if (points_agree(apply_pointwise(r.lhs_word, start, a),
                     apply_pointwise(r.rhs_word, start, a), a, ctx))
      ++agreed;
  }
  out.push_back({r.name + " [numeric]", r.anchor, agreed == samples,
                 std::to_string(agreed) + "/" + std::to_string(samples) +
                     " random assignments within 1e-9"});
}

}  // namespace

CheckList verify_relations(const ContextPtr& ctx, int samples, std::uint64_t seed) {
  const int m = ctx->m();
  const Scalar theta = Scalar::delta(ctx);
  const Scalar beta = theta.pow(2);
  const Scalar alpha = theta.pow(2 * m);
  const Scalar one = Scalar::one(ctx);
  const Scalar s = Scalar::generator(ctx, "s");
  const Scalar t = Scalar::generator(ctx, "t");
  const Scalar sigma = theta.pow(m - 1);

  const CoverAut big_gamma = gamma_m(m, theta);
  const CoverAut g_beta = CoverAut::gamma_beta_power(ctx, 1);
  const CoverAut g_beta_m = power(g_beta, m);
  const CoverAut n = nu(m, theta);
  const MapFamily Gamma = MapFamily::gamma(m, alpha);
  const MapFamily GammaBeta = MapFamily::gamma(1, beta);
  const std::vector<MapFamily> nu_word{MapFamily::torus(sigma.inverse(), one),
                                       GammaBeta, MapFamily::torus(sigma, one)};
  auto repeat = [](const std::vector<MapFamily>& w, int k) {
    std::vector<MapFamily> out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
  };
  auto sandwich = [&](const Scalar& conj) {
    std::vector<MapFamily> w{MapFamily::torus(conj.inverse(), one)};
    for (int i = 0; i < m; ++i) w.push_back(GammaBeta);
    w.push_back(MapFamily::torus(conj, one));
    return w;
  };

  std::vector<Relation> relations;
  relations.push_back({"gamma normalizes the torus: gamma(s,t)gamma^-1 = (s, s^m t)",
                       "eq (sdr)",
                       compose(big_gamma, compose(CoverAut::torus(s, t), inverse(big_gamma))),
                       CoverAut::torus(s, s.pow(m) * t),
                       {Gamma.inverse(), MapFamily::torus(s, t), Gamma},
                       {MapFamily::torus(s, s.pow(m) * t)}});
  relations.push_back({"s^-1 gamma s = (1, s^m) gamma", "eq (sdq)",
                       compose(CoverAut::torus(s.inverse(), one),
                               compose(big_gamma, CoverAut::torus(s, one))),
                       compose(CoverAut::torus(one, s.pow(m)), big_gamma),
                       {MapFamily::torus(s, one), Gamma, MapFamily::torus(s.inverse(), one)},
                       {Gamma, MapFamily::torus(one, s.pow(m))}});
  relations.push_back({"s gamma_beta^m s^-1 = (1, s^-m) gamma_beta^m", "sec 2 (sdq at m=1)",
                       compose(CoverAut::torus(s, one),
                               compose(g_beta_m, CoverAut::torus(s.inverse(), one))),
                       compose(CoverAut::torus(one, s.pow(-m)), g_beta_m),
                       sandwich(s),
                       [&] {
                         std::vector<MapFamily> w(m, GammaBeta);
                         w.push_back(MapFamily::torus(one, s.pow(-m)));
                         return w;
                       }()});
  relations.push_back({"nu^m = gamma_{m,alpha}", "eq (sdn)", power(n, m), big_gamma,
                       repeat(nu_word, m), {Gamma}});
  relations.push_back({"s gamma_beta^m s^-1 = gamma_{m,alpha} for s = beta^((m-1)/2)",
                       "eq (sdn)",
                       compose(CoverAut::torus(sigma, one),
                               compose(g_beta_m, CoverAut::torus(sigma.inverse(), one))),
                       big_gamma, sandwich(sigma), {Gamma}});
  relations.push_back({"gamma_beta commutes with nu", "eq (ndef)", compose(g_beta, n),
                       compose(n, g_beta), [&] {
                         std::vector<MapFamily> w = nu_word;
                         w.insert(w.begin(), GammaBeta);
                         return w;
                       }(),
                       [&] {
                         std::vector<MapFamily> w = nu_word;
                         w.push_back(GammaBeta);
                         return w;
                       }()});

  std::mt19937_64 rng(seed);
  CheckList out;
  for (const auto& r : relations) check_relation(r, ctx, beta, samples, rng, out);

  // Shape of gamma_beta^m on V, compared against the explicit formula.
  {
    const ChartMap expected{Chart::v(), Chart::v(), {{{1, 0}, {m, 1}}},
                            {beta.pow(m), beta.pow(m * (m - 1) / 2)}};
    const ChartMap got = realize(g_beta_m, Chart::v(), beta);
    int agreed = 0;
    for (int i = 0; i < samples; ++i) {
      const Assignment a = random_assignment(ctx, rng);
      const PointOnW start{Chart::v(), random_point(rng)};
      const PointOnW lhs = apply_pointwise(std::vector<MapFamily>(m, GammaBeta), start, a);
      if (points_agree(lhs, {Chart::v(), expected.apply(start.p, a)}, a, ctx)) ++agreed;
    }
    out.push_back({"gamma_beta^m on V = (beta^m w, beta^(m(m-1)/2) w^m x)", "eq (itr)",
                   got == expected, got.to_string()});
    out.push_back({"gamma_beta^m on V [numeric]", "eq (itr)", agreed == samples,
                   std::to_string(agreed) + "/" + std::to_string(samples)});
  }

  {
    const ChartMap expected{Chart::v(), Chart::v(), {{{1, 0}, {1, 1}}},
                            {beta, theta.pow(-(m - 1))}};
    const ChartMap got = realize(n, Chart::v(), beta);
    out.push_back({"nu on V = (beta w, beta^(-(m-1)/2) w x)", "sec 2 (ndef)",
                   got == expected, got.to_string()});
  }

  {
    bool ok = true;
    std::string where;
    for (int k = -chart_window(m); k <= chart_window(m); ++k) {
      if (realize(big_gamma, Chart::u(k), beta) != gamma_chart(m, alpha, Chart::u(k))) {
        ok = false;
        where = "U(" + std::to_string(k) + ")";
        break;
      }
    }
    out.push_back({"gamma_{m,alpha} normal form matches the U-chart formula",
                   "eq (bi)", ok, ok ? "window agrees" : "mismatch on " + where});
  }

  // (u, t) commutes with gamma_{m,alpha} iff u^m = 1; exhaustive over mu_N.
  {
    const std::int64_t modulus = ctx->modulus();
    bool ok = true;
    std::int64_t commuting = 0;
    for (std::int64_t a = 0; a < modulus; ++a) {
      const Scalar u = Scalar::root_of_unity(ctx, modulus, a);
      const bool c = commute(CoverAut::torus(u, t), big_gamma);
      if (c) ++commuting;
      if (c != u.pow(m).is_one()) ok = false;
    }
    ok = ok && commuting == m && !commute(CoverAut::torus(s, t), big_gamma);
    out.push_back({"(u,t) commutes with gamma_{m,alpha} iff u^m = 1", "sec 2",
                   ok,
                   std::to_string(commuting) + " of " + std::to_string(modulus) +
                       " roots of unity commute; free s does not"});
    const Scalar rho = Scalar::root_of_unity(ctx, m, 1);
    check_relation({"(rho,t) commutes with gamma_{m,alpha}", "sec 2",
                    compose(CoverAut::torus(rho, t), big_gamma),
                    compose(big_gamma, CoverAut::torus(rho, t)),
                    {Gamma, MapFamily::torus(rho, t)},
                    {MapFamily::torus(rho, t), Gamma}},
                   ctx, beta, samples, rng, out);
  }
  return out;
}

}  // namespace inoue
