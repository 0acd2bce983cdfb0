#pragma once

// Quotients of S(m, alpha) by finite cyclic subgroups of H: singular points
// from local weights, minimal resolution, blow-downs and the identification
// of the minimal model S(m', alpha'). Every report is computed twice, once
// by intersection-number bookkeeping (degree rule) and once torically, and
// the two are compared.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "inoue/check.hpp"
#include "inoue/fan.hpp"
#include "inoue/scalar.hpp"
#include "inoue/surface.hpp"

namespace inoue {

using Rational = boost::rational<std::int64_t>;

// Image self-intersection of an orbit O under a group of order l whose
// members pointwise fixing a component of O form a group of order e:
// C'^2 = e^2 O^2 / l. e = l with a single invariant divisor is the
// pointwise-fixed rule l D^2, e = 1 the free rule O^2 / l.
struct DegreeRule {
  enum class Tag { PointwiseFixed, Free, PartiallyRamified };
  Tag tag = Tag::Free;
  std::int64_t order = 1;
  std::int64_t ramification = 1;

  static DegreeRule classify(std::int64_t order, std::int64_t ramification);
  Rational image(const Rational& orbit_square) const;
  // Mixed intersection with another image curve.
  static Rational image_intersection(std::int64_t order, std::int64_t e1, std::int64_t e2,
                                     const Rational& orbit_product);
  // Change of D^2 when a (-1)-curve meeting D with multiplicity k is blown down.
  static std::int64_t blow_down_increment(std::int64_t k) { return k * k; }
  std::string tag_name() const;
};

struct QuotientSingularity {
  std::int64_t node = 0;  // image of p_node = C_node meet C_node+1
  std::int64_t d = 1;
  std::int64_t q = 0;
  std::vector<std::int64_t> chain;
  std::string type() const { return singularity_label(d, q); }
  bool operator==(const QuotientSingularity&) const = default;
};

struct CycleCurve {
  std::string label;
  std::int64_t self_intersection = 0;
  bool operator==(const CycleCurve&) const = default;
};

struct Ramification {
  std::string divisor;
  std::int64_t index = 1;  // 1 = unramified
};

// Output of one computation route.
struct RouteResult {
  std::vector<QuotientSingularity> singularities;
  std::vector<CycleCurve> resolved;
  std::vector<CycleCurve> contracted;
  std::vector<std::string> contractions;
};

struct QuotientReport {
  std::string kind;          // free, torus, mixed, involution, cover
  std::string input_label;
  std::string subgroup;      // generator in normal form and its order
  std::int64_t order = 1;

  // Fixed-point data of the generator of the setwise stabilizer of C_0.
  std::vector<int> fixed_components;
  std::vector<FixedNode> fixed_nodes;
  bool e_pointwise_fixed = false;
  std::string e_translation;

  std::vector<QuotientSingularity> singularities;
  std::vector<CycleCurve> resolved_cycle;
  std::vector<std::string> contractions;
  std::vector<CycleCurve> final_cycle;
  std::int64_t elliptic_self_int = 0;
  std::vector<Ramification> ramification;

  int m_prime = 0;
  std::optional<Scalar> alpha_prime;
  std::string result_label;

  std::vector<std::string> notes;
  CheckList checks;

  // Counts such as "2xA_2", in node order of first appearance.
  std::vector<std::string> singularity_summary() const;
  bool passed() const { return all_passed(checks); }
};

// Label S(m', c) for the cover datum C* -> C*/<c>, with c normalized to a
// positive delta exponent.
std::string identify_surface(int m_prime, const Scalar& cover_translation);

// Generator theta' of C*/Lambda = C*/<theta'> for Lambda = <alpha, c>,
// after identifying C*/(torsion of Lambda) with C* by w -> w^g.
Scalar quotient_translation(const Scalar& alpha, const Scalar& c);

// Same surface over a context containing the order-th roots of unity.
Surface extend_torsion(const Surface& s, std::int64_t order);

// Both routes for the cyclic group generated by g (finite order on S).
QuotientReport quotient_by_generator(const SurfaceAut& g, const Surface& s,
                                     const std::string& kind);
RouteResult degree_route(const SurfaceAut& g, const Surface& s);
RouteResult fan_route(const SurfaceAut& g, const Surface& s);

QuotientReport quotient_free_cyclic(const Surface& s, const Scalar& beta_prime);
// Works over extend_torsion(s, l); l = 1 gives the identity report.
QuotientReport quotient_by_torus_cyclic(const Surface& s, std::int64_t l);
QuotientReport quotient_by_mixed_cyclic(const Surface& s, std::int64_t j, std::int64_t l);
QuotientReport quotient_involution(const Surface& s);

// Base S(n, theta = delta^{l^2}) over a context with m = n l and modulus
// 2 n l^2, so that every l-th root of its parameter is a cover parameter.
Surface branched_cover_base(int n, int l);
// Cyclic l-fold cover of base branched along its cycle, minimally resolved.
// The base theta must be an l^2-th power (as for branched_cover_base).
QuotientReport build_branched_cover(const Surface& base, std::int64_t l, std::int64_t root);
// The resolved cover S(n l, alpha_root) itself.
Surface branched_cover_surface(const Surface& base, std::int64_t l, std::int64_t root);

}  // namespace inoue
