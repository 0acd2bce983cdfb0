#pragma once

// Toric model of W: the ray family v_k = (1, k) in N = Z^2, refinements
// N' = N + Z (a, b)/l realizing quotients by finite torus subgroups,
// Hirzebruch-Jung resolution and self-intersections from ray recurrences.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "inoue/cover.hpp"

namespace inoue {

using Vec2 = std::array<std::int64_t, 2>;

std::int64_t det2(const Vec2& a, const Vec2& b);
Vec2 act(const ExponentMatrix& a, const Vec2& v);

// N' = N + Z (a, b)/l, held as l N' inside Z^2 with a lower-triangular
// basis (columns (b00, b10) and (0, b11)).
class Lattice {
 public:
  static Lattice standard();
  // Throws DomainError unless l >= 1 and gcd(a, b, l) = 1.
  static Lattice refined(std::int64_t l, std::int64_t a, std::int64_t b);

  std::int64_t scale() const { return scale_; }
  const Vec2& generator() const { return gen_; }
  // [N' : N]
  std::int64_t index() const;

  // Coordinates of w in l N' (w given in Z^2 = l N coordinates scaled by l).
  Vec2 coordinates(const Vec2& w) const;
  bool contains(const Vec2& w) const;
  // Coordinates of the primitive N'-vector on the ray through n in N,
  // together with the multiplicity e (n = e * primitive).
  std::pair<Vec2, std::int64_t> primitive_on_ray(const Vec2& n) const;
  // The N-linear map a in the basis of N'; throws DomainError if a does not
  // preserve N'.
  ExponentMatrix in_basis(const ExponentMatrix& a) const;

 private:
  std::int64_t scale_ = 1;
  Vec2 gen_{0, 0};
  std::int64_t b00_ = 1, b10_ = 0, b11_ = 1;
};

// Index-l refinement for the subgroup <(rho_l, rho_l^j)>.
Lattice quotient_lattice(const Lattice& base, std::int64_t l, std::int64_t j);

struct RaySequence {
  std::int64_t first = 0;
  std::vector<Vec2> rays;
  const Vec2& at(std::int64_t k) const { return rays.at(k - first); }
};

// Rays of C(k), k in [lo, hi], read off as dual vectors of the chart
// characters obtained by iterating the U(k) -> U(k+1) transition from U(0).
RaySequence rays_of_W(std::int64_t lo, std::int64_t hi);
// Characters (x_k, y_k) of U(k) as rows, in the (w, x) basis.
ExponentMatrix chart_characters(std::int64_t k);

struct Chain {
  std::vector<Vec2> rays;              // interior rays, from the p side
  std::vector<std::int64_t> a;         // C^2 = -a
  std::int64_t d = 1;                  // order of the cyclic quotient
  std::int64_t q = 0;                  // type 1/d(1, q)
  bool smooth() const { return d == 1; }
};

// Minimal resolution of cone(p, q) in Z^2. Throws DomainError for degenerate
// or negatively oriented cones.
Chain hj_resolve(const Vec2& p, const Vec2& q);
// d/q = [a_1, ..., a_r] evaluated from the chain; (1, 0) for the empty chain.
std::pair<std::int64_t, std::int64_t> continued_fraction(const std::vector<std::int64_t>& a);
// Chain of 1/d(1, q); empty for d = 1.
std::vector<std::int64_t> hj_chain(std::int64_t d, std::int64_t q);
// "A_{d-1}" for 1/d(1, d-1), else "1/d(1,q)".
std::string singularity_label(std::int64_t d, std::int64_t q);

// a_k with v_{k-1} + v_{k+1} = a_k v_k for the interior rays of a chain
// (first and last entries are only used as neighbours). Throws DomainError
// if an adjacent pair is not unimodular.
std::vector<std::int64_t> cycle_self_intersections(const std::vector<Vec2>& rays);

// One period of an invariant fan in the basis of N'. The ray after the last
// is period(rays[0]).
struct PeriodicFan {
  struct Ray {
    Vec2 v;
    std::string label;        // "C{k}" for original rays, "E{k}.{t}" inserted
    std::int64_t multiplicity = 1;  // n_k = e * primitive, for original rays
  };
  std::vector<Ray> rays;
  ExponentMatrix period{};

  Vec2 extended(std::int64_t i) const;  // any index, via the period map
  // -C^2 of each curve in the lift.
  std::vector<std::int64_t> lift_degrees() const;
  // Self-intersections in the quotient (2 - a for a single nodal curve).
  std::vector<std::int64_t> self_intersections() const;
};

struct FanSingularity {
  std::int64_t node;  // cone (v_node, v_node+1)
  std::int64_t d;
  std::int64_t q;
  std::vector<std::int64_t> chain;
};

struct FanRoute {
  Lattice lattice;
  std::vector<FanSingularity> singularities;
  PeriodicFan resolved;
  PeriodicFan contracted;
  std::vector<std::string> contractions;
};

// Fan of W / <torus subgroup, shift element>: `period` is the N-action of
// the minimal-shift element, moving v_0 to v_shift.
FanRoute fan_quotient(const Lattice& lattice, std::int64_t shift,
                      const ExponentMatrix& period);

// Remove a-value-1 rays (toric blow-down), first in cycle order, while the
// period has at least two rays.
PeriodicFan contract_minus_one(PeriodicFan fan, std::vector<std::string>* removed);

}  // namespace inoue
