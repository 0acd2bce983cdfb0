#pragma once

// S(m, alpha) = W / <gamma_{m,alpha}>: descent of cover automorphisms, the
// explicit group H = <nu> x| ((rho, 1), C*(t)) and its structure checks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inoue/autgroup.hpp"
#include "inoue/check.hpp"
#include "inoue/cover.hpp"
#include "inoue/scalar.hpp"

namespace inoue {

// alpha = theta^{2m}, beta = theta^2 and s = theta^{m-1}.
struct Surface {
  ContextPtr ctx;
  int m = 1;
  Scalar theta;

  // theta = delta over a context with torsion modulus 2m * torsion_factor.
  static Surface standard(int m, std::int64_t torsion_factor = 1);
  static Surface with_theta(int m, const Scalar& theta);

  Scalar alpha() const { return theta.pow(2 * m); }
  Scalar beta() const { return theta.pow(2); }
  Scalar rho() const { return Scalar::root_of_unity(ctx, m); }
  CoverAut gamma() const { return gamma_m(m, theta); }
  CoverAut nu() const { return inoue::nu(m, theta); }

  // "S(3, alpha^2)"
  std::string label() const;
};

std::string surface_label(int m, const Scalar& alpha);

// g commutes with the covering generator.
bool descends(const CoverAut& g, const Surface& s);

// An automorphism of S, stored as the canonical coset representative of
// its lift modulo <gamma>: shift in [0, m).
class SurfaceAut {
 public:
  // Throws DomainError if g does not descend.
  static SurfaceAut from_cover(const CoverAut& g, const Surface& s);
  static SurfaceAut identity(const Surface& s);

  const CoverAut& representative() const { return rep_; }
  int m() const { return m_; }
  const Scalar& beta() const { return beta_; }
  const CoverAut& gamma() const { return gamma_; }

  bool operator==(const SurfaceAut& o) const { return rep_ == o.rep_; }
  bool operator!=(const SurfaceAut& o) const { return !(*this == o); }
  std::string to_string() const { return rep_.to_string(); }

 private:
  SurfaceAut(CoverAut rep, int m, Scalar beta, CoverAut gamma)
      : rep_(std::move(rep)), m_(m), beta_(std::move(beta)), gamma_(std::move(gamma)) {}

  CoverAut rep_;
  int m_;
  Scalar beta_;
  CoverAut gamma_;

  static SurfaceAut reduced(CoverAut rep, int m, Scalar beta, CoverAut gamma);

  friend SurfaceAut compose(const SurfaceAut& a, const SurfaceAut& b);
  friend SurfaceAut inverse(const SurfaceAut& a);
};

SurfaceAut compose(const SurfaceAut& a, const SurfaceAut& b);
SurfaceAut inverse(const SurfaceAut& a);
SurfaceAut power(const SurfaceAut& a, std::int64_t k);
bool commute(const SurfaceAut& a, const SurfaceAut& b);
// Order in Aut S, 0 if infinite.
std::int64_t element_order(const SurfaceAut& a);

// Translation class of the induced map w -> c w on E = C* / <alpha>;
// the returned c is normalized by powers of alpha.
Scalar induced_on_E(const SurfaceAut& g);
// Exact monomial-level check that the restriction to E is w -> c w.
bool induces_translation(const SurfaceAut& g);

// Rotation index j mod m read off from the image of C(0).
std::int64_t cycle_rotation(const SurfaceAut& g);

// Element of the symmetry group D_m of the cycle graph.
struct Dihedral {
  std::int64_t rotation = 0;
  bool reflection = false;
  bool operator==(const Dihedral&) const = default;
};
Dihedral dihedral_image(const SurfaceAut& g);

// Permutation matrix on ([E], [C_0], ..., [C_{m-1}]); entry [i][j] = 1 when
// the j-th class maps to the i-th.
using IntMatrix = std::vector<std::vector<int>>;
IntMatrix h2_action(const SurfaceAut& g);

struct CurveConfig {
  struct Component {
    std::string label;
    std::int64_t self_intersection;
  };
  std::vector<Component> components;
  // One entry per intersection point; (i, i) is a node of component i.
  std::vector<std::pair<int, int>> adjacency;
  std::string elliptic_label = "E";
  std::int64_t elliptic_self_intersection = 0;
};
CurveConfig curve_config(const Surface& s);

struct FixedNode {
  int index;  // p_i = C_i meet C_{i+1}, origin of U(i)
  // Exponents of zeta_order on (x_i, y_i).
  std::int64_t weight_x;
  std::int64_t weight_y;
};

struct FixedLocus {
  std::int64_t order = 1;
  std::int64_t rotation = 0;
  std::vector<FixedNode> nodes;
  std::vector<int> fixed_components;
  bool e_pointwise_fixed = false;
  std::optional<Scalar> e_translation;
  bool fixed_point_free() const;
  // Topological Euler number of the fixed point set.
  std::int64_t euler_number(int m) const;
};
// Throws DomainError for elements of infinite order or when `order` is not
// the order of g.
FixedLocus fixed_locus(const SurfaceAut& g, std::int64_t order);
FixedLocus fixed_locus(const SurfaceAut& g);

// H with generators nu, (rho, 1) and the symbolic C*(t).
struct HGroup {
  Surface surface;
  SurfaceAut nu;
  SurfaceAut rho;
  SurfaceAut torus;  // (1, t) with t symbolic
  // Representatives nu^j (rho^a, 1) of H / C*, indexed j * m + a.
  std::vector<SurfaceAut> cosets;
  CheckList checks;

  // (j, a) with g = nu^j (rho^a, v) for some v in C*.
  std::pair<std::int64_t, std::int64_t> coset_of(const SurfaceAut& g) const;
};
HGroup build_H(const Surface& s);

CheckList verify_theorem_1_1(const Surface& s);
CheckList verify_corollary_1_2(const Surface& s);
CheckList verify_remarks(const Surface& s);
// Homomorphism properties of rotation, E-translation and the H_2 action
// over H, exhaustive over torsion parts with symbolic t.
CheckList verify_homomorphisms(const Surface& s);

}  // namespace inoue
