#pragma once

// Exact arithmetic in the multiplicative group generated by a fixed list of
// free symbols (delta, s, t by default) and the N-th roots of unity.
//
// alpha and beta are the named abbreviations delta^{2m} and delta^2; they are
// never independent generators.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace inoue {

class ScalarContext;
using ContextPtr = std::shared_ptr<const ScalarContext>;

class ScalarContext {
 public:
  // N = 0 selects the default modulus 2m. N must be a multiple of 2m.
  static ContextPtr make(int m, std::int64_t modulus = 0,
                         std::vector<std::string> generators = {"delta", "s",
                                                                "t"});

  int m() const { return m_; }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::string>& generators() const { return generators_; }

  // Index of a free generator, throws DomainError if the name is unknown.
  std::size_t index_of(std::string_view name) const;
  bool has_generator(std::string_view name) const;

  bool operator==(const ScalarContext& other) const;

 private:
  ScalarContext(int m, std::int64_t modulus, std::vector<std::string> gens);

  int m_;
  std::int64_t modulus_;
  std::vector<std::string> generators_;
};

using Assignment = std::map<std::string, std::complex<double>, std::less<>>;

class Scalar;
using Bindings = std::map<std::string, Scalar, std::less<>>;

class Scalar {
 public:
  static Scalar one(ContextPtr ctx);
  static Scalar generator(ContextPtr ctx, std::string_view name);
  // zeta_order^power; order must divide the context modulus.
  static Scalar root_of_unity(ContextPtr ctx, std::int64_t order,
                              std::int64_t power = 1);
  static Scalar delta(ContextPtr ctx) { return generator(ctx, "delta"); }
  static Scalar beta(ContextPtr ctx);
  static Scalar alpha(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<std::int64_t>& free_exponents() const { return free_; }
  std::int64_t free_exponent(std::string_view name) const;
  // Exponent of zeta_N, reduced into [0, N).
  std::int64_t torsion_exponent() const { return torsion_; }

  Scalar inverse() const;
  Scalar pow(std::int64_t k) const;

  bool is_one() const;
  bool is_torsion() const;
  // Multiplicative order; 0 for elements of infinite order.
  std::int64_t order() const;

  // Homomorphic image under generator -> Scalar. Binding "alpha" or "beta"
  // is rejected: they are abbreviations, not generators.
  Scalar substitute(const Bindings& bindings) const;

  std::complex<double> eval(const Assignment& assignment) const;

  std::string to_string() const;

  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Scalar(ContextPtr ctx, std::vector<std::int64_t> free, std::int64_t torsion);
  void check_same_context(const Scalar& other) const;

  ContextPtr ctx_;
  std::vector<std::int64_t> free_;
  std::int64_t torsion_;
};

Scalar pow(const Scalar& a, std::int64_t k);
Scalar mul(const Scalar& a, const Scalar& b);
std::complex<double> eval_numeric(const Scalar& a, const Assignment& assignment);

// Integer power by repeated squaring.
std::complex<double> ipow(std::complex<double> z, std::int64_t k);

std::int64_t floor_mod(std::int64_t a, std::int64_t n);
std::int64_t floor_div(std::int64_t a, std::int64_t n);

}  // namespace inoue
