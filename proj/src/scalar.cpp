#include "inoue/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "inoue/error.hpp"

namespace inoue {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t n) {
  return (a - floor_mod(a, n)) / n;
}

ScalarContext::ScalarContext(int m, std::int64_t modulus,
                             std::vector<std::string> gens)
    : m_(m), modulus_(modulus), generators_(std::move(gens)) {}

ContextPtr ScalarContext::make(int m, std::int64_t modulus,
                               std::vector<std::string> generators) {
  if (m < 1) throw DomainError("scalar context: m must be positive");
  if (modulus == 0) modulus = 2 * m;
  if (modulus < 0 || modulus % (2 * m) != 0)
    throw DomainError("scalar context: modulus must be a positive multiple of 2m");
  if (generators.empty() || generators.front() != "delta")
    throw DomainError("scalar context: first generator must be delta");
  for (const auto& g : generators) {
    if (g == "alpha" || g == "beta")
      throw DomainError("scalar context: alpha and beta are abbreviations");
    if (std::count(generators.begin(), generators.end(), g) != 1)
      throw DomainError("scalar context: duplicate generator " + g);
  }
  return ContextPtr(new ScalarContext(m, modulus, std::move(generators)));
}

std::size_t ScalarContext::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end())
    throw DomainError("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

bool ScalarContext::has_generator(std::string_view name) const {
  return std::find(generators_.begin(), generators_.end(), name) !=
         generators_.end();
}

bool ScalarContext::operator==(const ScalarContext& other) const {
  return m_ == other.m_ && modulus_ == other.modulus_ &&
         generators_ == other.generators_;
}

Scalar::Scalar(ContextPtr ctx, std::vector<std::int64_t> free,
               std::int64_t torsion)
    : ctx_(std::move(ctx)),
      free_(std::move(free)),
      torsion_(floor_mod(torsion, ctx_->modulus())) {}

Scalar Scalar::one(ContextPtr ctx) {
  std::vector<std::int64_t> free(ctx->generators().size(), 0);
  return Scalar(std::move(ctx), std::move(free), 0);
}

Scalar Scalar::generator(ContextPtr ctx, std::string_view name) {
  if (name == "alpha") return alpha(ctx);
  if (name == "beta") return beta(ctx);
  std::vector<std::int64_t> free(ctx->generators().size(), 0);
  free[ctx->index_of(name)] = 1;
  return Scalar(std::move(ctx), std::move(free), 0);
}

Scalar Scalar::root_of_unity(ContextPtr ctx, std::int64_t order,
                             std::int64_t power) {
  if (order < 1 || ctx->modulus() % order != 0)
    throw DomainError("root of unity of order " + std::to_string(order) +
                      " not available modulo " +
                      std::to_string(ctx->modulus()));
  std::vector<std::int64_t> free(ctx->generators().size(), 0);
  std::int64_t step = ctx->modulus() / order;
  std::int64_t n = ctx->modulus();
  return Scalar(std::move(ctx), std::move(free),
                floor_mod(floor_mod(power, order) * step, n));
}

Scalar Scalar::beta(ContextPtr ctx) { return delta(std::move(ctx)).pow(2); }

Scalar Scalar::alpha(ContextPtr ctx) {
  const int m = ctx->m();
  return delta(std::move(ctx)).pow(2 * m);
}

std::int64_t Scalar::free_exponent(std::string_view name) const {
  return free_[ctx_->index_of(name)];
}

void Scalar::check_same_context(const Scalar& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_))
    throw ContextError("scalars belong to different contexts");
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_context(b);
  std::vector<std::int64_t> free(a.free_.size());
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = a.free_[i] + b.free_[i];
  return Scalar(a.ctx_, std::move(free), a.torsion_ + b.torsion_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_context(b);
  return a.torsion_ == b.torsion_ && a.free_ == b.free_;
}

Scalar Scalar::inverse() const { return pow(-1); }

Scalar Scalar::pow(std::int64_t k) const {
  std::vector<std::int64_t> free(free_.size());
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = free_[i] * k;
  const std::int64_t n = ctx_->modulus();
  return Scalar(ctx_, std::move(free), floor_mod(torsion_ * floor_mod(k, n), n));
}

bool Scalar::is_one() const { return torsion_ == 0 && is_torsion(); }

bool Scalar::is_torsion() const {
  return std::all_of(free_.begin(), free_.end(),
                     [](std::int64_t e) { return e == 0; });
}

std::int64_t Scalar::order() const {
  if (!is_torsion()) return 0;
  const std::int64_t n = ctx_->modulus();
  return n / std::gcd(torsion_, n);
}

Scalar Scalar::substitute(const Bindings& bindings) const {
  Scalar result = one(ctx_);
  for (const auto& [name, value] : bindings) {
    if (name == "alpha" || name == "beta")
      throw DomainError("cannot bind the abbreviation '" + name + "'");
    ctx_->index_of(name);
    check_same_context(value);
  }
  const auto& gens = ctx_->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (free_[i] == 0) continue;
    auto it = bindings.find(gens[i]);
    Scalar base = it == bindings.end() ? generator(ctx_, gens[i]) : it->second;
    result *= base.pow(free_[i]);
  }
  return result * Scalar(ctx_, std::vector<std::int64_t>(gens.size(), 0), torsion_);
}

std::complex<double> Scalar::eval(const Assignment& assignment) const {
  using namespace std::complex_literals;
  const auto& gens = ctx_->generators();
  std::complex<double> value =
      std::exp(2.0 * std::numbers::pi * 1i * static_cast<double>(torsion_) /
               static_cast<double>(ctx_->modulus()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (free_[i] == 0) continue;
    auto it = assignment.find(gens[i]);
    if (it == assignment.end())
      throw DomainError("eval: no value assigned to '" + gens[i] + "'");
    if (it->second == 0.0)
      throw DomainError("eval: zero value assigned to '" + gens[i] + "'");
    value *= ipow(it->second, free_[i]);
  }
  return value;
}

namespace {

void append_power(std::ostringstream& os, bool& first, const std::string& name,
                  std::int64_t e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << name;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string Scalar::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (torsion_ != 0) {
    const std::int64_t n = ctx_->modulus();
    const std::int64_t g = std::gcd(torsion_, n);
    append_power(os, first, "zeta_" + std::to_string(n / g), torsion_ / g);
  }
  const auto& gens = ctx_->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::int64_t e = free_[i];
    if (i == 0 && e != 0) {
      const std::int64_t two_m = 2 * ctx_->m();
      if (e % two_m == 0)
        append_power(os, first, "alpha", e / two_m);
      else if (e % 2 == 0)
        append_power(os, first, "beta", e / 2);
      else
        append_power(os, first, "delta", e);
      continue;
    }
    append_power(os, first, gens[i], e);
  }
  return first ? "1" : os.str();
}

std::complex<double> ipow(std::complex<double> z, std::int64_t k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  std::complex<double> result = 1.0;
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

Scalar pow(const Scalar& a, std::int64_t k) { return a.pow(k); }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
std::complex<double> eval_numeric(const Scalar& a, const Assignment& assignment) {
  return a.eval(assignment);
}

}  // namespace inoue
