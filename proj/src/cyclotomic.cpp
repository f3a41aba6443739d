#include "isoprod/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "isoprod/errors.hpp"

namespace isoprod {

namespace {

struct Basis {
  std::uint32_t phi = 1;
  // reduction[k] = coordinates of zeta^k in the power basis, 0 <= k < e
  std::vector<std::vector<std::int64_t>> reduction;
};

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den is monic
  std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const std::vector<std::int64_t>& cyclotomic_polynomial_locked(std::uint32_t n) {
  static std::map<std::uint32_t, std::unique_ptr<std::vector<std::int64_t>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial_locked(d));
  auto& slot = cache[n];
  slot = std::make_unique<std::vector<std::int64_t>>(std::move(p));
  return *slot;
}

const Basis& basis(std::uint32_t e) {
  std::lock_guard lock(registry_mutex());
  static std::map<std::uint32_t, std::unique_ptr<Basis>> cache;
  auto it = cache.find(e);
  if (it != cache.end()) return *it->second;
  auto b = std::make_unique<Basis>();
  const auto& phi_poly = cyclotomic_polynomial_locked(e);
  b->phi = static_cast<std::uint32_t>(phi_poly.size() - 1);
  b->reduction.assign(e, std::vector<std::int64_t>(b->phi, 0));
  std::vector<std::int64_t> cur(b->phi, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    b->reduction[k] = cur;
    // multiply by x and reduce with x^phi = -sum c_i x^i
    std::int64_t top = cur[b->phi - 1];
    for (std::uint32_t i = b->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::uint32_t i = 0; i < b->phi; ++i) cur[i] -= top * phi_poly[i];
  }
  auto& slot = cache[e];
  slot = std::move(b);
  return *slot;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  std::lock_guard lock(registry_mutex());
  return cyclotomic_polynomial_locked(n);
}

Cyclotomic::Cyclotomic(std::uint32_t exponent) : exponent_(exponent) {
  if (exponent == 0) throw DomainError("cyclotomic exponent must be positive");
  coeffs_.assign(basis(exponent).phi, 0);
}

Cyclotomic Cyclotomic::integer(std::uint32_t exponent, std::int64_t value) {
  Cyclotomic c(exponent);
  c.coeffs_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t exponent, std::int64_t k) {
  Cyclotomic c(exponent);
  std::int64_t e = exponent;
  c.coeffs_ = basis(exponent).reduction[static_cast<std::size_t>(((k % e) + e) % e)];
  return c;
}

Cyclotomic Cyclotomic::from_powers(std::uint32_t exponent, std::span<const std::int64_t> coeffs) {
  Cyclotomic c(exponent);
  const auto& b = basis(exponent);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& red = b.reduction[k % exponent];
    for (std::size_t i = 0; i < red.size(); ++i) c.coeffs_[i] += coeffs[k] * red[i];
  }
  return c;
}

bool Cyclotomic::is_zero() const noexcept {
  for (auto v : coeffs_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::int64_t Cyclotomic::to_integer() const {
  if (!is_rational()) throw ConsistencyError("cyclotomic value " + to_string() + " is not a rational integer");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::int64_t> powers(exponent_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[(exponent_ - i) % exponent_] += coeffs_[i];
  return from_powers(exponent_, powers);
}

Cyclotomic Cyclotomic::embed(std::uint32_t multiple) const {
  if (multiple % exponent_ != 0) throw DomainError("embed: target exponent is not a multiple");
  std::uint32_t step = multiple / exponent_;
  std::vector<std::int64_t> powers(multiple, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) powers[i * step] += coeffs_[i];
  return from_powers(multiple, powers);
}

bool Cyclotomic::divisible_by(std::int64_t d) const noexcept {
  for (auto v : coeffs_)
    if (v % d != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::divided_by(std::int64_t d) const {
  if (!divisible_by(d)) throw ConsistencyError("cyclotomic value " + to_string() + " is not divisible by " + std::to_string(d));
  Cyclotomic c = *this;
  for (auto& v : c.coeffs_) v /= d;
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.exponent_ != exponent_) throw DomainError("cyclotomic exponents differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.exponent_ != exponent_) throw DomainError("cyclotomic exponents differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t s) {
  for (auto& v : coeffs_) v *= s;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.exponent_ != b.exponent_) throw DomainError("cyclotomic exponents differ");
  const std::uint32_t e = a.exponent_;
  std::vector<std::int64_t> powers(e, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) powers[(i + j) % e] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic::from_powers(e, powers);
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return std::to_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(c < 0 ? -c : c);
    } else {
      std::uint32_t g = std::gcd(static_cast<std::uint32_t>(i), exponent_);
      std::uint32_t n = exponent_ / g, k = static_cast<std::uint32_t>(i) / g;
      term = "E(" + std::to_string(n) + ")" + (k == 1 ? "" : "^" + std::to_string(k));
      if (c != 1 && c != -1) term = std::to_string(c < 0 ? -c : c) + "*" + term;
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

}  // namespace isoprod
