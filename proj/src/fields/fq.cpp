#include "perfclosure/fields/fq.hpp"

#include <utility>

#include "perfclosure/error.hpp"

namespace perfclosure {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

Fq::Fq(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), d_(modulus.empty() ? 1 : modulus.size() - 1), modulus_(std::move(modulus)) {
  if (p_ < 2 || p_ >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::InvalidConfig, "characteristic must lie in [2, 2^31)");
  }
  if (!modulus_.empty()) {
    if (modulus_.size() < 2) throw Error(ErrorKind::InvalidConfig, "modulus must have degree >= 1");
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1) throw Error(ErrorKind::InvalidConfig, "modulus must be monic");
  }
  order_ = ipow(p_, d_);
}

FqElement Fq::zero() const { return FqElement{std::vector<std::uint64_t>(d_, 0)}; }

FqElement Fq::one() const {
  FqElement e = zero();
  e.coords[0] = 1 % p_;
  return e;
}

FqElement Fq::from_int(const BigInt& value) const {
  BigInt r = value % p_;
  if (r < 0) r += p_;
  FqElement e = zero();
  e.coords[0] = static_cast<std::uint64_t>(r);
  return e;
}

FqElement Fq::generator() const {
  if (d_ == 1) throw Error(ErrorKind::InvalidArgument, "F_p has no adjoined generator");
  FqElement e = zero();
  e.coords[1] = 1;
  return e;
}

bool Fq::is_zero(const FqElement& x) const noexcept {
  for (auto c : x.coords) {
    if (c != 0) return false;
  }
  return true;
}

bool Fq::is_one(const FqElement& x) const noexcept {
  if (x.coords.empty() || x.coords[0] != 1) return false;
  for (std::size_t i = 1; i < x.coords.size(); ++i) {
    if (x.coords[i] != 0) return false;
  }
  return true;
}

bool Fq::is_prime_field_element(const FqElement& x) const noexcept {
  for (std::size_t i = 1; i < x.coords.size(); ++i) {
    if (x.coords[i] != 0) return false;
  }
  return true;
}

FqElement Fq::add(const FqElement& x, const FqElement& y) const {
  FqElement r = zero();
  for (std::size_t i = 0; i < d_; ++i) {
    std::uint64_t s = x.coords[i] + y.coords[i];
    r.coords[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FqElement Fq::sub(const FqElement& x, const FqElement& y) const {
  FqElement r = zero();
  for (std::size_t i = 0; i < d_; ++i) {
    r.coords[i] = x.coords[i] >= y.coords[i] ? x.coords[i] - y.coords[i] : x.coords[i] + p_ - y.coords[i];
  }
  return r;
}

FqElement Fq::neg(const FqElement& x) const { return sub(zero(), x); }

FqElement Fq::mul(const FqElement& x, const FqElement& y) const {
  if (d_ == 1) return FqElement{{mulmod(x.coords[0], y.coords[0], p_)}};
  std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(x.coords[i], y.coords[j], p_)) % p_;
    }
  }
  // Reduce by the monic modulus from the top down.
  for (std::size_t k = prod.size(); k-- > d_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      const std::uint64_t sub_term = mulmod(c, modulus_[j], p_);
      prod[k - d_ + j] = (prod[k - d_ + j] + p_ - sub_term) % p_;
    }
    prod[k] = 0;
  }
  prod.resize(d_);
  return FqElement{std::move(prod)};
}

FqElement Fq::pow(const FqElement& x, const BigInt& e) const {
  if (e < 0) return pow(inv(x), -e);
  if (d_ == 1) {
    const BigInt reduced = e == 0 ? BigInt(0) : ((e - 1) % (p_ - 1)) + 1;
    return FqElement{{powmod(x.coords[0], static_cast<std::uint64_t>(reduced), p_)}};
  }
  FqElement result = one();
  FqElement base = x;
  BigInt k = e;
  while (k != 0) {
    if ((k & 1) != 0) result = mul(result, base);
    k >>= 1;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

FqElement Fq::inv(const FqElement& x) const {
  if (is_zero(x)) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  return pow(x, order_ - 2);
}

FqElement Fq::frobenius_steps(const FqElement& x, std::uint64_t steps) const {
  FqElement r = x;
  for (std::uint64_t i = 0; i < steps; ++i) r = pow(r, BigInt(p_));
  return r;
}

FqElement Fq::frobenius(const FqElement& x, const BigInt& e) const {
  if (d_ == 1) return x;
  BigInt r = e % d_;
  if (r < 0) r += d_;
  return frobenius_steps(x, static_cast<std::uint64_t>(r));
}

FqElement Fq::pth_root(const FqElement& x, const BigInt& e) const { return frobenius(x, -e); }

std::string Fq::format(const FqElement& x, const std::string& generator_name) const {
  if (d_ == 1) return std::to_string(x.coords[0]);
  std::string out;
  for (std::size_t i = d_; i-- > 0;) {
    const std::uint64_t c = x.coords[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += generator_name;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace perfclosure
