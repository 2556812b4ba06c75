#include "perfclosure/fields/rational_function.hpp"

#include <utility>

#include "perfclosure/error.hpp"

namespace perfclosure {

RationalFunction::RationalFunction(ConfigPtr config)
    : num_(config), den_(Polynomial::from_int(config, 1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::from_int(num_.config(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::from_int(ConfigPtr config, const BigInt& c) {
  return RationalFunction(Polynomial::from_int(std::move(config), c));
}

RationalFunction RationalFunction::constant(ConfigPtr config, FqElement c) {
  return RationalFunction(Polynomial::constant(std::move(config), std::move(c)));
}

RationalFunction RationalFunction::variable(ConfigPtr config, std::size_t index) {
  return RationalFunction(Polynomial::variable(std::move(config), index));
}

RationalFunction RationalFunction::from_canonical(Polynomial num, Polynomial den) {
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den) {
  require_same_field(num.config(), den.config());
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
  if (num.is_zero()) return RationalFunction(num.config());
  Polynomial n = num;
  Polynomial d = den;
  if (!d.is_constant()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      n = exact_quotient(num, g);
      d = exact_quotient(den, g);
    }
  }
  const FqElement scale = num.config()->fq().inv(d.leading_coefficient());
  return RationalFunction::from_canonical(n.scaled(scale), d.scaled(scale));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) return rf_normalize(x.num_ + y.num_, x.den_);
  // With g = gcd(b, d) the sum a/b + c/d can only cancel against g.
  const Polynomial g = gcd(x.den_, y.den_);
  const Polynomial xd = exact_quotient(x.den_, g);
  const Polynomial yd = exact_quotient(y.den_, g);
  Polynomial n = x.num_ * yd + y.num_ * xd;
  if (n.is_zero()) return RationalFunction(x.config());
  Polynomial d = xd * y.den_;
  if (!g.is_one()) {
    const Polynomial h = gcd(n, g);
    if (!h.is_one()) {
      n = exact_quotient(n, h);
      d = exact_quotient(d, h);
    }
  }
  const FqElement scale = x.config()->fq().inv(d.leading_coefficient());
  return RationalFunction(n.scaled(scale), d.scaled(scale));
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) { return x + (-y); }

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
  if (x.is_zero() || y.is_zero()) return RationalFunction(x.config());
  // Cross-cancel first so the products stay small.
  const Polynomial g1 = gcd(x.num_, y.den_);
  const Polynomial g2 = gcd(y.num_, x.den_);
  const Polynomial n = exact_quotient(x.num_, g1) * exact_quotient(y.num_, g2);
  const Polynomial d = exact_quotient(x.den_, g2) * exact_quotient(y.den_, g1);
  const FqElement scale = x.config()->fq().inv(d.leading_coefficient());
  return RationalFunction(n.scaled(scale), d.scaled(scale));
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) { return x * y.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const FqElement scale = config()->fq().inv(num_.leading_coefficient());
  return RationalFunction(den_.scaled(scale), num_.scaled(scale));
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RationalFunction RationalFunction::inflate(const BigInt& factor) const {
  return RationalFunction(num_.inflate(factor), den_.inflate(factor));
}

std::optional<RationalFunction> RationalFunction::deflate(const BigInt& factor) const {
  auto n = num_.deflate(factor);
  if (!n) return std::nullopt;
  auto d = den_.deflate(factor);
  if (!d) return std::nullopt;
  return RationalFunction(*std::move(n), *std::move(d));
}

namespace {

Polynomial map_coefficients(const Polynomial& p, const BigInt& e, bool root) {
  std::vector<Term> terms = p.terms();
  const Fq& fq = p.config()->fq();
  for (auto& t : terms) t.coeff = root ? fq.pth_root(t.coeff, e) : fq.frobenius(t.coeff, e);
  return Polynomial::from_terms(p.config(), std::move(terms));
}

}  // namespace

RationalFunction RationalFunction::coefficient_root(const BigInt& e) const {
  return RationalFunction(map_coefficients(num_, e, true), map_coefficients(den_, e, true));
}

RationalFunction RationalFunction::coefficient_power(const BigInt& e) const {
  return RationalFunction(map_coefficients(num_, e, false), map_coefficients(den_, e, false));
}

RationalFunction RationalFunction::embed(const ConfigPtr& target) const {
  return RationalFunction(num_.embed(target), den_.embed(target));
}

RationalFunction rf_frobenius(const RationalFunction& x, const BigInt& e) {
  // Frobenius is an injective field map that preserves grlex order and maps
  // a monic denominator to a monic one, so the image is already canonical.
  return RationalFunction::from_canonical(x.num().frobenius(e), x.den().frobenius(e));
}

std::optional<RationalFunction> rf_pth_root(const RationalFunction& x, const BigInt& e) {
  auto n = x.num().pth_root(e);
  if (!n) return std::nullopt;
  auto d = x.den().pth_root(e);
  if (!d) return std::nullopt;
  return RationalFunction::from_canonical(*std::move(n), *std::move(d));
}

bool rf_in_perfect_subfield(const RationalFunction& x) { return x.is_constant(); }

std::optional<std::uint64_t> rf_pth_power_index(const RationalFunction& x) {
  if (rf_in_perfect_subfield(x)) return std::nullopt;
  std::uint64_t e = 0;
  RationalFunction cur = x;
  while (auto root = rf_pth_root(cur, 1)) {
    cur = *std::move(root);
    ++e;
  }
  return e;
}

}  // namespace perfclosure
