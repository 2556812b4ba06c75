#pragma once

#include <optional>

#include "perfclosure/fields/polynomial.hpp"

namespace perfclosure {

/// Element of K = F_q(V) in canonical form: gcd(num, den) = 1, den has leading
/// coefficient 1 in grlex order, zero is 0/1.
class RationalFunction {
 public:
  /// The zero element of F_q(V).
  explicit RationalFunction(ConfigPtr config);
  /// num / 1.
  explicit RationalFunction(Polynomial num);

  static RationalFunction from_int(ConfigPtr config, const BigInt& c);
  static RationalFunction constant(ConfigPtr config, FqElement c);
  static RationalFunction variable(ConfigPtr config, std::size_t index);
  /// Takes already-canonical parts without re-normalizing. Internal fast path.
  static RationalFunction from_canonical(Polynomial num, Polynomial den);

  const ConfigPtr& config() const noexcept { return num_.config(); }
  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// Both parts are constants, i.e. the element lies in F_q.
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y);
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  /// Throws DivisionByZero for zero.
  RationalFunction inverse() const;
  RationalFunction pow(std::int64_t e) const;

  /// Substitutes v -> v^factor in both parts; stays canonical.
  RationalFunction inflate(const BigInt& factor) const;
  std::optional<RationalFunction> deflate(const BigInt& factor) const;
  /// Coefficient-wise Frobenius^{-e} on F_q; exponents untouched.
  RationalFunction coefficient_root(const BigInt& e) const;
  /// Coefficient-wise Frobenius^{e} on F_q; exponents untouched.
  RationalFunction coefficient_power(const BigInt& e) const;

  RationalFunction embed(const ConfigPtr& target) const;

 private:
  RationalFunction(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

/// Canonical representative of num/den. Throws ZeroDenominator for den = 0.
RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

/// x^{p^e}, computed term-wise (freshman's dream).
RationalFunction rf_frobenius(const RationalFunction& x, const BigInt& e);

/// The unique y with y^{p^e} = x, if x lies in K^{p^e}.
std::optional<RationalFunction> rf_pth_root(const RationalFunction& x, const BigInt& e);

/// Membership in the biggest perfect subfield of F_q(V), which is F_q.
bool rf_in_perfect_subfield(const RationalFunction& x);

/// Largest e with x in K^{p^e}; nullopt when x lies in every K^{p^e} (x constant).
std::optional<std::uint64_t> rf_pth_power_index(const RationalFunction& x);

}  // namespace perfclosure
