#pragma once

#include <cstdint>

#include "perfclosure/fields/rational_function.hpp"

namespace perfclosure {

/// Element of the perfect closure F_q(V)_per = union over m of F_q(V^{1/p^m}).
/// The pair (level m, value x) stands for x with every variable v replaced by
/// v^{1/p^m}. Values are kept at the minimal level: either m = 0 or some
/// exponent of x is not divisible by p.
class TowerElement {
 public:
  /// Zero at level 0.
  explicit TowerElement(ConfigPtr config);
  /// Level-0 element.
  explicit TowerElement(RationalFunction value);

  const ConfigPtr& config() const noexcept { return value_.config(); }
  std::uint64_t level() const noexcept { return level_; }
  const RationalFunction& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_.is_zero(); }
  bool is_constant() const noexcept { return value_.is_constant(); }

  /// The same element written at level target >= level().
  RationalFunction value_at_level(std::uint64_t target) const;

  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.level_ == b.level_ && a.value_ == b.value_;
  }

 private:
  friend TowerElement te_normalize(std::uint64_t level, RationalFunction value);
  TowerElement(std::uint64_t level, RationalFunction value);

  std::uint64_t level_ = 0;
  RationalFunction value_;
};

/// Lowers (m, x) while every exponent of x is divisible by p.
TowerElement te_normalize(std::uint64_t level, RationalFunction value);

enum class TowerOp { Add, Sub, Mul, Div, Neg, Inv };

/// Exact field operation in F_q(V)_per: both operands are lifted to the larger
/// level, combined, and normalized. Neg and Inv ignore y. Inv/Div of zero throws
/// DivisionByZero.
TowerElement te_arith(TowerOp op, const TowerElement& x, const TowerElement& y);

TowerElement operator+(const TowerElement& x, const TowerElement& y);
TowerElement operator-(const TowerElement& x, const TowerElement& y);
TowerElement operator*(const TowerElement& x, const TowerElement& y);
TowerElement operator/(const TowerElement& x, const TowerElement& y);
TowerElement operator-(const TowerElement& x);

TowerElement te_pow(const TowerElement& x, std::int64_t e);

/// The unique p-th root (the perfect closure is perfect).
TowerElement te_pth_root(const TowerElement& x);
/// x^p.
TowerElement te_frobenius(const TowerElement& x);

/// Whether x lies in F_q(V^{1/p^j})^{p^e}, i.e. its p^e-th root has level <= j.
bool te_in_subfield_power(const TowerElement& x, std::uint64_t j, std::uint64_t e);

TowerElement te_embed(const TowerElement& x, const ConfigPtr& target);

}  // namespace perfclosure
