#include "perfclosure/tower/tower_element.hpp"

#include <algorithm>
#include <utility>

#include "perfclosure/error.hpp"

namespace perfclosure {

TowerElement::TowerElement(ConfigPtr config) : value_(std::move(config)) {}

TowerElement::TowerElement(RationalFunction value) : value_(std::move(value)) {}

TowerElement::TowerElement(std::uint64_t level, RationalFunction value) : level_(level), value_(std::move(value)) {}

RationalFunction TowerElement::value_at_level(std::uint64_t target) const {
  if (target < level_) throw Error(ErrorKind::InvalidArgument, "cannot write an element below its level");
  if (target == level_) return value_;
  return value_.inflate(ipow(config()->p(), target - level_));
}

TowerElement te_normalize(std::uint64_t level, RationalFunction value) {
  const BigInt p = value.config()->p();
  while (level > 0) {
    auto lowered = value.deflate(p);
    if (!lowered) break;
    value = *std::move(lowered);
    --level;
  }
  if (value.is_constant()) level = 0;
  return TowerElement(level, std::move(value));
}

TowerElement te_arith(TowerOp op, const TowerElement& x, const TowerElement& y) {
  switch (op) {
    case TowerOp::Neg:
      return te_normalize(x.level(), -x.value());
    case TowerOp::Inv:
      return te_normalize(x.level(), x.value().inverse());
    default:
      break;
  }
  require_same_field(x.config(), y.config());
  const std::uint64_t level = std::max(x.level(), y.level());
  const RationalFunction a = x.value_at_level(level);
  const RationalFunction b = y.value_at_level(level);
  switch (op) {
    case TowerOp::Add: return te_normalize(level, a + b);
    case TowerOp::Sub: return te_normalize(level, a - b);
    case TowerOp::Mul: return te_normalize(level, a * b);
    case TowerOp::Div: return te_normalize(level, a / b);
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown tower operation");
}

TowerElement operator+(const TowerElement& x, const TowerElement& y) { return te_arith(TowerOp::Add, x, y); }
TowerElement operator-(const TowerElement& x, const TowerElement& y) { return te_arith(TowerOp::Sub, x, y); }
TowerElement operator*(const TowerElement& x, const TowerElement& y) { return te_arith(TowerOp::Mul, x, y); }
TowerElement operator/(const TowerElement& x, const TowerElement& y) { return te_arith(TowerOp::Div, x, y); }
TowerElement operator-(const TowerElement& x) { return te_arith(TowerOp::Neg, x, x); }

TowerElement te_pow(const TowerElement& x, std::int64_t e) { return te_normalize(x.level(), x.value().pow(e)); }

TowerElement te_pth_root(const TowerElement& x) {
  // (m, x)^p = (m, x with coefficients raised to p), so the root keeps the
  // exponents one level up and takes coefficient-wise roots in F_q.
  return te_normalize(x.level() + 1, x.value().coefficient_root(1));
}

TowerElement te_frobenius(const TowerElement& x) {
  return te_normalize(x.level(), rf_frobenius(x.value(), 1));
}

bool te_in_subfield_power(const TowerElement& x, std::uint64_t j, std::uint64_t e) {
  TowerElement root = x;
  for (std::uint64_t i = 0; i < e; ++i) {
    root = te_pth_root(root);
    if (root.level() > j) return false;
  }
  return root.level() <= j;
}

TowerElement te_embed(const TowerElement& x, const ConfigPtr& target) {
  return te_normalize(x.level(), x.value().embed(target));
}

}  // namespace perfclosure
