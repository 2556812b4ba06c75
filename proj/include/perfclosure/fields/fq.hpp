#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace perfclosure {

/// Arbitrary-precision integer used for exponents, levels raised to p^m and field orders.
using BigInt = boost::multiprecision::cpp_int;

/// p^e as an arbitrary-precision integer.
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

bool is_prime(std::uint64_t n) noexcept;

/// Element of F_q, q = p^d: coordinates in the power basis 1, a, ..., a^{d-1} of the modulus.
struct FqElement {
  std::vector<std::uint64_t> coords;

  friend bool operator==(const FqElement&, const FqElement&) = default;
  friend auto operator<=>(const FqElement&, const FqElement&) = default;
};

/// Arithmetic context for F_q. Does not verify irreducibility of the modulus;
/// FieldConfig does that before handing one out.
class Fq {
 public:
  /// modulus: monic, low-to-high coefficients, length d + 1. Empty means d = 1 (plain F_p).
  Fq(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return d_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  const BigInt& order() const noexcept { return order_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(const BigInt& value) const;
  /// The class of the modulus variable (only meaningful for d > 1).
  FqElement generator() const;

  bool is_zero(const FqElement& x) const noexcept;
  bool is_one(const FqElement& x) const noexcept;
  /// True when x lies in the prime field F_p.
  bool is_prime_field_element(const FqElement& x) const noexcept;

  FqElement add(const FqElement& x, const FqElement& y) const;
  FqElement sub(const FqElement& x, const FqElement& y) const;
  FqElement neg(const FqElement& x) const;
  FqElement mul(const FqElement& x, const FqElement& y) const;
  FqElement inv(const FqElement& x) const;
  FqElement pow(const FqElement& x, const BigInt& e) const;

  /// x^{p^e}. Frobenius has order d on F_q, so only e mod d matters.
  FqElement frobenius(const FqElement& x, const BigInt& e) const;
  /// The unique y with y^{p^e} = x (F_q is perfect).
  FqElement pth_root(const FqElement& x, const BigInt& e) const;

  std::string format(const FqElement& x, const std::string& generator_name) const;

 private:
  FqElement frobenius_steps(const FqElement& x, std::uint64_t steps) const;

  std::uint64_t p_;
  std::size_t d_;
  std::vector<std::uint64_t> modulus_;
  BigInt order_;
};

}  // namespace perfclosure
