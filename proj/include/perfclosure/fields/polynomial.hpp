#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perfclosure/fields/field_config.hpp"
#include "perfclosure/fields/fq.hpp"

namespace perfclosure {

/// Exponent vector, one entry per configured variable.
using Monomial = std::vector<BigInt>;

struct Term {
  Monomial exponents;
  FqElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Graded-lexicographic comparison (total degree first, then the first variable
/// is the most significant). Returns true when a sorts strictly before b.
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over F_q. Terms are kept sorted by decreasing
/// grlex order with no zero coefficients, so equal values are bit-identical.
class Polynomial {
 public:
  explicit Polynomial(ConfigPtr config);

  static Polynomial constant(ConfigPtr config, FqElement c);
  static Polynomial from_int(ConfigPtr config, const BigInt& c);
  static Polynomial variable(ConfigPtr config, std::size_t index, const BigInt& exponent = 1);
  static Polynomial monomial(ConfigPtr config, Monomial exponents, FqElement c);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(ConfigPtr config, std::vector<Term> terms);

  const ConfigPtr& config() const noexcept { return config_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Leading term in grlex order. Precondition: nonzero.
  const Term& leading_term() const;
  const FqElement& leading_coefficient() const { return leading_term().coeff; }
  /// Constant coefficient (zero if absent).
  FqElement constant_coefficient() const;

  BigInt total_degree() const;
  BigInt degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FqElement& c) const;
  Polynomial pow(std::uint64_t e) const;
  /// Scaled so that the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  /// x^{p^e}: exponents times p^e, coefficients raised to p^e.
  Polynomial frobenius(const BigInt& e) const;
  /// The p^e-th root if every exponent is divisible by p^e.
  std::optional<Polynomial> pth_root(const BigInt& e) const;

  /// Substitutes v -> v^factor for every variable; coefficients untouched.
  Polynomial inflate(const BigInt& factor) const;
  /// Inverse of inflate, if every exponent is divisible by factor.
  std::optional<Polynomial> deflate(const BigInt& factor) const;

  /// Same polynomial over a configuration containing all of this one's
  /// variables (matched by name).
  Polynomial embed(const ConfigPtr& target) const;

 private:
  Polynomial(ConfigPtr config, std::vector<Term> sorted_terms);

  ConfigPtr config_;
  std::vector<Term> terms_;
};

/// a / b when b divides a exactly in F_q[V].
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
/// Like divide_exact, but throws if the division is not exact.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor in F_q[V]. Univariate Euclid is reached through
/// primitive-part recursion on the last variable; common exponent gcds are
/// deflated first so Frobenius-inflated inputs stay cheap.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace perfclosure
