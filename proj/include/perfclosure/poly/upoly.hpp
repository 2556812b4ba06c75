#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perfclosure/error.hpp"
#include "perfclosure/fields/format.hpp"
#include "perfclosure/poly/domain.hpp"

namespace perfclosure {

/// Indeterminate of a univariate polynomial. A level m > 0 marks the tower root
/// t_m = t^{1/p^m}; plain indeterminates such as X use level 0.
struct Symbol {
  std::string name;
  std::uint64_t level = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Dense univariate polynomial over a coefficient domain, lowest degree first,
/// with no trailing zeros.
template <CoefficientDomain D>
class UPoly {
 public:
  using Element = typename D::Element;

  UPoly(D domain, Symbol symbol) : domain_(std::move(domain)), symbol_(std::move(symbol)) {}
  UPoly(D domain, Symbol symbol, std::vector<Element> coeffs)
      : domain_(std::move(domain)), symbol_(std::move(symbol)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static UPoly constant(D domain, Symbol symbol, Element c) {
    return UPoly(std::move(domain), std::move(symbol), std::vector<Element>{std::move(c)});
  }
  /// c * symbol^k.
  static UPoly monomial(D domain, Symbol symbol, Element c, std::size_t k) {
    std::vector<Element> coeffs(k + 1, domain.zero());
    coeffs[k] = std::move(c);
    return UPoly(std::move(domain), std::move(symbol), std::move(coeffs));
  }

  const D& domain() const noexcept { return domain_; }
  const Symbol& symbol() const noexcept { return symbol_; }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : domain_.zero(); }
  const Element& leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && domain_.equal(coeffs_.back(), domain_.one()); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  UPoly with_symbol(Symbol symbol) const { return UPoly(domain_, std::move(symbol), coeffs_); }

  UPoly operator-() const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(domain_.neg(c));
    return UPoly(domain_, symbol_, std::move(out));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    a.check_compatible(b);
    std::vector<Element> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.domain_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.coeffs_.size() && i < b.coeffs_.size()) {
        out[i] = a.domain_.add(a.coeffs_[i], b.coeffs_[i]);
      } else {
        out[i] = i < a.coeffs_.size() ? a.coeffs_[i] : b.coeffs_[i];
      }
    }
    return UPoly(a.domain_, a.symbol_, std::move(out));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.domain_, a.symbol_);
    std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.domain_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.domain_.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.domain_.is_zero(b.coeffs_[j])) continue;
        out[i + j] = a.domain_.add(out[i + j], a.domain_.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return UPoly(a.domain_, a.symbol_, std::move(out));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (!(a.symbol_ == b.symbol_) || a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!a.domain_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
    }
    return true;
  }

  UPoly scaled(const Element& c) const {
    std::vector<Element> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(domain_.mul(x, c));
    return UPoly(domain_, symbol_, std::move(out));
  }

  void check_compatible(const UPoly& other) const {
    if (!(symbol_ == other.symbol_)) {
      throw Error(ErrorKind::InvalidArgument, "polynomials in different indeterminates");
    }
    require_same_field(domain_.config(), other.domain_.config());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && domain_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  D domain_;
  Symbol symbol_;
  std::vector<Element> coeffs_;
};

/// Univariate polynomial with leading coefficient 1. Ideal generators and the
/// inputs of the irreducibility tests use this type.
template <CoefficientDomain D>
class MonicPoly {
 public:
  using Element = typename D::Element;

  explicit MonicPoly(UPoly<D> poly) : poly_(std::move(poly)) {
    if (!poly_.is_monic()) throw Error(ErrorKind::InvalidArgument, "polynomial is not monic");
  }

  const UPoly<D>& poly() const noexcept { return poly_; }
  const D& domain() const noexcept { return poly_.domain(); }
  const Symbol& symbol() const noexcept { return poly_.symbol(); }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(poly_.degree()); }
  /// a_i for i < degree(); 1 for i = degree().
  Element coeff(std::size_t i) const { return poly_.coeff(i); }

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.poly_ == b.poly_; }

 private:
  UPoly<D> poly_;
};

/// f = q*g + r with deg r < deg g. Throws ZeroDivisor when g = 0.
template <CoefficientDomain D>
std::pair<UPoly<D>, UPoly<D>> poly_divrem(const UPoly<D>& f, const UPoly<D>& g) {
  f.check_compatible(g);
  if (g.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  const D& dom = f.domain();
  std::vector<typename D::Element> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  if (f.degree() < g.degree()) return {UPoly<D>(dom, f.symbol()), f};
  std::vector<typename D::Element> quot(rem.size() - dg, dom.zero());
  const auto lead_inv = dom.inv(g.leading());
  const bool monic = g.is_monic();
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (dom.is_zero(rem[k])) continue;
    auto c = monic ? rem[k] : dom.mul(rem[k], lead_inv);
    for (std::size_t j = 0; j <= dg; ++j) {
      if (dom.is_zero(g.coeffs()[j])) continue;
      rem[k - dg + j] = dom.sub(rem[k - dg + j], dom.mul(c, g.coeffs()[j]));
    }
    quot[k - dg] = std::move(c);
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {UPoly<D>(dom, f.symbol(), std::move(quot)), UPoly<D>(dom, f.symbol(), std::move(rem))};
}

template <CoefficientDomain D>
UPoly<D> poly_rem(const UPoly<D>& f, const UPoly<D>& g) {
  return poly_divrem(f, g).second;
}

template <CoefficientDomain D>
bool poly_divides(const UPoly<D>& g, const UPoly<D>& f) {
  return poly_rem(f, g).is_zero();
}

template <CoefficientDomain D>
UPoly<D> make_monic(const UPoly<D>& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return f.scaled(f.domain().inv(f.leading()));
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <CoefficientDomain D>
UPoly<D> poly_gcd(UPoly<D> a, UPoly<D> b) {
  while (!b.is_zero()) {
    UPoly<D> r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <CoefficientDomain D>
UPoly<D> derivative(const UPoly<D>& f) {
  const D& dom = f.domain();
  std::vector<typename D::Element> out;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out.push_back(dom.mul(dom.from_int(BigInt(i)), f.coeffs()[i]));
  }
  return UPoly<D>(dom, f.symbol(), std::move(out));
}

template <CoefficientDomain D>
UPoly<D> poly_pow(const UPoly<D>& f, std::uint64_t e) {
  UPoly<D> result = UPoly<D>::constant(f.domain(), f.symbol(), f.domain().one());
  UPoly<D> base = f;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

/// f(Y^k) written in the new indeterminate Y.
template <CoefficientDomain D>
UPoly<D> substitute_power(const UPoly<D>& f, std::size_t k, Symbol target) {
  if (f.is_zero()) return UPoly<D>(f.domain(), std::move(target));
  std::vector<typename D::Element> out(static_cast<std::size_t>(f.degree()) * k + 1, f.domain().zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * k] = f.coeffs()[i];
  return UPoly<D>(f.domain(), std::move(target), std::move(out));
}

/// Coefficient-wise Frobenius a_i -> a_i^p; the indeterminate is left alone.
template <CoefficientDomain D>
UPoly<D> frobenius_coefficients(const UPoly<D>& f, Symbol target) {
  std::vector<typename D::Element> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(f.domain().frobenius(c));
  return UPoly<D>(f.domain(), std::move(target), std::move(out));
}

/// Coefficient-wise p-th roots, if all exist.
template <CoefficientDomain D>
std::optional<UPoly<D>> root_coefficients(const UPoly<D>& f, Symbol target) {
  std::vector<typename D::Element> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto r = f.domain().pth_root(c);
    if (!r) return std::nullopt;
    out.push_back(*std::move(r));
  }
  return UPoly<D>(f.domain(), std::move(target), std::move(out));
}

/// h with h^p = f in K[X], when f lies in K^p[X^p].
template <CoefficientDomain D>
std::optional<UPoly<D>> poly_pth_root(const UPoly<D>& f) {
  const std::size_t p = f.domain().characteristic();
  std::vector<typename D::Element> out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (i % p != 0) {
      if (!f.domain().is_zero(c)) return std::nullopt;
      continue;
    }
    auto r = f.domain().pth_root(c);
    if (!r) return std::nullopt;
    out.push_back(*std::move(r));
  }
  return UPoly<D>(f.domain(), f.symbol(), std::move(out));
}

/// Exact quotient f / g; throws if g does not divide f.
template <CoefficientDomain D>
UPoly<D> poly_exact_quotient(const UPoly<D>& f, const UPoly<D>& g) {
  auto [q, r] = poly_divrem(f, g);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return q;
}

inline std::string format_element(const FqDomain& d, const FqElement& x) { return format_fq(x, d.cfg); }
inline std::string format_element(const RationalDomain&, const RationalFunction& x) { return format_rational(x); }
inline std::string format_element(const PerfectDomain&, const TowerElement& x) { return format_tower(x); }

std::string format_symbol_power(const Symbol& symbol, std::size_t k, std::uint64_t p);

/// "X^3 + (s^2 + 1)*X + s"; tower indeterminates render as t^(k/p^m).
template <CoefficientDomain D>
std::string format_upoly(const UPoly<D>& f) {
  if (f.is_zero()) return "0";
  const D& dom = f.domain();
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const auto& c = f.coeffs()[k];
    if (dom.is_zero(c)) continue;
    std::string coeff = format_element(dom, c);
    std::string power = format_symbol_power(f.symbol(), k, dom.characteristic());
    std::string term;
    if (power.empty()) {
      term = coeff;
    } else if (dom.equal(c, dom.one())) {
      term = power;
    } else {
      term = (is_atomic_text(coeff) ? coeff : "(" + coeff + ")") + "*" + power;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

template <CoefficientDomain D>
std::string format_upoly(const MonicPoly<D>& f) {
  return format_upoly(f.poly());
}

}  // namespace perfclosure
