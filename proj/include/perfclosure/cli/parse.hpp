#pragma once

#include <string>
#include <string_view>

#include "perfclosure/poly/upoly.hpp"

namespace perfclosure {

// Grammar:
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := atom ('^' exponent)?
//   exponent := ['-'] INT | '(' ['-'] INT ['/' INT ['^' INT]] ')'
//   atom     := INT | IDENT | '(' expr ')'
// Exponent denominators must be powers of p. The identifier `a` names the
// generator of F_q when q is not prime.

/// Element of F_q(V)_per over the variables of config.
TowerElement parse_tower_element(std::string_view text, const ConfigPtr& config);

/// Element of F_q(V); fractional exponents are rejected.
RationalFunction parse_rational(std::string_view text, const ConfigPtr& config);

/// Polynomial in symbol (a level > 0 allows exponents in (1/p^level)Z) with
/// coefficients from the domain. Throws NotPolynomial if the symbol occurs in a
/// denominator or with a non-admissible exponent, WrongCoefficientField if a
/// coefficient lies outside the domain.
UPoly<FqDomain> parse_upoly(std::string_view text, const FqDomain& dom, const Symbol& symbol);
UPoly<RationalDomain> parse_upoly(std::string_view text, const RationalDomain& dom, const Symbol& symbol);
UPoly<PerfectDomain> parse_upoly(std::string_view text, const PerfectDomain& dom, const Symbol& symbol);

template <CoefficientDomain D>
MonicPoly<D> parse_monic(std::string_view text, const D& dom, const Symbol& symbol) {
  UPoly<D> f = parse_upoly(text, dom, symbol);
  if (!f.is_monic()) throw Error(ErrorKind::InvalidArgument, "polynomial '" + std::string(text) + "' is not monic");
  return MonicPoly<D>(std::move(f));
}

}  // namespace perfclosure
