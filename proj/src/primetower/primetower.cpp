#include "perfclosure/primetower/primetower.hpp"

#include <map>

namespace perfclosure {

std::string to_string(LiftCase c) { return c == LiftCase::Root ? "ROOT_CASE" : "EXTEND_CASE"; }

namespace {

void require_contractible(std::uint64_t level) {
  if (level == 0) throw Error(ErrorKind::InvalidArgument, "a prime at level 0 has nothing to contract to");
}

// Groups the V-monomials of polynomial coefficients c_i into F_q[t] polynomials
// sum_i coeff_mu(c_i) t^i and returns their monic gcd.
UPoly<FqDomain> content_of(const FqDomain& dom, const Symbol& symbol, const std::vector<Polynomial>& coeffs) {
  std::map<Monomial, std::vector<FqElement>> groups;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& term : coeffs[i].terms()) {
      auto& column = groups[term.exponents];
      if (column.size() <= i) column.resize(i + 1, dom.zero());
      column[i] = term.coeff;
    }
  }
  UPoly<FqDomain> g(dom, symbol);
  for (auto& [mono, column] : groups) g = poly_gcd(g, UPoly<FqDomain>(dom, symbol, std::move(column)));
  return g;
}

std::vector<Polynomial> cleared(const UPoly<RationalDomain>& g) {
  const ConfigPtr& cfg = g.domain().cfg;
  Polynomial denom = Polynomial::from_int(cfg, 1);
  for (const auto& a : g.coeffs()) denom = exact_quotient(denom * a.den(), gcd(denom, a.den()));
  std::vector<Polynomial> out;
  for (const auto& a : g.coeffs()) out.push_back(exact_quotient(a.num() * denom, a.den()));
  return out;
}

}  // namespace

TowerPrime<RationalDomain> contract_prime(const TowerPrime<RationalDomain>& P, const OracleBounds& bounds) {
  require_contractible(P.level());
  const MonicPoly<RationalDomain>& G = P.gen();
  if (G.domain().cfg->nvars() >= 2) return TowerPrime<RationalDomain>(P.level() - 1, contraction_by_shape(G));
  const MonicPoly<RationalDomain> mu = untwist_mu(G);
  const auto p = static_cast<std::size_t>(G.domain().characteristic());
  for (const auto& factor : factor_oracle(mu, bounds)) {
    if (poly_divides(G.poly(), substitute_power(factor.poly.poly(), p, G.symbol()))) {
      return TowerPrime<RationalDomain>(P.level() - 1, factor.poly);
    }
  }
  throw Error(ErrorKind::NotIrreducible, "no factor of mu(G) is divisible by " + format_upoly(G) +
                                             "; the generator is not irreducible");
}

TowerPrime<FqDomain> contract_prime(const TowerPrime<FqDomain>& P) {
  require_contractible(P.level());
  return TowerPrime<FqDomain>(P.level() - 1, untwist_mu(P.gen()));
}

TowerPrime<PerfectDomain> contract_prime(const TowerPrime<PerfectDomain>& P) {
  require_contractible(P.level());
  return TowerPrime<PerfectDomain>(P.level() - 1, untwist_mu(P.gen()));
}

UPoly<FqDomain> algebraic_content(const UPoly<FqDomain>& g) { return make_monic(g); }

UPoly<FqDomain> algebraic_content(const UPoly<RationalDomain>& g) {
  return content_of(FqDomain{g.domain().cfg}, g.symbol(), cleared(g));
}

UPoly<FqDomain> algebraic_content(const UPoly<PerfectDomain>& g) {
  return algebraic_content(descend_to_common_level(g).poly);
}

}  // namespace perfclosure
