#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "perfclosure/poly/upoly.hpp"

namespace perfclosure {

/// Rabin's test over F_q: f of degree n is irreducible iff f | X^{q^n} - X and
/// gcd(f, X^{q^{n/l}} - X) = 1 for every prime l | n.
bool irreducible_fq(const UPoly<FqDomain>& f);
/// Same test for a polynomial whose coefficients happen to lie in F_q.
/// Throws WrongCoefficientField if some coefficient involves a variable.
bool irreducible_fq(const UPoly<RationalDomain>& f);

/// The F_q-polynomial with the same coefficients, if they are all constants.
std::optional<UPoly<FqDomain>> to_fq_poly(const UPoly<RationalDomain>& f);

template <CoefficientDomain D>
struct Factor {
  MonicPoly<D> poly;
  unsigned multiplicity;
};

template <CoefficientDomain D>
using FactorList = std::vector<Factor<D>>;

struct OracleBounds {
  std::size_t max_x_degree = 8;
  std::size_t max_s_degree = 8;
  /// Upper limit on trial divisors tried for one squarefree part.
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

/// Complete factorization into monic irreducibles over F_q(s) (at most one
/// variable) by exhaustive trial division. Exact squarefree splitting and p-th
/// root extraction run first; the trial division itself enumerates every monic
/// candidate whose coefficient degrees fit the Newton-polygon bound of the
/// denominator-cleared input. Factors are sorted by degree, then by text.
/// Throws MultivariateUnsupported for two or more variables and BoundsExceeded
/// when a part handed to trial division exceeds the configured bounds.
FactorList<RationalDomain> factor_oracle(const MonicPoly<RationalDomain>& f, const OracleBounds& bounds = {});

/// Product of the factors with multiplicities.
UPoly<RationalDomain> expand(const FactorList<RationalDomain>& factors, const Symbol& symbol, const RationalDomain& dom);

/// Irreducibility over the coefficient field. Degree-1 inputs are irreducible.
bool is_irreducible(const MonicPoly<FqDomain>& f);
bool is_irreducible(const MonicPoly<RationalDomain>& f, const OracleBounds& bounds = {});
/// Over F_q(V)_per: descend to the common level L of the coefficients, where
/// they lie in F_q(V^{1/p^L}) which is isomorphic to F_q(V); f is irreducible
/// over the perfect closure iff it is irreducible there and separable.
bool is_irreducible(const MonicPoly<PerfectDomain>& f, const OracleBounds& bounds = {});

/// Coefficients of f written at their common level, as a polynomial over F_q(V).
struct LevelDescent {
  std::uint64_t level;
  UPoly<RationalDomain> poly;
};
LevelDescent descend_to_common_level(const UPoly<PerfectDomain>& f);
UPoly<PerfectDomain> ascend_from_level(const UPoly<RationalDomain>& f, std::uint64_t level);

template <CoefficientDomain D>
struct TransferResult {
  bool base_irreducible = false;
  /// Index of a coefficient of g outside K^p, if any.
  std::optional<std::size_t> non_pth_power_index;
  /// Verdict for g(X^{p^e}).
  bool irreducible = false;
  std::uint64_t steps = 1;
};

/// Index of the first non-leading coefficient outside K^p.
template <CoefficientDomain D>
std::optional<std::size_t> find_non_pth_power(const MonicPoly<D>& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (!g.domain().pth_root(g.coeff(i))) return i;
  }
  return std::nullopt;
}

/// Decides irreducibility of f(X) = g(X^p) without forming f: it holds iff g is
/// irreducible and not all coefficients of g lie in K^p. For steps > 1 the
/// criterion is applied once per Frobenius step to g, g(X^p), ...
template <CoefficientDomain D>
TransferResult<D> irreducible_transfer(const MonicPoly<D>& g, std::uint64_t steps = 1) {
  TransferResult<D> out;
  out.steps = steps;
  out.base_irreducible = is_irreducible(g);
  out.non_pth_power_index = find_non_pth_power(g);
  bool verdict = out.base_irreducible;
  MonicPoly<D> current = g;
  for (std::uint64_t step = 0; step < steps && verdict; ++step) {
    verdict = find_non_pth_power(current).has_value();
    if (step + 1 < steps) {
      current = MonicPoly<D>(substitute_power(current.poly(), current.domain().characteristic(), current.symbol()));
    }
  }
  out.irreducible = verdict;
  return out;
}

/// mu(sum a_i tau^i) = sum a_i^p t^i, where tau = t_{m+1} and t = t_m; the
/// identity mu(G)(tau^p) = G(tau)^p holds. Requires the symbol level to be >= 1.
template <CoefficientDomain D>
MonicPoly<D> untwist_mu(const MonicPoly<D>& g) {
  const Symbol& s = g.symbol();
  if (s.level == 0) throw Error(ErrorKind::InvalidArgument, "untwist needs a polynomial in t_{m+1} with m >= 0");
  return MonicPoly<D>(frobenius_coefficients(g.poly(), Symbol{s.name, s.level - 1}));
}

}  // namespace perfclosure
