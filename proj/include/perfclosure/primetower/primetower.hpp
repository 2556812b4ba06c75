#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfclosure/poly/irreducible.hpp"

namespace perfclosure {

/// Height-1 prime (gen) of K[t_m], t_m = t^{1/p^m}, given by its monic
/// irreducible generator written in the symbol t at level m.
template <CoefficientDomain D>
class TowerPrime {
 public:
  /// Trusted constructor: gen must already be known to be irreducible.
  TowerPrime(std::uint64_t level, MonicPoly<D> gen) : level_(level), gen_(std::move(gen)) {
    if (!(gen_.symbol() == Symbol{std::string(FieldConfig::kTowerSymbol), level_})) {
      throw Error(ErrorKind::InvalidArgument, "prime generator must be a polynomial in t at its own level");
    }
    if (gen_.degree() == 0) throw Error(ErrorKind::InvalidArgument, "prime generator must be non-constant");
  }

  /// Checks irreducibility first; throws NotIrreducible otherwise.
  static TowerPrime certified(std::uint64_t level, MonicPoly<D> gen) {
    if (!is_irreducible(gen)) {
      throw Error(ErrorKind::NotIrreducible, format_upoly(gen) + " is not irreducible over " + gen.domain().name());
    }
    return TowerPrime(level, std::move(gen));
  }

  std::uint64_t level() const noexcept { return level_; }
  const MonicPoly<D>& gen() const noexcept { return gen_; }
  const D& domain() const noexcept { return gen_.domain(); }

  friend bool operator==(const TowerPrime& a, const TowerPrime& b) { return a.level_ == b.level_ && a.gen_ == b.gen_; }

 private:
  std::uint64_t level_;
  MonicPoly<D> gen_;
};

/// Symbol of t_m.
inline Symbol tower_symbol(std::uint64_t level) { return Symbol{std::string(FieldConfig::kTowerSymbol), level}; }

enum class LiftCase { Root, Extend };

std::string to_string(LiftCase c);

template <CoefficientDomain D>
struct LiftResult {
  LiftCase lift_case;
  TowerPrime<D> prime;
};

/// The unique prime of K[t_{m+1}] above P. If every coefficient of gen lies in
/// K^p the generator is the coefficient-wise p-th root (same degree); otherwise
/// it is gen(t_{m+1}^p), of degree p * deg gen.
template <CoefficientDomain D>
LiftResult<D> lift_prime(const TowerPrime<D>& P) {
  const Symbol next = tower_symbol(P.level() + 1);
  if (auto roots = root_coefficients(P.gen().poly(), next)) {
    return {LiftCase::Root, TowerPrime<D>(P.level() + 1, MonicPoly<D>(*roots))};
  }
  const auto p = static_cast<std::size_t>(P.domain().characteristic());
  return {LiftCase::Extend, TowerPrime<D>(P.level() + 1, MonicPoly<D>(substitute_power(P.gen().poly(), p, next)))};
}

/// F(X) if g = F(X^p), i.e. only exponents divisible by p occur.
template <CoefficientDomain D>
std::optional<UPoly<D>> deflate_power(const UPoly<D>& g, std::size_t p, Symbol target) {
  std::vector<typename D::Element> out;
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    if (i % p == 0) {
      out.push_back(g.coeffs()[i]);
    } else if (!g.domain().is_zero(g.coeffs()[i])) {
      return std::nullopt;
    }
  }
  return UPoly<D>(g.domain(), std::move(target), std::move(out));
}

/// Generator of (G) ∩ K[t_m] without factoring: G = F(t_{m+1}^p) when G only
/// involves p-th powers of t_{m+1}, and F = mu(G) otherwise.
template <CoefficientDomain D>
MonicPoly<D> contraction_by_shape(const MonicPoly<D>& G) {
  const Symbol below{G.symbol().name, G.symbol().level - 1};
  if (auto F = deflate_power(G.poly(), G.domain().characteristic(), below)) return MonicPoly<D>(*F);
  return untwist_mu(G);
}

/// Contraction of a prime at level m+1 >= 1 to K[t_m]. Over F_q(s) the monic
/// irreducible factors of mu(G) are computed with the factor oracle and the one
/// with G | F(t_{m+1}^p) is returned; over perfect fields mu(G) itself is
/// irreducible. With two or more variables the shape rule is used.
TowerPrime<RationalDomain> contract_prime(const TowerPrime<RationalDomain>& P, const OracleBounds& bounds = {});
TowerPrime<FqDomain> contract_prime(const TowerPrime<FqDomain>& P);
TowerPrime<PerfectDomain> contract_prime(const TowerPrime<PerfectDomain>& P);

template <CoefficientDomain D>
struct StabilizationReport {
  MonicPoly<D> F0;
  std::uint64_t m0 = 0;
  std::uint64_t overhang = 0;
  /// F_0 .. F_{m0+overhang}; gens[i] lives at level i.
  std::vector<MonicPoly<D>> gens;
  /// cases[i] is how gens[i+1] arose from gens[i].
  std::vector<LiftCase> cases;
  /// Coefficients of F_0 (constant term first, leading 1 omitted) taken to
  /// their p^{m0}-th roots.
  std::vector<typename D::Element> cert_in;
  /// A coefficient of F_0 that is not a p^{m0+1}-th power.
  std::size_t cert_out_index = 0;
  typename D::Element cert_out_coefficient;
  bool verified = false;
};

/// e-fold p-th root, if it exists.
template <CoefficientDomain D>
std::optional<typename D::Element> iterated_root(const D& dom, typename D::Element x, std::uint64_t e) {
  for (std::uint64_t i = 0; i < e; ++i) {
    auto r = dom.pth_root(x);
    if (!r) return std::nullopt;
    x = *std::move(r);
  }
  return x;
}

template <CoefficientDomain D>
typename D::Element iterated_power(const D& dom, typename D::Element x, std::uint64_t e) {
  for (std::uint64_t i = 0; i < e; ++i) x = dom.frobenius(x);
  return x;
}

template <CoefficientDomain D>
bool verify_extended_tower(const StabilizationReport<D>& report);

/// Largest m0 with all coefficients of F0 in K^{p^{m0}}, the lifted generators
/// up to level m0 + overhang, and the membership certificates.
/// Throws PerfectCoefficients if every coefficient of F0 lies in the biggest
/// perfect subfield and NotIrreducible if F0 is reducible.
template <CoefficientDomain D>
StabilizationReport<D> stabilization_index(const MonicPoly<D>& F0, std::uint64_t overhang = 3) {
  if (!(F0.symbol() == tower_symbol(0))) {
    throw Error(ErrorKind::InvalidArgument, "F0 must be a polynomial in t");
  }
  const D& dom = F0.domain();
  bool perfect = true;
  for (std::size_t i = 0; i < F0.degree(); ++i) perfect = perfect && dom.in_perfect_subfield(F0.coeff(i));
  if (perfect) {
    throw Error(ErrorKind::PerfectCoefficients,
                "every coefficient of " + format_upoly(F0) + " lies in the biggest perfect subfield of " + dom.name());
  }
  TowerPrime<D> P = TowerPrime<D>::certified(0, F0);

  StabilizationReport<D> report{F0, 0, overhang, {F0}, {}, {}, 0, dom.zero(), false};
  std::vector<typename D::Element> current;
  for (std::size_t i = 0; i < F0.degree(); ++i) current.push_back(F0.coeff(i));
  while (true) {
    std::optional<std::size_t> missing;
    std::vector<typename D::Element> next;
    for (std::size_t i = 0; i < current.size() && !missing; ++i) {
      auto r = dom.pth_root(current[i]);
      if (r) {
        next.push_back(*std::move(r));
      } else {
        missing = i;
      }
    }
    if (missing) {
      report.cert_in = current;
      report.cert_out_index = *missing;
      report.cert_out_coefficient = F0.coeff(*missing);
      break;
    }
    current = std::move(next);
    ++report.m0;
  }
  for (std::uint64_t m = 0; m < report.m0 + overhang; ++m) {
    LiftResult<D> lifted = lift_prime(P);
    report.cases.push_back(lifted.lift_case);
    P = lifted.prime;
    report.gens.push_back(P.gen());
  }
  report.verified = verify_extended_tower(report);
  return report;
}

/// Coordinates of f in K[t_m] over K[t_{m0}] in the basis 1, t_m, ..., t_m^{N-1},
/// N = p^{m-m0}: f = sum b_i t_m^i.
template <CoefficientDomain D>
std::vector<UPoly<D>> basis_coords(const UPoly<D>& f, std::uint64_t m0) {
  const std::uint64_t m = f.symbol().level;
  if (m < m0) throw Error(ErrorKind::InvalidArgument, "basis coordinates need m >= m0");
  const auto N = static_cast<std::size_t>(ipow(f.domain().characteristic(), m - m0));
  const Symbol base{f.symbol().name, m0};
  std::vector<std::vector<typename D::Element>> parts(N);
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    auto& part = parts[j % N];
    const std::size_t k = j / N;
    if (part.size() <= k) part.resize(k + 1, f.domain().zero());
    part[k] = f.coeffs()[j];
  }
  std::vector<UPoly<D>> out;
  out.reserve(N);
  for (auto& part : parts) out.emplace_back(f.domain(), base, std::move(part));
  return out;
}

/// sum b_i t_m^i, the inverse of basis_coords.
template <CoefficientDomain D>
UPoly<D> from_basis_coords(const std::vector<UPoly<D>>& coords, std::uint64_t m) {
  const std::size_t N = coords.size();
  const D& dom = coords.front().domain();
  std::vector<typename D::Element> out;
  for (std::size_t i = 0; i < N; ++i) {
    const auto& b = coords[i].coeffs();
    for (std::size_t k = 0; k < b.size(); ++k) {
      const std::size_t j = k * N + i;
      if (out.size() <= j) out.resize(j + 1, dom.zero());
      out[j] = b[k];
    }
  }
  return UPoly<D>(dom, Symbol{coords.front().symbol().name, m}, std::move(out));
}

/// Membership of f in P0 * K[t_m]: every basis coordinate is divisible by P0.gen.
template <CoefficientDomain D>
bool extended_membership(const UPoly<D>& f, const TowerPrime<D>& P0) {
  if (f.symbol().name != FieldConfig::kTowerSymbol) throw Error(ErrorKind::InvalidArgument, "membership needs a polynomial in t");
  for (const auto& b : basis_coords(f, P0.level())) {
    if (!poly_divides(P0.gen().poly(), b)) return false;
  }
  return true;
}

/// Largest monic divisor of g with coefficients in F_q, i.e. the F_q[t_m]-content
/// of g viewed in F_q[t_m][V] after clearing denominators.
UPoly<FqDomain> algebraic_content(const UPoly<FqDomain>& g);
UPoly<FqDomain> algebraic_content(const UPoly<RationalDomain>& g);
UPoly<FqDomain> algebraic_content(const UPoly<PerfectDomain>& g);

inline FqElement embed_constant(const FqDomain&, const FqElement& c) { return c; }
inline RationalFunction embed_constant(const RationalDomain& d, const FqElement& c) {
  return RationalFunction::constant(d.cfg, c);
}
inline TowerElement embed_constant(const PerfectDomain& d, const FqElement& c) {
  return TowerElement(RationalFunction::constant(d.cfg, c));
}

/// Membership of f in g * S0^{-1} K[t_m] with S0 = F_q[t] \ {0}. The part of g
/// with coefficients in F_q divides an element of S0 and becomes a unit; the
/// answer is whether the remaining factor divides f.
template <CoefficientDomain D>
bool localized_membership(const UPoly<D>& f, const UPoly<D>& g) {
  f.check_compatible(g);
  if (g.is_zero()) return f.is_zero();
  const UPoly<FqDomain> content = algebraic_content(g);
  std::vector<typename D::Element> lifted;
  for (const auto& c : content.coeffs()) lifted.push_back(embed_constant(g.domain(), c));
  const UPoly<D> unit_part(g.domain(), g.symbol(), std::move(lifted));
  const UPoly<D> rest = poly_exact_quotient(g, unit_part);
  return poly_divides(rest, f);
}

template <CoefficientDomain D>
bool verify_extended_tower(const StabilizationReport<D>& report) {
  const D& dom = report.F0.domain();
  const std::size_t p = dom.characteristic();
  const std::uint64_t m0 = report.m0;
  if (report.gens.size() != m0 + report.overhang + 1 || !(report.gens[0] == report.F0)) return false;
  for (std::size_t i = 0; i < report.gens.size(); ++i) {
    if (!(report.gens[i].symbol() == tower_symbol(i))) return false;
  }
  if (report.cases.size() + 1 != report.gens.size()) return false;
  for (std::uint64_t i = 0; i < report.cases.size(); ++i) {
    if (report.cases[i] != (i < m0 ? LiftCase::Root : LiftCase::Extend)) return false;
  }
  // cert_in: p^{m0}-th roots of the coefficients of F0.
  if (report.cert_in.size() != report.F0.degree()) return false;
  for (std::size_t i = 0; i < report.cert_in.size(); ++i) {
    if (!dom.equal(iterated_power(dom, report.cert_in[i], m0), report.F0.coeff(i))) return false;
  }
  // cert_out: some coefficient is not a p^{m0+1}-th power.
  if (report.cert_out_index >= report.F0.degree()) return false;
  if (!dom.equal(report.cert_out_coefficient, report.F0.coeff(report.cert_out_index))) return false;
  if (dom.pth_root(report.cert_in[report.cert_out_index])) return false;
  // Root steps below m0.
  for (std::uint64_t i = 0; i < m0; ++i) {
    if (!(untwist_mu(report.gens[i + 1]).poly() == report.gens[i].poly())) return false;
  }
  std::vector<typename D::Element> top = report.cert_in;
  top.push_back(dom.one());
  if (!(report.gens[m0].poly() == UPoly<D>(dom, tower_symbol(m0), top))) return false;
  // Pure extension above m0.
  const TowerPrime<D> P0(m0, report.gens[m0]);
  for (std::uint64_t m = m0 + 1; m < report.gens.size(); ++m) {
    const auto k = static_cast<std::size_t>(ipow(p, m - m0));
    if (!(report.gens[m].poly() == substitute_power(report.gens[m0].poly(), k, tower_symbol(m)))) return false;
    if (!extended_membership(report.gens[m].poly(), P0)) return false;
  }
  return true;
}

}  // namespace perfclosure
