#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "perfclosure/cli/parse.hpp"

namespace perfclosure {

inline void PrintTo(const RationalFunction& x, std::ostream* os) { *os << format_rational(x); }
inline void PrintTo(const TowerElement& x, std::ostream* os) { *os << format_tower(x) << " @" << x.level(); }
inline void PrintTo(const Polynomial& x, std::ostream* os) { *os << format_polynomial(x); }
template <CoefficientDomain D>
void PrintTo(const UPoly<D>& f, std::ostream* os) {
  *os << format_upoly(f) << " [" << f.symbol().name << "_" << f.symbol().level << "]";
}
template <CoefficientDomain D>
void PrintTo(const MonicPoly<D>& f, std::ostream* os) {
  PrintTo(f.poly(), os);
}

}  // namespace perfclosure

namespace perfclosure::testing {

inline ConfigPtr field(std::uint64_t p, std::vector<std::string> vars = {"s"}, std::size_t degree = 1,
                       std::vector<std::uint64_t> modulus = {}) {
  return FieldConfig::make(p, std::move(vars), degree, std::move(modulus));
}

inline RationalFunction rf(const ConfigPtr& cfg, const std::string& text) { return parse_rational(text, cfg); }
inline TowerElement te(const ConfigPtr& cfg, const std::string& text) { return parse_tower_element(text, cfg); }

inline UPoly<RationalDomain> rpoly(const ConfigPtr& cfg, const std::string& text, const std::string& var = "X",
                                   std::uint64_t level = 0) {
  return parse_upoly(text, RationalDomain{cfg}, Symbol{var, level});
}
inline MonicPoly<RationalDomain> rmonic(const ConfigPtr& cfg, const std::string& text, const std::string& var = "X",
                                        std::uint64_t level = 0) {
  return MonicPoly<RationalDomain>(rpoly(cfg, text, var, level));
}
inline UPoly<FqDomain> fpoly(const ConfigPtr& cfg, const std::string& text, const std::string& var = "X") {
  return parse_upoly(text, FqDomain{cfg}, Symbol{var, 0});
}
inline UPoly<PerfectDomain> ppoly(const ConfigPtr& cfg, const std::string& text, const std::string& var = "t",
                                  std::uint64_t level = 0) {
  return parse_upoly(text, PerfectDomain{cfg}, Symbol{var, level});
}

/// Random polynomial in the config's variables: up to `terms` terms with
/// per-variable exponents below `max_exp`.
inline Polynomial random_poly(const ConfigPtr& cfg, std::mt19937_64& rng, int terms, int max_exp) {
  std::vector<Term> out;
  const auto q = static_cast<std::uint64_t>(cfg->fq().order());
  for (int i = 0; i < terms; ++i) {
    Monomial m(cfg->nvars());
    for (auto& e : m) e = static_cast<int>(rng() % static_cast<std::uint64_t>(max_exp));
    out.push_back({m, cfg->fq().from_int(BigInt(rng() % q))});
  }
  return Polynomial::from_terms(cfg, std::move(out));
}

inline RationalFunction random_rf(const ConfigPtr& cfg, std::mt19937_64& rng) {
  Polynomial den = random_poly(cfg, rng, 3, 3);
  while (den.is_zero()) den = random_poly(cfg, rng, 3, 3);
  return rf_normalize(random_poly(cfg, rng, 4, 4), den);
}

inline TowerElement random_te(const ConfigPtr& cfg, std::mt19937_64& rng) {
  return te_normalize(rng() % 3, random_rf(cfg, rng));
}

}  // namespace perfclosure::testing
