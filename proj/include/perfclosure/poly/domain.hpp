#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "perfclosure/fields/field_config.hpp"
#include "perfclosure/fields/rational_function.hpp"
#include "perfclosure/tower/tower_element.hpp"

namespace perfclosure {

/// A coefficient field for univariate polynomials. Beyond field arithmetic it
/// exposes the p-th root decision (membership in K^p) and two subfield tests:
/// the biggest perfect subfield K#, and the algebraic closure of F_q in K.
template <class D>
concept CoefficientDomain = requires(const D& d, const typename D::Element& a, const typename D::Element& b) {
  typename D::Element;
  { d.zero() } -> std::same_as<typename D::Element>;
  { d.one() } -> std::same_as<typename D::Element>;
  { d.add(a, b) } -> std::same_as<typename D::Element>;
  { d.sub(a, b) } -> std::same_as<typename D::Element>;
  { d.mul(a, b) } -> std::same_as<typename D::Element>;
  { d.neg(a) } -> std::same_as<typename D::Element>;
  { d.inv(a) } -> std::same_as<typename D::Element>;
  { d.is_zero(a) } -> std::convertible_to<bool>;
  { d.equal(a, b) } -> std::convertible_to<bool>;
  { d.frobenius(a) } -> std::same_as<typename D::Element>;
  { d.pth_root(a) } -> std::same_as<std::optional<typename D::Element>>;
  { d.in_perfect_subfield(a) } -> std::convertible_to<bool>;
  { d.is_algebraic_over_base(a) } -> std::convertible_to<bool>;
  { d.characteristic() } -> std::convertible_to<std::uint64_t>;
  { d.name() } -> std::convertible_to<std::string>;
  { d.config() } -> std::convertible_to<const ConfigPtr&>;
};

/// F_q itself (variables of the config are ignored).
struct FqDomain {
  using Element = FqElement;
  ConfigPtr cfg;

  Element zero() const { return cfg->fq().zero(); }
  Element one() const { return cfg->fq().one(); }
  Element from_int(const BigInt& c) const { return cfg->fq().from_int(c); }
  Element add(const Element& a, const Element& b) const { return cfg->fq().add(a, b); }
  Element sub(const Element& a, const Element& b) const { return cfg->fq().sub(a, b); }
  Element mul(const Element& a, const Element& b) const { return cfg->fq().mul(a, b); }
  Element neg(const Element& a) const { return cfg->fq().neg(a); }
  Element inv(const Element& a) const { return cfg->fq().inv(a); }
  bool is_zero(const Element& a) const { return cfg->fq().is_zero(a); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element frobenius(const Element& a) const { return cfg->fq().frobenius(a, 1); }
  std::optional<Element> pth_root(const Element& a) const { return cfg->fq().pth_root(a, 1); }
  bool in_perfect_subfield(const Element&) const { return true; }
  bool is_algebraic_over_base(const Element&) const { return true; }
  std::uint64_t characteristic() const { return cfg->p(); }
  std::string name() const { return "F_" + cfg->fq().order().str(); }
  const ConfigPtr& config() const { return cfg; }
};

/// K = F_q(V).
struct RationalDomain {
  using Element = RationalFunction;
  ConfigPtr cfg;

  Element zero() const { return RationalFunction(cfg); }
  Element one() const { return RationalFunction::from_int(cfg, 1); }
  Element from_int(const BigInt& c) const { return RationalFunction::from_int(cfg, c); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return a.inverse(); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element frobenius(const Element& a) const { return rf_frobenius(a, 1); }
  std::optional<Element> pth_root(const Element& a) const { return rf_pth_root(a, 1); }
  bool in_perfect_subfield(const Element& a) const { return rf_in_perfect_subfield(a); }
  bool is_algebraic_over_base(const Element& a) const { return a.is_constant(); }
  std::uint64_t characteristic() const { return cfg->p(); }
  std::string name() const { return cfg->describe(); }
  const ConfigPtr& config() const { return cfg; }
};

/// K = F_q(V)_per, the perfect closure. Every element has a p-th root, so
/// K^p = K and the biggest perfect subfield is K itself.
struct PerfectDomain {
  using Element = TowerElement;
  ConfigPtr cfg;

  Element zero() const { return TowerElement(cfg); }
  Element one() const { return TowerElement(RationalFunction::from_int(cfg, 1)); }
  Element from_int(const BigInt& c) const { return TowerElement(RationalFunction::from_int(cfg, c)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return te_arith(TowerOp::Inv, a, a); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element frobenius(const Element& a) const { return te_frobenius(a); }
  std::optional<Element> pth_root(const Element& a) const { return te_pth_root(a); }
  bool in_perfect_subfield(const Element&) const { return true; }
  bool is_algebraic_over_base(const Element& a) const { return a.is_constant(); }
  std::uint64_t characteristic() const { return cfg->p(); }
  std::string name() const { return cfg->describe() + "_per"; }
  const ConfigPtr& config() const { return cfg; }
};

static_assert(CoefficientDomain<FqDomain>);
static_assert(CoefficientDomain<RationalDomain>);
static_assert(CoefficientDomain<PerfectDomain>);

}  // namespace perfclosure
