#include "perfclosure/witness/classify.hpp"

namespace perfclosure {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::PolyRing: return "POLY_RING";
    case AlgebraKind::RatFunc: return "RATFUNC";
    case AlgebraKind::PerfectClosureRatFunc: return "PERFECT_CLOSURE_RATFUNC";
    case AlgebraKind::QuotPoly: return "QUOT_POLY";
    case AlgebraKind::PowerSeries: return "POWER_SERIES";
    case AlgebraKind::LocalResidueAlgebraic: return "LOCAL_RESIDUE_ALGEBRAIC";
  }
  return "?";
}

namespace {

UPoly<FqDomain> quotient_modulus(const AlgebraDescriptor& A) {
  FqDomain dom{A.base};
  std::vector<FqElement> coeffs;
  for (auto c : A.modulus) coeffs.push_back(dom.from_int(c));
  return UPoly<FqDomain>(dom, Symbol{"X", 0}, std::move(coeffs));
}

void validate(const AlgebraDescriptor& A) {
  if (!A.base) throw Error(ErrorKind::InvalidDescriptor, "descriptor has no base field");
  if (A.kind == AlgebraKind::QuotPoly) {
    const auto f = quotient_modulus(A);
    if (f.degree() < 1) throw Error(ErrorKind::InvalidDescriptor, "QUOT_POLY needs a non-constant polynomial");
    if (!irreducible_fq(f)) {
      throw Error(ErrorKind::InvalidDescriptor, format_upoly(f) + " is not irreducible over " + FqDomain{A.base}.name());
    }
  }
  if (A.kind == AlgebraKind::PowerSeries) {
    if (A.residue_degree == 0 || A.residue_degree % A.base->degree() != 0) {
      throw Error(ErrorKind::InvalidDescriptor, "the coefficient field of POWER_SERIES must contain F_q");
    }
  }
}

// Representative prime of height one in k(t)_per ⊗ A with K = Qt(A) = F_q(v_1..):
// F0 = t + v_1 stabilizes at m0 = 0.
StabilizationReport<RationalDomain> sample_report(const AlgebraDescriptor& A, const std::string& prefix,
                                                  std::uint64_t overhang) {
  const ConfigPtr cfg = A.base->with_variables(generator_names(prefix, A.count));
  const RationalDomain dom{cfg};
  UPoly<RationalDomain> f0(dom, tower_symbol(0), {RationalFunction::variable(cfg, 0), dom.one()});
  return stabilization_index(MonicPoly<RationalDomain>(f0), overhang);
}

}  // namespace

std::string AlgebraDescriptor::describe() const {
  const std::string name = to_string(kind);
  switch (kind) {
    case AlgebraKind::PolyRing:
    case AlgebraKind::RatFunc:
    case AlgebraKind::PerfectClosureRatFunc:
      return name + "(" + std::to_string(count) + ")";
    case AlgebraKind::QuotPoly:
      return name + "(" + format_upoly(quotient_modulus(*this)) + ")";
    case AlgebraKind::PowerSeries:
      return name + "(" + std::to_string(count) + ", F_" + ipow(base->p(), residue_degree).str() + ")";
    case AlgebraKind::LocalResidueAlgebraic:
      return name;
  }
  return name;
}

std::vector<std::string> generator_names(const std::string& prefix, std::uint64_t count) {
  if (count == 1) return {prefix};
  std::vector<std::string> out;
  for (std::uint64_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Verdict classify_algebra(const AlgebraDescriptor& A, const ClassifyOptions& options) {
  validate(A);
  Verdict v;
  v.descriptor = A;
  const std::string k = FqDomain{A.base}.name();
  switch (A.kind) {
    case AlgebraKind::PolyRing:
      v.noetherian = true;
      v.rule = "finitely-generated-algebra";
      v.justification = "finitely generated over " + k + ", so the base change to k(t)_per is noetherian";
      if (A.count >= 1) v.sample_report = sample_report(A, "x", options.overhang);
      break;
    case AlgebraKind::QuotPoly:
      v.noetherian = true;
      v.rule = "finitely-generated-algebra";
      v.justification = "a finite field extension of " + k + "; finitely generated";
      break;
    case AlgebraKind::RatFunc: {
      v.noetherian = true;
      v.rule = "perfect-subfield-algebraic";
      if (A.count == 0) {
        v.justification = "A = " + k + " is perfect and finite";
        break;
      }
      const ConfigPtr cfg = A.base->with_variables(generator_names("s", A.count));
      bool all_outside = true;
      for (std::size_t i = 0; i < cfg->nvars(); ++i) {
        all_outside = all_outside && !rf_in_perfect_subfield(RationalFunction::variable(cfg, i));
      }
      v.justification = std::string("the biggest perfect subfield of ") + cfg->describe() + " is " + k +
                        (all_outside ? " (no generator has all p-power roots)" : "") +
                        ", algebraic over k; A is noetherian";
      v.sample_report = sample_report(A, "s", options.overhang);
      break;
    }
    case AlgebraKind::PerfectClosureRatFunc: {
      if (A.count == 0) {
        v.noetherian = true;
        v.rule = "finitely-generated-algebra";
        v.justification = "A = " + k + " is finite over k";
        break;
      }
      const ConfigPtr cfg = A.base->with_variables(generator_names("s", A.count));
      v.noetherian = false;
      v.rule = "transcendental-perfect-element";
      v.depth = options.depth;
      v.witness = build_witness_chain(TowerElement(RationalFunction::variable(cfg, 0)), options.depth);
      v.justification = "s is transcendental over k and lies in the perfect field A; the ideal generated by "
                        "alpha_m = t_m - s_m, m >= 0, ascends strictly (verified to depth " +
                        std::to_string(options.depth) + "; alpha_m = alpha_{m+1}^p continues the chain)";
      break;
    }
    case AlgebraKind::PowerSeries:
      v.noetherian = true;
      v.rule = "power-series-algebraic-coefficients";
      v.justification = "complete local noetherian ring over a finite extension of k (symbolic)";
      break;
    case AlgebraKind::LocalResidueAlgebraic:
      v.noetherian = true;
      v.rule = "local-algebraic-residue";
      v.justification = "local noetherian ring whose residue field is algebraic over k (symbolic)";
      break;
  }
  return v;
}

}  // namespace perfclosure
