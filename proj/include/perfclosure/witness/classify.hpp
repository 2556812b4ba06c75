#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfclosure/witness/witness.hpp"

namespace perfclosure {

enum class AlgebraKind {
  PolyRing,               // k[X_1..X_n]
  RatFunc,                // k(s_1..s_r)
  PerfectClosureRatFunc,  // k(s_1..s_r)_per
  QuotPoly,               // k[X]/(f), f irreducible
  PowerSeries,            // k'[[X_1..X_n]], k' = F_{p^{d'}} finite over k
  LocalResidueAlgebraic,  // local noetherian, residue field algebraic over k
};

std::string to_string(AlgebraKind kind);

/// An algebra A over k = F_q. The ring under study is k(t)_per ⊗_k A.
struct AlgebraDescriptor {
  AlgebraKind kind;
  /// Supplies k; its variables are ignored.
  ConfigPtr base;
  /// n for PolyRing and PowerSeries, r for the function fields.
  std::uint64_t count = 0;
  /// f for QuotPoly, constant term first.
  std::vector<std::uint64_t> modulus;
  /// d' for PowerSeries.
  std::uint64_t residue_degree = 1;

  /// "POLY_RING(2)", "QUOT_POLY(X^2 + X + 1)", "POWER_SERIES(3, F_4)", ...
  std::string describe() const;
};

struct ClassifyOptions {
  std::uint64_t depth = 5;
  std::uint64_t overhang = 3;
};

struct Verdict {
  AlgebraDescriptor descriptor;
  bool noetherian = false;
  std::string rule;
  std::string justification;
  std::uint64_t depth = 0;
  std::optional<WitnessChain> witness;
  std::optional<StabilizationReport<RationalDomain>> sample_report;
};

/// Coefficient variables used for descriptors with r (or n) generators:
/// "s" for one, "s1".."sr" otherwise (prefix x for polynomial rings).
std::vector<std::string> generator_names(const std::string& prefix, std::uint64_t count);

/// Throws InvalidDescriptor for malformed descriptors.
Verdict classify_algebra(const AlgebraDescriptor& A, const ClassifyOptions& options = {});

}  // namespace perfclosure
