#pragma once

#include <cstdint>
#include <vector>

#include "perfclosure/primetower/primetower.hpp"

namespace perfclosure {

/// The chain alpha_m = t_m - s^{1/p^m} over K = F_q(V)_per. Each alpha_m is a
/// monic linear polynomial in t at level m, and alpha_{m+1}^p = alpha_m.
struct WitnessChain {
  TowerElement s;
  std::uint64_t depth;
  std::vector<MonicPoly<PerfectDomain>> alphas;
  /// ascent[m]: alpha_{m+1} is not in the ideal generated by alpha_m.
  std::vector<bool> ascent;
  /// alpha_{m+1}^p == alpha_m held for every m < depth.
  bool coherent = false;
};

struct WitnessOptions {
  /// Skipping this allows building the degenerate chain for a constant s.
  bool require_transcendental = true;
};

/// alpha_0 .. alpha_depth and the ascent verdicts. Throws NotTranscendental if
/// s is constant (unless disabled) and InvalidArgument for depth 0.
WitnessChain build_witness_chain(const TowerElement& s, std::uint64_t depth, WitnessOptions options = {});

/// alpha_m^p == alpha_{m-1} for every step.
bool verify_coherence(const WitnessChain& chain);

/// For each m < depth: alpha_{m+1} is outside alpha_m * K_(m+1), the latter being
/// generated by alpha_{m+1}^p in the S0-localization.
std::vector<bool> verify_strict_ascent(const WitnessChain& chain);

/// Chain is coherent and strictly ascending at every recorded step.
bool witness_verified(const WitnessChain& chain);

}  // namespace perfclosure
