#include "perfclosure/witness/witness.hpp"

#include <algorithm>

namespace perfclosure {

WitnessChain build_witness_chain(const TowerElement& s, std::uint64_t depth, WitnessOptions options) {
  if (depth == 0) throw Error(ErrorKind::InvalidArgument, "witness depth must be at least 1");
  if (options.require_transcendental && s.is_constant()) {
    throw Error(ErrorKind::NotTranscendental, format_tower(s) + " is algebraic over F_q");
  }
  const PerfectDomain dom{s.config()};
  WitnessChain chain{s, depth, {}, {}, false};
  TowerElement root = s;
  for (std::uint64_t m = 0; m <= depth; ++m) {
    chain.alphas.emplace_back(UPoly<PerfectDomain>(dom, tower_symbol(m), {-root, dom.one()}));
    root = te_pth_root(root);
  }
  chain.coherent = verify_coherence(chain);
  chain.ascent = verify_strict_ascent(chain);
  return chain;
}

bool verify_coherence(const WitnessChain& chain) {
  if (chain.alphas.size() != chain.depth + 1) return false;
  const std::uint64_t p = chain.s.config()->p();
  for (std::uint64_t m = 0; m < chain.depth; ++m) {
    const UPoly<PerfectDomain> power = poly_pow(chain.alphas[m + 1].poly(), p);
    // power lives in K[t_{m+1}^p]; rewrite it in t_m.
    auto lowered = deflate_power(power, static_cast<std::size_t>(p), tower_symbol(m));
    if (!lowered || !(*lowered == chain.alphas[m].poly())) return false;
  }
  return true;
}

std::vector<bool> verify_strict_ascent(const WitnessChain& chain) {
  const std::uint64_t p = chain.s.config()->p();
  std::vector<bool> out;
  for (std::uint64_t m = 0; m + 1 < chain.alphas.size(); ++m) {
    const UPoly<PerfectDomain>& next = chain.alphas[m + 1].poly();
    out.push_back(!localized_membership(next, poly_pow(next, p)));
  }
  return out;
}

bool witness_verified(const WitnessChain& chain) {
  return chain.coherent && chain.ascent.size() == chain.depth &&
         std::all_of(chain.ascent.begin(), chain.ascent.end(), [](bool b) { return b; });
}

}  // namespace perfclosure
