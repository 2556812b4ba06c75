#pragma once

#include <cstdint>
#include <string>

#include "perfclosure/fields/polynomial.hpp"
#include "perfclosure/fields/rational_function.hpp"
#include "perfclosure/tower/tower_element.hpp"

namespace perfclosure {

// Text rendering shared by diagnostics, certificates and the CLI. Output is
// accepted back by the parser in perfclosure/cli/parse.hpp.
//
// At level m a stored exponent a renders as the reduced fraction a/p^m, e.g.
// t^(1/2) or s^(3/4); integral exponents render plainly.

std::string format_fq(const FqElement& x, const ConfigPtr& config);
std::string format_polynomial(const Polynomial& f, std::uint64_t level = 0);
std::string format_rational(const RationalFunction& x, std::uint64_t level = 0);
std::string format_tower(const TowerElement& x);

/// v^(a/p^m) with the fraction reduced; "" for exponent 0.
std::string format_power(const std::string& name, const BigInt& exponent, std::uint64_t p, std::uint64_t level);

/// True when the text is a single factor that can be followed by "*X" safely.
bool is_atomic_text(const std::string& text);

}  // namespace perfclosure
