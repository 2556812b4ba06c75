#pragma once

#include <optional>

#include "perfclosure/fields/polynomial.hpp"

namespace perfclosure::detail {

// Gcd of nonzero, non-constant a and b through dense arithmetic, when together
// they involve at most two variables with moderate degrees and q fits a machine
// word. Returns nullopt otherwise; the result is not normalised.
std::optional<Polynomial> dense_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace perfclosure::detail
