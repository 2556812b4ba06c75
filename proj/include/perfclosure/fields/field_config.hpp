#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perfclosure/fields/fq.hpp"

namespace perfclosure {

class FieldConfig;
using ConfigPtr = std::shared_ptr<const FieldConfig>;

/// Describes the coefficient field F_q(V): the finite field F_q = F_p[a]/(modulus)
/// and the ordered variable list V. Immutable once built.
class FieldConfig {
 public:
  /// Name of the transcendental t whose roots t_m = t^{1/p^m} build the tower.
  static constexpr std::string_view kTowerSymbol = "t";
  /// Name used for the class of the modulus variable when d > 1.
  static constexpr std::string_view kGeneratorSymbol = "a";

  /// Validated construction: p prime, modulus monic irreducible of degree d
  /// (ignored when d = 1), variable names distinct identifiers other than the
  /// reserved symbols.
  static ConfigPtr make(std::uint64_t p, std::vector<std::string> vars, std::size_t degree = 1,
                        std::vector<std::uint64_t> modulus = {});

  /// Copy of this configuration with one more variable appended. Unlike make(),
  /// this accepts the reserved tower symbol; it is how t enters the variable set.
  ConfigPtr with_variable(const std::string& name) const;
  /// Copy with the same F_q and a different variable list.
  ConfigPtr with_variables(std::vector<std::string> vars) const;

  const Fq& fq() const noexcept { return fq_; }
  std::uint64_t p() const noexcept { return fq_.characteristic(); }
  std::size_t degree() const noexcept { return fq_.degree(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  std::optional<std::size_t> var_index(std::string_view name) const;

  /// Same F_q and same variable list.
  bool same_field(const FieldConfig& other) const noexcept;
  /// Same F_q (variables may differ).
  bool same_base(const FieldConfig& other) const noexcept;

  /// "F_2(s)", "F_9(s,u)", "F_5".
  std::string describe() const;

 private:
  FieldConfig(Fq fq, std::vector<std::string> vars);

  Fq fq_;
  std::vector<std::string> vars_;
};

/// Throws IncompatibleFields unless a and b describe the same field.
void require_same_field(const ConfigPtr& a, const ConfigPtr& b);

bool is_identifier(std::string_view name) noexcept;

}  // namespace perfclosure
