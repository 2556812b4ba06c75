#include "perfclosure/fields/field_config.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "perfclosure/error.hpp"
#include "perfclosure/poly/irreducible.hpp"

namespace perfclosure {

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

FieldConfig::FieldConfig(Fq fq, std::vector<std::string> vars) : fq_(std::move(fq)), vars_(std::move(vars)) {}

ConfigPtr FieldConfig::make(std::uint64_t p, std::vector<std::string> vars, std::size_t degree,
                            std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidConfig, std::to_string(p) + " is not prime");
  if (degree == 0) throw Error(ErrorKind::InvalidConfig, "extension degree must be >= 1");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_identifier(vars[i])) throw Error(ErrorKind::InvalidConfig, "bad variable name '" + vars[i] + "'");
    if (vars[i] == kTowerSymbol) {
      throw Error(ErrorKind::InvalidConfig, "'t' is reserved for the tower variable");
    }
    if (degree > 1 && vars[i] == kGeneratorSymbol) {
      throw Error(ErrorKind::InvalidConfig, "'a' is reserved for the generator of F_q");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw Error(ErrorKind::InvalidConfig, "duplicate variable '" + vars[i] + "'");
    }
  }
  if (degree == 1) {
    return ConfigPtr(new FieldConfig(Fq(p, {}), std::move(vars)));
  }
  if (modulus.size() != degree + 1) {
    throw Error(ErrorKind::InvalidConfig, "F_q with d > 1 needs a monic modulus of degree d");
  }
  // Irreducibility is checked over F_p with the Rabin test, not trusted.
  auto prime = ConfigPtr(new FieldConfig(Fq(p, {}), {}));
  FqDomain dom{prime};
  std::vector<FqElement> coeffs;
  for (auto c : modulus) coeffs.push_back(prime->fq().from_int(BigInt(c)));
  UPoly<FqDomain> m(dom, Symbol{"X", 0}, std::move(coeffs));
  if (!m.is_monic()) throw Error(ErrorKind::InvalidConfig, "modulus must be monic");
  if (!irreducible_fq(m)) throw Error(ErrorKind::InvalidConfig, "modulus is not irreducible over F_p");
  return ConfigPtr(new FieldConfig(Fq(p, std::move(modulus)), std::move(vars)));
}

ConfigPtr FieldConfig::with_variable(const std::string& name) const {
  if (!is_identifier(name)) throw Error(ErrorKind::InvalidConfig, "bad variable name '" + name + "'");
  if (var_index(name)) throw Error(ErrorKind::InvalidConfig, "duplicate variable '" + name + "'");
  if (degree() > 1 && name == kGeneratorSymbol) {
    throw Error(ErrorKind::InvalidConfig, "'a' is reserved for the generator of F_q");
  }
  auto vars = vars_;
  vars.push_back(name);
  return ConfigPtr(new FieldConfig(fq_, std::move(vars)));
}

ConfigPtr FieldConfig::with_variables(std::vector<std::string> vars) const {
  return ConfigPtr(new FieldConfig(fq_, std::move(vars)));
}

std::optional<std::size_t> FieldConfig::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool FieldConfig::same_base(const FieldConfig& other) const noexcept {
  return p() == other.p() && fq_.modulus() == other.fq_.modulus();
}

bool FieldConfig::same_field(const FieldConfig& other) const noexcept {
  return this == &other || (same_base(other) && vars_ == other.vars_);
}

std::string FieldConfig::describe() const {
  std::string out = "F_" + fq_.order().str();
  if (!vars_.empty()) {
    out += "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i != 0) out += ",";
      out += vars_[i];
    }
    out += ")";
  }
  return out;
}

void require_same_field(const ConfigPtr& a, const ConfigPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_field(*b)) {
    throw Error(ErrorKind::IncompatibleFields, "operands live in different fields");
  }
}

}  // namespace perfclosure
