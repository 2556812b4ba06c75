#include "perfclosure/fields/format.hpp"

namespace perfclosure {

bool is_atomic_text(const std::string& text) {
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == ' ' || c == '/' || c == '-')) return false;
  }
  return true;
}

std::string format_power(const std::string& name, const BigInt& exponent, std::uint64_t p, std::uint64_t level) {
  if (exponent == 0) return "";
  BigInt num = exponent;
  BigInt den = ipow(p, level);
  const BigInt g = boost::multiprecision::gcd(num, den);
  num /= g;
  den /= g;
  if (den == 1) return num == 1 ? name : name + "^" + num.str();
  return name + "^(" + num.str() + "/" + den.str() + ")";
}

std::string format_fq(const FqElement& x, const ConfigPtr& config) {
  return config->fq().format(x, std::string(FieldConfig::kGeneratorSymbol));
}

std::string format_polynomial(const Polynomial& f, std::uint64_t level) {
  if (f.is_zero()) return "0";
  const ConfigPtr& cfg = f.config();
  std::string out;
  for (const auto& t : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < cfg->nvars(); ++i) {
      std::string piece = format_power(cfg->vars()[i], t.exponents[i], cfg->p(), level);
      if (piece.empty()) continue;
      if (!mono.empty()) mono += "*";
      mono += piece;
    }
    std::string coeff = format_fq(t.coeff, cfg);
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (cfg->fq().is_one(t.coeff)) {
      term = mono;
    } else {
      term = (is_atomic_text(coeff) ? coeff : "(" + coeff + ")") + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::string format_rational(const RationalFunction& x, std::uint64_t level) {
  std::string num = format_polynomial(x.num(), level);
  if (x.den().is_one()) return num;
  std::string den = format_polynomial(x.den(), level);
  auto wrap = [](const std::string& s) { return is_atomic_text(s) && s.find('*') == std::string::npos ? s : "(" + s + ")"; };
  return wrap(num) + "/" + wrap(den);
}

std::string format_tower(const TowerElement& x) { return format_rational(x.value(), x.level()); }

}  // namespace perfclosure
