#include "perfclosure/cli/parse.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <optional>

namespace perfclosure {

namespace {

class Parser {
 public:
  Parser(std::string_view text, ConfigPtr config) : text_(text), cfg_(std::move(config)) {}

  TowerElement parse() {
    TowerElement value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorKind::SyntaxError, pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  BigInt integer() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  TowerElement constant(const BigInt& c) const { return TowerElement(RationalFunction::from_int(cfg_, c)); }

  TowerElement expr() {
    TowerElement value = term();
    while (true) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  TowerElement term() {
    TowerElement value = unary();
    while (true) {
      if (accept('*')) {
        value = value * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        TowerElement d = unary();
        if (d.is_zero()) throw ParseError(ErrorKind::ZeroDenominator, at, "division by zero");
        value = value / d;
      } else {
        return value;
      }
    }
  }

  TowerElement unary() {
    if (accept('-')) return -unary();
    return power();
  }

  TowerElement power() {
    TowerElement base = atom();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    BigInt num;
    BigInt den = 1;
    if (accept('(')) {
      const bool negative = accept('-');
      num = integer();
      if (negative) num = -num;
      if (accept('/')) {
        den = accept_characteristic() ? BigInt(cfg_->p()) : integer();
        if (accept('^')) den = boost::multiprecision::pow(den, static_cast<unsigned>(integer()));
      }
      expect(')');
    } else {
      const bool negative = accept('-');
      num = integer();
      if (negative) num = -num;
    }
    std::uint64_t level = 0;
    BigInt rest = den;
    while (rest > 1 && rest % cfg_->p() == 0) {
      rest /= cfg_->p();
      ++level;
    }
    if (rest != 1) {
      throw ParseError(ErrorKind::NonCanonicalExponent, at,
                       "exponent denominator " + den.str() + " is not a power of " + std::to_string(cfg_->p()));
    }
    if (base.is_zero() && num <= 0) throw ParseError(ErrorKind::DivisionByZero, at, "non-positive power of zero");
    if (num > std::numeric_limits<std::int64_t>::max() || num < -std::numeric_limits<std::int64_t>::max()) {
      throw ParseError(ErrorKind::BoundsExceeded, at, "exponent too large");
    }
    TowerElement value = te_pow(base, static_cast<std::int64_t>(num));
    for (std::uint64_t i = 0; i < level; ++i) value = te_pth_root(value);
    return value;
  }

  // The letter p standing for the characteristic inside an exponent denominator.
  bool accept_characteristic() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'p') return false;
    if (pos_ + 1 < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_')) {
      return false;
    }
    ++pos_;
    return true;
  }

  TowerElement atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      TowerElement value = expr();
      expect(')');
      return value;
    }
    if (at_digit()) return constant(integer());
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto idx = cfg_->var_index(name)) return TowerElement(RationalFunction::variable(cfg_, *idx));
      if (name == FieldConfig::kGeneratorSymbol && cfg_->degree() > 1) {
        return TowerElement(RationalFunction::constant(cfg_, cfg_->fq().generator()));
      }
      throw ParseError(ErrorKind::UnknownVariable, start, "unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  ConfigPtr cfg_;
  std::size_t pos_ = 0;
};

// Drops the variable at index `drop` (whose exponent must be zero) and moves the
// polynomial to `target`.
Polynomial project(const Polynomial& f, std::size_t drop, const ConfigPtr& target) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (i != drop) mono.push_back(t.exponents[i]);
    }
    terms.push_back({std::move(mono), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// The coefficients of the symbol as elements of F_q(V)_per.
std::vector<TowerElement> tower_coefficients(std::string_view text, const ConfigPtr& cfg, const Symbol& symbol) {
  if (cfg->var_index(symbol.name)) {
    throw Error(ErrorKind::InvalidArgument, "indeterminate '" + symbol.name + "' is also a coefficient variable");
  }
  const ConfigPtr ext = cfg->with_variable(symbol.name);
  const std::size_t idx = ext->nvars() - 1;
  const TowerElement x = Parser(text, ext).parse();
  const std::uint64_t level = std::max(x.level(), symbol.level);
  const RationalFunction v = x.value_at_level(level);
  if (v.den().involves(idx)) {
    throw Error(ErrorKind::NotPolynomial, "'" + std::string(text) + "' has " + symbol.name + " in a denominator");
  }
  const BigInt step = ipow(cfg->p(), level - symbol.level);
  const Polynomial den = project(v.den(), idx, cfg);
  std::map<std::size_t, std::vector<Term>> by_degree;
  for (const auto& t : v.num().terms()) {
    const BigInt& e = t.exponents[idx];
    if (e % step != 0) {
      throw Error(ErrorKind::NotPolynomial, "'" + std::string(text) + "' is not a polynomial in " +
                                                format_power(symbol.name, 1, cfg->p(), symbol.level));
    }
    Monomial mono = t.exponents;
    mono[idx] = 0;
    by_degree[static_cast<std::size_t>(e / step)].push_back({std::move(mono), t.coeff});
  }
  std::vector<TowerElement> out;
  for (auto& [k, terms] : by_degree) {
    if (out.size() <= k) out.resize(k + 1, TowerElement(cfg));
    const Polynomial num = project(Polynomial::from_terms(ext, std::move(terms)), idx, cfg);
    out[k] = te_normalize(level, rf_normalize(num, den));
  }
  return out;
}

[[noreturn]] void wrong_field(const TowerElement& c, const std::string& field) {
  throw Error(ErrorKind::WrongCoefficientField, "coefficient " + format_tower(c) + " does not lie in " + field);
}

}  // namespace

TowerElement parse_tower_element(std::string_view text, const ConfigPtr& config) { return Parser(text, config).parse(); }

RationalFunction parse_rational(std::string_view text, const ConfigPtr& config) {
  const TowerElement x = parse_tower_element(text, config);
  if (x.level() != 0) wrong_field(x, config->describe());
  return x.value();
}

UPoly<FqDomain> parse_upoly(std::string_view text, const FqDomain& dom, const Symbol& symbol) {
  std::vector<FqElement> coeffs;
  for (const auto& c : tower_coefficients(text, dom.cfg, symbol)) {
    if (!c.is_constant()) wrong_field(c, dom.name());
    coeffs.push_back(c.value().num().constant_coefficient());
  }
  return UPoly<FqDomain>(dom, symbol, std::move(coeffs));
}

UPoly<RationalDomain> parse_upoly(std::string_view text, const RationalDomain& dom, const Symbol& symbol) {
  std::vector<RationalFunction> coeffs;
  for (const auto& c : tower_coefficients(text, dom.cfg, symbol)) {
    if (c.level() != 0) wrong_field(c, dom.name());
    coeffs.push_back(c.value());
  }
  return UPoly<RationalDomain>(dom, symbol, std::move(coeffs));
}

UPoly<PerfectDomain> parse_upoly(std::string_view text, const PerfectDomain& dom, const Symbol& symbol) {
  return UPoly<PerfectDomain>(dom, symbol, tower_coefficients(text, dom.cfg, symbol));
}

}  // namespace perfclosure
