#include "perfclosure/fields/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "dense_gcd.hpp"
#include "perfclosure/error.hpp"

namespace perfclosure {

namespace {

BigInt monomial_degree(const Monomial& m) {
  BigInt d = 0;
  for (const auto& e : m) d += e;
  return d;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_sub(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial monomial_add(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const BigInt da = monomial_degree(a);
  const BigInt db = monomial_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Polynomial::Polynomial(ConfigPtr config) : config_(std::move(config)) {}

Polynomial::Polynomial(ConfigPtr config, std::vector<Term> sorted_terms)
    : config_(std::move(config)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(ConfigPtr config, FqElement c) {
  Monomial zero(config->nvars(), 0);
  return monomial(std::move(config), std::move(zero), std::move(c));
}

Polynomial Polynomial::from_int(ConfigPtr config, const BigInt& c) {
  auto value = config->fq().from_int(c);
  return constant(std::move(config), std::move(value));
}

Polynomial Polynomial::variable(ConfigPtr config, std::size_t index, const BigInt& exponent) {
  if (index >= config->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m(config->nvars(), 0);
  m[index] = exponent;
  auto one = config->fq().one();
  return monomial(std::move(config), std::move(m), std::move(one));
}

Polynomial Polynomial::monomial(ConfigPtr config, Monomial exponents, FqElement c) {
  if (exponents.size() != config->nvars()) throw Error(ErrorKind::InvalidArgument, "monomial arity mismatch");
  if (config->fq().is_zero(c)) return Polynomial(std::move(config));
  std::vector<Term> terms;
  terms.push_back(Term{std::move(exponents), std::move(c)});
  return Polynomial(std::move(config), std::move(terms));
}

Polynomial Polynomial::from_terms(ConfigPtr config, std::vector<Term> terms) {
  const Fq& fq = config->fq();
  std::map<Monomial, FqElement, GrlexGreater> acc;
  for (auto& t : terms) {
    if (t.exponents.size() != config->nvars()) throw Error(ErrorKind::InvalidArgument, "monomial arity mismatch");
    auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coeff);
    if (!inserted) it->second = fq.add(it->second, t.coeff);
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!fq.is_zero(c)) out.push_back(Term{m, c});
  }
  return Polynomial(std::move(config), std::move(out));
}

bool Polynomial::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (const auto& e : terms_[0].exponents) {
    if (e != 0) return false;
  }
  return true;
}

bool Polynomial::is_one() const noexcept {
  return is_constant() && !terms_.empty() && config_->fq().is_one(terms_[0].coeff);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.front();
}

FqElement Polynomial::constant_coefficient() const {
  if (!terms_.empty()) {
    const auto& last = terms_.back();
    if (std::all_of(last.exponents.begin(), last.exponents.end(), [](const BigInt& e) { return e == 0; })) {
      return last.coeff;
    }
  }
  return config_->fq().zero();
}

BigInt Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return monomial_degree(terms_.front().exponents);
}

BigInt Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  BigInt d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.exponents[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = config_->fq().neg(t.coeff);
  return Polynomial(config_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.config_, b.config_);
  const Fq& fq = a.config_->fq();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i].exponents, b.terms_[j].exponents))) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].exponents, a.terms_[i].exponents)) {
      out.push_back(b.terms_[j++]);
    } else {
      auto c = fq.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (!fq.is_zero(c)) out.push_back(Term{a.terms_[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Polynomial(a.config_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.config_, b.config_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.config_);
  const Fq& fq = a.config_->fq();
  std::map<Monomial, FqElement, GrlexGreater> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto m = monomial_add(x.exponents, y.exponents);
      auto c = fq.mul(x.coeff, y.coeff);
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second = fq.add(it->second, c);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!fq.is_zero(c)) out.push_back(Term{m, c});
  }
  return Polynomial(a.config_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.config_.get() != b.config_.get() && !a.config_->same_field(*b.config_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::scaled(const FqElement& c) const {
  const Fq& fq = config_->fq();
  if (fq.is_zero(c)) return Polynomial(config_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = fq.mul(t.coeff, c);
  return Polynomial(config_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = from_int(config_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(config_->fq().inv(leading_coefficient()));
}

Polynomial Polynomial::frobenius(const BigInt& e) const {
  const BigInt factor = ipow(config_->p(), static_cast<std::uint64_t>(e));
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    for (auto& x : t.exponents) x *= factor;
    t.coeff = config_->fq().frobenius(t.coeff, e);
  }
  // Scaling every exponent by the same factor preserves grlex order.
  return Polynomial(config_, std::move(out));
}

std::optional<Polynomial> Polynomial::pth_root(const BigInt& e) const {
  auto deflated = deflate(ipow(config_->p(), static_cast<std::uint64_t>(e)));
  if (!deflated) return std::nullopt;
  for (auto& t : deflated->terms_) t.coeff = config_->fq().pth_root(t.coeff, e);
  return deflated;
}

Polynomial Polynomial::inflate(const BigInt& factor) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    for (auto& x : t.exponents) x *= factor;
  }
  return Polynomial(config_, std::move(out));
}

std::optional<Polynomial> Polynomial::deflate(const BigInt& factor) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    for (auto& x : t.exponents) {
      if (x % factor != 0) return std::nullopt;
      x /= factor;
    }
  }
  return Polynomial(config_, std::move(out));
}

Polynomial Polynomial::embed(const ConfigPtr& target) const {
  if (!config_->same_base(*target)) throw Error(ErrorKind::IncompatibleFields, "embedding across different F_q");
  std::vector<std::size_t> index;
  for (const auto& name : config_->vars()) {
    auto pos = target->var_index(name);
    if (!pos) throw Error(ErrorKind::IncompatibleFields, "target field lacks variable '" + name + "'");
    index.push_back(*pos);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars(), 0);
    for (std::size_t i = 0; i < index.size(); ++i) m[index[i]] = t.exponents[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.config(), b.config());
  if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
  const ConfigPtr& cfg = a.config();
  const Fq& fq = cfg->fq();
  const Term& lead = b.leading_term();
  const FqElement lead_inv = fq.inv(lead.coeff);
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!divides(lead.exponents, lt.exponents)) return std::nullopt;
    Term q{monomial_sub(lt.exponents, lead.exponents), fq.mul(lt.coeff, lead_inv)};
    r = r - Polynomial::monomial(cfg, q.exponents, q.coeff) * b;
    quotient.push_back(std::move(q));
  }
  // Quotient terms come out in strictly decreasing order.
  return Polynomial::from_terms(cfg, std::move(quotient));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return *std::move(q);
}

namespace {

using UnivariateView = std::map<BigInt, Polynomial, std::greater<>>;

UnivariateView view_in(const Polynomial& a, std::size_t v) {
  std::map<BigInt, std::vector<Term>, std::greater<>> buckets;
  for (const auto& t : a.terms()) {
    Term stripped = t;
    stripped.exponents[v] = 0;
    buckets[t.exponents[v]].push_back(std::move(stripped));
  }
  UnivariateView out;
  for (auto& [e, terms] : buckets) out.emplace(e, Polynomial::from_terms(a.config(), std::move(terms)));
  return out;
}

BigInt degree_in_view(const Polynomial& a, std::size_t v) { return a.degree_in(v); }

Polynomial leading_in(const Polynomial& a, std::size_t v) { return view_in(a, v).begin()->second; }

Polynomial content_in(const Polynomial& a, std::size_t v) {
  Polynomial g(a.config());
  for (const auto& [e, c] : view_in(a, v)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, std::size_t v) {
  const BigInt db = degree_in_view(b, v);
  const Polynomial lb = leading_in(b, v);
  while (!r.is_zero() && degree_in_view(r, v) >= db) {
    const BigInt dr = degree_in_view(r, v);
    const Polynomial lr = leading_in(r, v);
    r = lb * r - lr * Polynomial::variable(r.config(), v, dr - db) * b;
  }
  return r;
}

Polynomial primitive_part(const Polynomial& a, std::size_t v) { return exact_quotient(a, content_in(a, v)); }

Polynomial gcd_core(Polynomial a, Polynomial b) {
  const ConfigPtr& cfg = a.config();
  if (a.is_constant() || b.is_constant()) return Polynomial::from_int(cfg, 1);
  if (auto g = detail::dense_gcd(a, b)) return *std::move(g);
  std::size_t v = cfg->nvars();
  for (std::size_t i = cfg->nvars(); i-- > 0;) {
    if (a.involves(i) || b.involves(i)) {
      v = i;
      break;
    }
  }
  if (!a.involves(v)) return gcd(a, content_in(b, v));
  if (!b.involves(v)) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  a = exact_quotient(a, ca);
  b = exact_quotient(b, cb);
  if (degree_in_view(a, v) < degree_in_view(b, v)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      b = Polynomial::from_int(cfg, 1);
      break;
    }
    a = std::move(b);
    b = primitive_part(r, v);
  }
  return c * primitive_part(b, v);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.config(), b.config());
  const ConfigPtr& cfg = a.config();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::from_int(cfg, 1);

  const std::size_t n = cfg->nvars();
  // Split off monomial contents.
  Monomial ma = a.terms().front().exponents;
  Monomial mb = b.terms().front().exponents;
  for (const auto& t : a.terms()) {
    for (std::size_t i = 0; i < n; ++i) ma[i] = std::min(ma[i], t.exponents[i]);
  }
  for (const auto& t : b.terms()) {
    for (std::size_t i = 0; i < n; ++i) mb[i] = std::min(mb[i], t.exponents[i]);
  }
  Monomial mg(n);
  for (std::size_t i = 0; i < n; ++i) mg[i] = std::min(ma[i], mb[i]);

  // Per-variable exponent gcd of the shifted supports, divided out before the
  // core computation: gcd(f(v^g), h(v^g)) = gcd(f, h)(v^g).
  std::vector<BigInt> stride(n, 0);
  auto shift_and_collect = [&](const Polynomial& x, const Monomial& shift) {
    std::vector<Term> out;
    for (const auto& t : x.terms()) {
      Term s{monomial_sub(t.exponents, shift), t.coeff};
      for (std::size_t i = 0; i < n; ++i) stride[i] = boost::multiprecision::gcd(stride[i], s.exponents[i]);
      out.push_back(std::move(s));
    }
    return out;
  };
  auto ta = shift_and_collect(a, ma);
  auto tb = shift_and_collect(b, mb);
  auto squash = [&](std::vector<Term> terms) {
    for (auto& t : terms) {
      for (std::size_t i = 0; i < n; ++i) {
        if (stride[i] > 1) t.exponents[i] /= stride[i];
      }
    }
    return Polynomial::from_terms(cfg, std::move(terms));
  };
  Polynomial core = gcd_core(squash(std::move(ta)), squash(std::move(tb)));

  std::vector<Term> expanded;
  for (const auto& t : core.terms()) {
    Term s = t;
    for (std::size_t i = 0; i < n; ++i) {
      if (stride[i] > 1) s.exponents[i] *= stride[i];
      s.exponents[i] += mg[i];
    }
    expanded.push_back(std::move(s));
  }
  return Polynomial::from_terms(cfg, std::move(expanded)).monic();
}

}  // namespace perfclosure
