#include "dense_gcd.hpp"

#include <algorithm>
#include <utility>

namespace perfclosure::detail {

namespace {

constexpr std::uint64_t kMaxDegree = 1u << 14;

// F_q elements packed as base-p integers.
class Scalars {
 public:
  explicit Scalars(const Fq& fq) : fq_(fq), p_(fq.characteristic()), d_(fq.degree()) {}

  std::uint64_t encode(const FqElement& x) const {
    std::uint64_t code = 0;
    for (std::size_t i = d_; i-- > 0;) code = code * p_ + x.coords[i];
    return code;
  }

  FqElement decode(std::uint64_t code) const {
    FqElement x = fq_.zero();
    for (std::size_t i = 0; i < d_; ++i, code /= p_) x.coords[i] = code % p_;
    return x;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (d_ == 1) return a + b >= p_ ? a + b - p_ : a + b;
    return encode(fq_.add(decode(a), decode(b)));
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    if (d_ == 1) return a >= b ? a - b : a + p_ - b;
    return encode(fq_.sub(decode(a), decode(b)));
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (d_ == 1) return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    return encode(fq_.mul(decode(a), decode(b)));
  }
  std::uint64_t inv(std::uint64_t a) const { return encode(fq_.inv(decode(a))); }

 private:
  const Fq& fq_;
  std::uint64_t p_;
  std::size_t d_;
};

using U = std::vector<std::uint64_t>;
using B = std::vector<U>;

void trim(U& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(B& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}

U mul(const Scalars& f, const U& a, const U& b) {
  if (a.empty() || b.empty()) return {};
  U out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

U sub(const Scalars& f, U a, const U& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

std::pair<U, U> divrem(const Scalars& f, U a, const U& b) {
  const std::uint64_t lead_inv = f.inv(b.back());
  if (a.size() < b.size()) return {U{}, std::move(a)};
  U q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

U monic(const Scalars& f, U a) {
  if (a.empty()) return a;
  const std::uint64_t s = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, s);
  return a;
}

U ugcd(const Scalars& f, U a, U b) {
  while (!b.empty()) {
    U r = divrem(f, std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

bool is_one(const U& a) { return a.size() == 1 && a[0] == 1; }

U content(const Scalars& f, const B& a) {
  U g;
  for (const auto& c : a) {
    g = ugcd(f, std::move(g), c);
    if (is_one(g)) break;
  }
  return g;
}

B divide_coefficients(const Scalars& f, B a, const U& c) {
  if (is_one(c)) return a;
  for (auto& x : a) x = divrem(f, std::move(x), c).first;
  return a;
}

B primitive(const Scalars& f, B a) { return divide_coefficients(f, a, content(f, a)); }

B pseudo_remainder(const Scalars& f, B a, const B& b) {
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    U la = a.back();
    U lb = b.back();
    const U g = ugcd(f, la, lb);
    if (!is_one(g)) {
      la = divrem(f, std::move(la), g).first;
      lb = divrem(f, std::move(lb), g).first;
    }
    for (auto& x : a) x = mul(f, x, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(f, std::move(a[shift + j]), mul(f, la, b[j]));
    trim(a);
  }
  return a;
}

B bgcd(const Scalars& f, B a, B b) {
  const U ca = content(f, a);
  const U cb = content(f, b);
  const U c = ugcd(f, ca, cb);
  a = divide_coefficients(f, std::move(a), ca);
  b = divide_coefficients(f, std::move(b), cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    B r = pseudo_remainder(f, std::move(a), b);
    a = std::move(b);
    if (r.empty()) {
      b = std::move(a);
      break;
    }
    b = primitive(f, std::move(r));
  }
  if (b.size() == 1) b = B{U{1}};
  for (auto& x : b) x = mul(f, x, c);
  return b;
}

}  // namespace

std::optional<Polynomial> dense_gcd(const Polynomial& a, const Polynomial& b) {
  const ConfigPtr& cfg = a.config();
  const Fq& fq = cfg->fq();
  if (fq.order() >= (BigInt(1) << 62)) return std::nullopt;
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < cfg->nvars(); ++i) {
    if (a.involves(i) || b.involves(i)) vars.push_back(i);
  }
  if (vars.empty() || vars.size() > 2) return std::nullopt;
  for (std::size_t v : vars) {
    if (a.degree_in(v) > kMaxDegree || b.degree_in(v) > kMaxDegree) return std::nullopt;
  }
  const Scalars f(fq);
  // Main variable y = vars.back(); coefficients are univariate in x = vars.front().
  const std::size_t y = vars.back();
  const std::size_t x = vars.front();
  const bool bivariate = vars.size() == 2;
  auto to_dense = [&](const Polynomial& p) {
    B out(static_cast<std::size_t>(p.degree_in(y)) + 1);
    for (const auto& t : p.terms()) {
      auto& row = out[static_cast<std::size_t>(t.exponents[y])];
      const std::size_t k = bivariate ? static_cast<std::size_t>(t.exponents[x]) : 0;
      if (row.size() <= k) row.resize(k + 1, 0);
      row[k] = f.encode(t.coeff);
    }
    return out;
  };

  std::vector<Term> terms;
  if (bivariate) {
    const B g = bgcd(f, to_dense(a), to_dense(b));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g[i].size(); ++j) {
        if (g[i][j] == 0) continue;
        Monomial m(cfg->nvars(), 0);
        m[y] = i;
        m[x] = j;
        terms.push_back({std::move(m), f.decode(g[i][j])});
      }
    }
  } else {
    auto flatten = [](const B& rows) {
      U out;
      for (const auto& r : rows) out.push_back(r.empty() ? 0 : r[0]);
      return out;
    };
    const U g = ugcd(f, flatten(to_dense(a)), flatten(to_dense(b)));
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      Monomial m(cfg->nvars(), 0);
      m[y] = i;
      terms.push_back({std::move(m), f.decode(g[i])});
    }
  }
  return Polynomial::from_terms(cfg, std::move(terms));
}

}  // namespace perfclosure::detail
