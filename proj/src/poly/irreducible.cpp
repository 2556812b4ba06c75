#include "perfclosure/poly/irreducible.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace perfclosure {

namespace {

UPoly<FqDomain> powmod(const UPoly<FqDomain>& base, BigInt e, const UPoly<FqDomain>& modulus) {
  UPoly<FqDomain> result = UPoly<FqDomain>::constant(base.domain(), base.symbol(), base.domain().one());
  UPoly<FqDomain> b = poly_rem(base, modulus);
  while (e > 0) {
    if ((e & 1) != 0) result = poly_rem(result * b, modulus);
    e >>= 1;
    if (e > 0) b = poly_rem(b * b, modulus);
  }
  return result;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---- trial division over F_q[s] -------------------------------------------

using PolyVec = std::vector<Polynomial>;  // lowest degree first, monic

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t sdeg(const Polynomial& c) {
  if (c.config()->nvars() == 0) return 0;
  return static_cast<std::int64_t>(c.degree_in(0));
}

// b_j for j = 0..n: bound on deg_s of the j-th elementary symmetric function of
// any j roots, from the lower Newton hull of the points (i, -deg c_i).
std::vector<std::int64_t> newton_bounds(const PolyVec& c) {
  const std::int64_t n = static_cast<std::int64_t>(c.size()) - 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (std::int64_t i = 0; i <= n; ++i) {
    if (c[static_cast<std::size_t>(i)].is_zero()) continue;
    std::pair<std::int64_t, std::int64_t> pt{i, -sdeg(c[static_cast<std::size_t>(i)])};
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const std::int64_t cross = (a.first - o.first) * (pt.second - o.second) - (a.second - o.second) * (pt.first - o.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  const std::int64_t low = hull.front().first;
  // floor(-H(x)) for integer x in [low, n].
  auto neg_hull_floor = [&](std::int64_t x) {
    x = std::max(x, low);
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      const auto [a, wa] = hull[k];
      const auto [b, wb] = hull[k + 1];
      if (x >= a && x <= b) return floor_div(-wa * (b - a) - (wb - wa) * (x - a), b - a);
    }
    return -hull.back().second;
  };
  std::vector<std::int64_t> bounds(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t best = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    best = std::max(best, neg_hull_floor(n - j));
    bounds[static_cast<std::size_t>(j)] = best;
  }
  return bounds;
}

std::vector<FqElement> all_fq_elements(const Fq& fq) {
  const std::uint64_t q = static_cast<std::uint64_t>(fq.order());
  std::vector<FqElement> out;
  out.reserve(q);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    FqElement x{std::vector<std::uint64_t>(fq.degree(), 0)};
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < fq.degree(); ++i) {
      x.coords[i] = v % fq.characteristic();
      v /= fq.characteristic();
    }
    out.push_back(std::move(x));
  }
  return out;
}

// All polynomials in F_q[s] of degree <= bound (just 0 when bound < 0).
std::vector<Polynomial> all_polys(const ConfigPtr& cfg, const std::vector<FqElement>& elems, std::int64_t bound) {
  std::vector<Polynomial> out{Polynomial(cfg)};
  if (bound < 0) return out;
  if (cfg->nvars() == 0) bound = 0;
  for (std::int64_t deg = 0; deg <= bound; ++deg) {
    std::vector<Polynomial> next;
    next.reserve(out.size() * elems.size());
    Monomial mono(cfg->nvars(), BigInt(0));
    if (cfg->nvars() == 1) mono[0] = deg;
    for (const auto& base : out) {
      for (const auto& c : elems) next.push_back(base + Polynomial::monomial(cfg, mono, c));
    }
    out = std::move(next);
  }
  return out;
}

// Divides monic f by monic g; quotient if exact.
std::optional<PolyVec> divide_monic(const PolyVec& f, const PolyVec& g) {
  const std::size_t n = f.size() - 1;
  const std::size_t k = g.size() - 1;
  PolyVec rem = f;
  PolyVec quot(n - k + 1, Polynomial(f[0].config()));
  for (std::size_t i = n + 1; i-- > k;) {
    if (rem[i].is_zero()) continue;
    Polynomial c = rem[i];
    for (std::size_t j = 0; j <= k; ++j) {
      if (!g[j].is_zero()) rem[i - k + j] = rem[i - k + j] - c * g[j];
    }
    quot[i - k] = std::move(c);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!rem[i].is_zero()) return std::nullopt;
  }
  return quot;
}

class TrialDivision {
 public:
  TrialDivision(const RationalDomain& dom, const Symbol& symbol, const OracleBounds& bounds)
      : dom_(dom), symbol_(symbol), bounds_(bounds), elems_(all_fq_elements(dom.cfg->fq())) {}

  void run(const UPoly<RationalDomain>& f, unsigned mult, FactorList<RationalDomain>& out) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const ConfigPtr& cfg = dom_.cfg;
    Polynomial denom = Polynomial::from_int(cfg, 1);
    for (const auto& a : f.coeffs()) {
      const Polynomial g = gcd(denom, a.den());
      denom = exact_quotient(denom * a.den(), g);
    }
    PolyVec c;
    for (std::size_t i = 0; i <= n; ++i) {
      RationalFunction scaled = f.coeff(i) * RationalFunction(denom.pow(n - i));
      c.push_back(scaled.num());
    }
    if (n > bounds_.max_x_degree) {
      throw Error(ErrorKind::BoundsExceeded, "factor search: degree " + std::to_string(n) + " in X exceeds the bound " +
                                                 std::to_string(bounds_.max_x_degree));
    }
    for (const auto& ci : c) {
      if (!ci.is_zero() && sdeg(ci) > static_cast<std::int64_t>(bounds_.max_s_degree)) {
        throw Error(ErrorKind::BoundsExceeded, "factor search: coefficient degree " + std::to_string(sdeg(ci)) +
                                                   " exceeds the bound " + std::to_string(bounds_.max_s_degree));
      }
    }
    split(std::move(c), denom, mult, out);
  }

 private:
  void split(PolyVec c, const Polynomial& denom, unsigned mult, FactorList<RationalDomain>& out) {
    while (c.size() > 1) {
      auto g = smallest_factor(c);
      if (!g) {
        record(c, denom, mult, out);
        return;
      }
      unsigned count = 0;
      while (c.size() >= g->size()) {
        auto q = divide_monic(c, *g);
        if (!q) break;
        c = std::move(*q);
        ++count;
      }
      record(*g, denom, mult * count, out);
    }
  }

  std::optional<PolyVec> smallest_factor(const PolyVec& c) {
    const std::size_t n = c.size() - 1;
    if (n <= 1) return std::nullopt;
    const auto nb = newton_bounds(c);
    const ConfigPtr& cfg = dom_.cfg;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      std::vector<std::vector<Polynomial>> choices(k + 1);
      BigInt total = 1;
      for (std::size_t j = 1; j <= k; ++j) {
        const std::int64_t b = nb[j];
        if (b >= 0) total *= ipow(static_cast<std::uint64_t>(elems_.size()), static_cast<std::uint64_t>(cfg->nvars() == 0 ? 1 : b + 1));
      }
      if (total > bounds_.max_candidates) {
        throw Error(ErrorKind::BoundsExceeded, "factor search needs " + total.str() + " trial divisors");
      }
      for (std::size_t j = 1; j <= k; ++j) choices[j] = all_polys(cfg, elems_, nb[j]);
      // The constant term of a factor divides the constant term of f.
      if (!c[0].is_zero()) {
        std::vector<Polynomial> kept;
        for (auto& e : choices[k]) {
          if (!e.is_zero() && divide_exact(c[0], e)) kept.push_back(std::move(e));
        }
        choices[k] = std::move(kept);
      }
      if (choices[k].empty()) continue;
      std::vector<std::size_t> idx(k + 1, 0);
      PolyVec g(k + 1, Polynomial(cfg));
      g[k] = Polynomial::from_int(cfg, 1);
      while (true) {
        // g = Y^k + e_1 Y^{k-1} + ... + e_k
        for (std::size_t j = 1; j <= k; ++j) g[k - j] = choices[j][idx[j]];
        if (divide_monic(c, g)) return g;
        std::size_t j = 1;
        while (j <= k) {
          if (++idx[j] < choices[j].size()) break;
          idx[j] = 0;
          ++j;
        }
        if (j > k) break;
      }
    }
    return std::nullopt;
  }

  // Undo Y = D*X: g(X) = D^{-k} g~(D X).
  void record(const PolyVec& g, const Polynomial& denom, unsigned mult, FactorList<RationalDomain>& out) {
    const std::size_t k = g.size() - 1;
    std::vector<RationalFunction> coeffs;
    for (std::size_t i = 0; i <= k; ++i) {
      coeffs.push_back(RationalFunction(g[i]) / RationalFunction(denom.pow(k - i)));
    }
    out.push_back({MonicPoly<RationalDomain>(UPoly<RationalDomain>(dom_, symbol_, std::move(coeffs))), mult});
  }

  RationalDomain dom_;
  Symbol symbol_;
  OracleBounds bounds_;
  std::vector<FqElement> elems_;
};

// ---- decomposition before trial division -----------------------------------

void decompose(const UPoly<RationalDomain>& f, unsigned mult, TrialDivision& trial, FactorList<RationalDomain>& out);

void decompose_inseparable(const UPoly<RationalDomain>& f, unsigned mult, TrialDivision& trial,
                           FactorList<RationalDomain>& out) {
  const std::size_t p = f.domain().characteristic();
  if (auto root = poly_pth_root(f)) {
    decompose(*root, mult * static_cast<unsigned>(p), trial, out);
    return;
  }
  // f = h(X^p): factor h, then treat each phi(X^p).
  std::vector<RationalFunction> hc;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) hc.push_back(f.coeffs()[i]);
  FactorList<RationalDomain> inner;
  decompose(UPoly<RationalDomain>(f.domain(), f.symbol(), std::move(hc)), 1, trial, inner);
  for (const auto& [phi, e] : inner) {
    UPoly<RationalDomain> lifted = substitute_power(phi.poly(), p, f.symbol());
    if (auto psi = root_coefficients(phi.poly(), f.symbol())) {
      decompose(*psi, mult * e * static_cast<unsigned>(p), trial, out);
    } else {
      trial.run(lifted, mult * e, out);
    }
  }
}

void decompose(const UPoly<RationalDomain>& f, unsigned mult, TrialDivision& trial, FactorList<RationalDomain>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back({MonicPoly<RationalDomain>(make_monic(f)), mult});
    return;
  }
  const UPoly<RationalDomain> df = derivative(f);
  if (df.is_zero()) {
    decompose_inseparable(f, mult, trial, out);
    return;
  }
  // Yun's squarefree decomposition; what remains in c has zero derivative.
  UPoly<RationalDomain> c = poly_gcd(f, df);
  UPoly<RationalDomain> w = poly_exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly<RationalDomain> y = poly_gcd(w, c);
    UPoly<RationalDomain> z = poly_exact_quotient(w, y);
    if (z.degree() == 1) {
      out.push_back({MonicPoly<RationalDomain>(make_monic(z)), mult * i});
    } else if (z.degree() > 1) {
      trial.run(make_monic(z), mult * i, out);
    }
    ++i;
    c = poly_exact_quotient(c, y);
    w = std::move(y);
  }
  if (c.degree() > 0) decompose_inseparable(make_monic(c), mult, trial, out);
}

}  // namespace

bool irreducible_fq(const UPoly<FqDomain>& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const UPoly<FqDomain> g = make_monic(f);
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const BigInt q = g.domain().cfg->fq().order();
  const UPoly<FqDomain> x = UPoly<FqDomain>::monomial(g.domain(), g.symbol(), g.domain().one(), 1);
  // frob[k] = X^{q^k} mod g
  std::vector<UPoly<FqDomain>> frob{poly_rem(x, g)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[n] == poly_rem(x, g))) return false;
  for (std::size_t l : prime_divisors(n)) {
    const UPoly<FqDomain> h = poly_gcd(g, frob[n / l] - x);
    if (h.degree() != 0) return false;
  }
  return true;
}

std::optional<UPoly<FqDomain>> to_fq_poly(const UPoly<RationalDomain>& f) {
  FqDomain dom{f.domain().cfg};
  std::vector<FqElement> coeffs;
  for (const auto& c : f.coeffs()) {
    if (!c.is_constant()) return std::nullopt;
    coeffs.push_back(c.num().constant_coefficient());
  }
  return UPoly<FqDomain>(dom, f.symbol(), std::move(coeffs));
}

bool irreducible_fq(const UPoly<RationalDomain>& f) {
  auto g = to_fq_poly(f);
  if (!g) throw Error(ErrorKind::WrongCoefficientField, "coefficients do not lie in F_q");
  return irreducible_fq(*g);
}

FactorList<RationalDomain> factor_oracle(const MonicPoly<RationalDomain>& f, const OracleBounds& bounds) {
  if (f.domain().cfg->nvars() >= 2) {
    throw Error(ErrorKind::MultivariateUnsupported, "factorization over " + f.domain().name() + " is not supported");
  }
  TrialDivision trial(f.domain(), f.symbol(), bounds);
  FactorList<RationalDomain> raw;
  decompose(f.poly(), 1, trial, raw);
  FactorList<RationalDomain> merged;
  for (auto& fac : raw) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.poly == fac.poly; });
    if (it != merged.end()) {
      it->multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return format_upoly(a.poly) < format_upoly(b.poly);
  });
  return merged;
}

UPoly<RationalDomain> expand(const FactorList<RationalDomain>& factors, const Symbol& symbol, const RationalDomain& dom) {
  UPoly<RationalDomain> out = UPoly<RationalDomain>::constant(dom, symbol, dom.one());
  for (const auto& [g, e] : factors) out = out * poly_pow(g.poly(), e);
  return out;
}

bool is_irreducible(const MonicPoly<FqDomain>& f) { return irreducible_fq(f.poly()); }

bool is_irreducible(const MonicPoly<RationalDomain>& f, const OracleBounds& bounds) {
  if (f.degree() == 0) return false;
  if (f.degree() == 1) return true;
  if (auto g = to_fq_poly(f.poly())) return irreducible_fq(*g);
  const auto factors = factor_oracle(f, bounds);
  return factors.size() == 1 && factors[0].multiplicity == 1;
}

LevelDescent descend_to_common_level(const UPoly<PerfectDomain>& f) {
  std::uint64_t level = 0;
  for (const auto& c : f.coeffs()) level = std::max(level, c.level());
  std::vector<RationalFunction> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(c.value_at_level(level));
  return {level, UPoly<RationalDomain>(RationalDomain{f.domain().cfg}, f.symbol(), std::move(coeffs))};
}

UPoly<PerfectDomain> ascend_from_level(const UPoly<RationalDomain>& f, std::uint64_t level) {
  std::vector<TowerElement> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(te_normalize(level, c));
  return UPoly<PerfectDomain>(PerfectDomain{f.domain().cfg}, f.symbol(), std::move(coeffs));
}

bool is_irreducible(const MonicPoly<PerfectDomain>& f, const OracleBounds& bounds) {
  if (f.degree() == 0) return false;
  if (f.degree() == 1) return true;
  if (derivative(f.poly()).is_zero()) return false;
  const LevelDescent d = descend_to_common_level(f.poly());
  return is_irreducible(MonicPoly<RationalDomain>(d.poly), bounds);
}

}  // namespace perfclosure
