#include <random>

#include "gtest/gtest.h"
#include "helpers.hpp"
#include "perfclosure/fields/format.hpp"

namespace perfclosure {
namespace {

using testing::field;
using testing::rf;

// Schoolbook F_p[x]/(m) product, independent of the Fq class.
std::vector<std::uint64_t> naive_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                     const std::vector<std::uint64_t>& m, std::uint64_t p) {
  const std::size_t d = m.size() - 1;
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    const std::uint64_t c = prod[k];
    for (std::size_t j = 0; j <= d; ++j) prod[k - d + j] = (prod[k - d + j] + (p - c) * m[j]) % p;
  }
  prod.resize(d);
  return prod;
}

TEST(Fq, PrimeFieldArithmetic) {
  Fq f(7, {});
  EXPECT_EQ(f.degree(), 1u);
  const auto two = f.from_int(2);
  const auto four = f.from_int(4);
  EXPECT_EQ(f.mul(two, four), f.one());
  EXPECT_EQ(f.inv(four), two);
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_THROW(f.inv(f.zero()), Error);
}

TEST(Fq, ExtensionMatchesNaiveProduct) {
  const std::vector<std::uint64_t> m{2, 2, 0, 1};  // x^3 + 2x + 2 over F_3
  Fq f(3, m);
  EXPECT_EQ(f.order(), 27);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    FqElement a{{rng() % 3, rng() % 3, rng() % 3}};
    FqElement b{{rng() % 3, rng() % 3, rng() % 3}};
    EXPECT_EQ(f.mul(a, b).coords, naive_mul(a.coords, b.coords, m, 3));
    if (!f.is_zero(a)) EXPECT_TRUE(f.is_one(f.mul(a, f.inv(a))));
  }
}

TEST(Fq, FrobeniusHasOrderDegree) {
  Fq f(2, {1, 1, 0, 0, 1});  // x^4 + x + 1
  const auto g = f.generator();
  EXPECT_EQ(f.frobenius(g, 4), g);
  EXPECT_NE(f.frobenius(g, 1), g);
  EXPECT_EQ(f.frobenius(f.pth_root(g, 1), 1), g);
  EXPECT_EQ(f.frobenius(g, 1), f.mul(g, g));
}

TEST(FieldConfig, Validation) {
  EXPECT_THROW(FieldConfig::make(4, {"s"}), Error);
  EXPECT_THROW(FieldConfig::make(2, {"t"}), Error);
  EXPECT_THROW(FieldConfig::make(2, {"s", "s"}), Error);
  EXPECT_THROW(FieldConfig::make(2, {"s"}, 2, {1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
  EXPECT_NO_THROW(FieldConfig::make(2, {"s"}, 2, {1, 1, 1}));
  EXPECT_THROW(FieldConfig::make(2, {"a"}, 2, {1, 1, 1}), Error);
  EXPECT_EQ(field(2)->describe(), "F_2(s)");
}

TEST(RationalFunction, NormalizeExamples) {
  auto F2 = field(2);
  auto s = RationalFunction::variable(F2, 0);
  const auto x = rf_normalize((s * s + s).num(), s.num());
  EXPECT_EQ(format_rational(x), "s + 1");
  EXPECT_TRUE(x.den().is_one());

  const auto z = rf_normalize(Polynomial(F2), (s + RationalFunction::from_int(F2, 1)).num());
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.den().is_one());

  auto F7 = field(7);
  auto s7 = Polynomial::variable(F7, 0);
  const auto y = rf_normalize(s7.scaled(F7->fq().from_int(2)), Polynomial::from_int(F7, 4));
  EXPECT_EQ(y, rf(F7, "4*s"));  // 2 * 4^{-1} = 2 * 2 = 4 mod 7

  EXPECT_THROW(rf_normalize(s7, Polynomial(F7)), Error);
}

TEST(RationalFunction, FrobeniusExamples) {
  auto F2 = field(2);
  EXPECT_EQ(rf_frobenius(rf(F2, "s + 1"), 1), rf(F2, "s^2 + 1"));
  EXPECT_EQ(rf_frobenius(rf(F2, "1"), 3), rf(F2, "1"));
  auto F3 = field(3);
  const auto x = rf_frobenius(rf(F3, "s/(s+1)"), 1);
  // (s + 1)^3 expanded by repeated multiplication.
  const auto sp1 = Polynomial::variable(F3, 0) + Polynomial::from_int(F3, 1);
  EXPECT_EQ(x.den(), sp1 * sp1 * sp1);
  EXPECT_EQ(x.num(), Polynomial::variable(F3, 0, 3));
}

TEST(RationalFunction, PthRootExamples) {
  auto F2 = field(2);
  EXPECT_EQ(rf_pth_root(rf(F2, "s^2 + 1"), 1), rf(F2, "s + 1"));
  EXPECT_FALSE(rf_pth_root(rf(F2, "s"), 1).has_value());
  const auto y = rf_pth_root(rf(F2, "s^4/(s^4 + 1)"), 2);
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(*y, rf(F2, "s/(s+1)"));
  EXPECT_EQ(rf_frobenius(*y, 2), rf(F2, "s^4/(s^4 + 1)"));
  EXPECT_EQ(rf_pth_root(RationalFunction(F2), 4), RationalFunction(F2));
}

TEST(RationalFunction, PerfectSubfieldExamples) {
  EXPECT_TRUE(rf_in_perfect_subfield(rf(field(7), "5")));
  EXPECT_FALSE(rf_in_perfect_subfield(rf(field(2), "s")));
  EXPECT_FALSE(rf_in_perfect_subfield(rf(field(2), "(s^2 + 1)/(s + 1)")));
  EXPECT_TRUE(rf_in_perfect_subfield(RationalFunction(field(2))));
}

TEST(RationalFunction, PthPowerIndex) {
  auto F3 = field(3);
  EXPECT_EQ(rf_pth_power_index(rf(F3, "s^9 + 1")), 2u);
  EXPECT_EQ(rf_pth_power_index(rf(F3, "s")), 0u);
  EXPECT_FALSE(rf_pth_power_index(rf(F3, "2")).has_value());
}

class RationalProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RationalProperties, RootOfFrobeniusIsIdentity) {
  auto cfg = field(GetParam(), {"s", "u"});
  std::mt19937_64 rng(GetParam());
  for (int i = 0; i < 300; ++i) {
    const auto x = testing::random_rf(cfg, rng);
    const std::uint64_t e = 1 + i % 3;
    const auto y = rf_frobenius(x, e);
    EXPECT_EQ(rf_pth_root(y, e), x);
    // Frobenius agrees with repeated multiplication.
    if (e == 1) EXPECT_EQ(y, x.pow(static_cast<std::int64_t>(GetParam())));
  }
}

TEST_P(RationalProperties, RootsArePresentOnlyForPowers) {
  auto cfg = field(GetParam(), {"s"});
  std::mt19937_64 rng(100 + GetParam());
  for (int i = 0; i < 200; ++i) {
    const auto x = testing::random_rf(cfg, rng);
    bool absent = false;
    for (std::uint64_t e = 1; e <= 5; ++e) {
      const auto r = rf_pth_root(x, e);
      if (r) {
        EXPECT_FALSE(absent);
        EXPECT_EQ(rf_frobenius(*r, e), x);
      }
      absent = absent || !r;
    }
    EXPECT_EQ(rf_in_perfect_subfield(x), !absent);
  }
}

TEST_P(RationalProperties, FieldAxioms) {
  auto cfg = field(GetParam(), {"s", "u"});
  std::mt19937_64 rng(200 + GetParam());
  for (int i = 0; i < 200; ++i) {
    const auto x = testing::random_rf(cfg, rng);
    const auto y = testing::random_rf(cfg, rng);
    const auto z = testing::random_rf(cfg, rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, RationalFunction(cfg));
    if (!x.is_zero()) EXPECT_TRUE((x * x.inverse()).is_one());
    EXPECT_EQ(rf_normalize(x.num(), x.den()), x);
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, RationalProperties, ::testing::Values(2, 3, 5));

TEST(Polynomial, GcdOfProducts) {
  auto cfg = field(3, {"s", "u"});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto g = testing::random_poly(cfg, rng, 3, 3);
    const auto a = testing::random_poly(cfg, rng, 3, 3);
    const auto b = testing::random_poly(cfg, rng, 3, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const auto h = gcd(g * a, g * b);
    EXPECT_TRUE(divide_exact(h, g.monic()).has_value());
    EXPECT_TRUE(divide_exact(g * a, h).has_value());
    EXPECT_TRUE(divide_exact(g * b, h).has_value());
    EXPECT_TRUE(h.leading_coefficient() == cfg->fq().one());
  }
}

// Bivariate gcds take a dense route; a third variable factor forces the sparse one.
TEST(Polynomial, BivariateGcdAgreesWithThreeVariableGcd) {
  for (auto cfg : {field(2, {"s", "u", "z"}), field(3, {"s", "u", "z"}), field(2, {"s", "u", "z"}, 2, {1, 1, 1})}) {
    std::mt19937_64 rng(cfg->fq().order().convert_to<std::uint64_t>());
    const auto z1 = Polynomial::variable(cfg, 2) + Polynomial::from_int(cfg, 1);
    for (int i = 0; i < 40; ++i) {
      auto two_vars = [&](int terms, int max_exp) {
        std::vector<Term> out;
        const auto full = testing::random_poly(cfg, rng, terms, max_exp);
        for (const auto& t : full.terms()) {
          out.push_back({{t.exponents[0], t.exponents[1], 0}, t.coeff});
        }
        return Polynomial::from_terms(cfg, std::move(out));
      };
      const auto g = two_vars(2, 3);
      const auto a = two_vars(3, 3) * g;
      const auto b = two_vars(3, 3) * g;
      if (a.is_zero() || b.is_zero()) continue;
      EXPECT_EQ(gcd(a * z1, b * z1), (gcd(a, b) * z1).monic());
    }
  }
}

TEST(Polynomial, GcdOfInflatedInputs) {
  auto cfg = field(2);
  const auto s = Polynomial::variable(cfg, 0);
  const auto one = Polynomial::from_int(cfg, 1);
  const auto a = (s + one).pow(3).inflate(BigInt(1) << 40);
  const auto b = (s + one).pow(2).inflate(BigInt(1) << 40);
  EXPECT_EQ(gcd(a, b), (s + one).pow(2).inflate(BigInt(1) << 40));
}

TEST(Format, PowersRenderAsReducedFractions) {
  EXPECT_EQ(format_power("t", 2, 2, 2), "t^(1/2)");
  EXPECT_EQ(format_power("t", 4, 2, 2), "t");
  EXPECT_EQ(format_power("s", 3, 3, 1), "s");
  EXPECT_EQ(format_power("s", 5, 3, 1), "s^(5/3)");
  EXPECT_EQ(format_power("s", 0, 3, 1), "");
}

}  // namespace
}  // namespace perfclosure
