#include <random>

#include "gtest/gtest.h"
#include "helpers.hpp"
#include "perfclosure/primetower/primetower.hpp"

namespace perfclosure {
namespace {

using testing::field;

MonicPoly<RationalDomain> gen(const ConfigPtr& cfg, const std::string& text, std::uint64_t level) {
  return testing::rmonic(cfg, text, "t", level);
}

TowerPrime<RationalDomain> prime(const ConfigPtr& cfg, const std::string& text, std::uint64_t level = 0) {
  return TowerPrime<RationalDomain>::certified(level, gen(cfg, text, level));
}

TEST(Lift, Examples) {
  auto F2 = field(2);
  auto a = lift_prime(prime(F2, "t + s^2"));
  EXPECT_EQ(a.lift_case, LiftCase::Root);
  EXPECT_EQ(a.prime.gen(), gen(F2, "t^(1/2) + s", 1));

  auto b = lift_prime(prime(F2, "t + s"));
  EXPECT_EQ(b.lift_case, LiftCase::Extend);
  EXPECT_EQ(b.prime.gen(), gen(F2, "t + s", 1));
  EXPECT_EQ(b.prime.gen().degree(), 2u);

  auto c = lift_prime(prime(F2, "t^2 + t + 1"));
  EXPECT_EQ(c.lift_case, LiftCase::Root);
  EXPECT_EQ(c.prime.gen(), gen(F2, "t + t^(1/2) + 1", 1));
  // (t1^2 + t1 + 1)^2 = t1^4 + t1^2 + 1, which is the original generator at t = t1^2.
  EXPECT_EQ(poly_pow(c.prime.gen().poly(), 2), testing::rpoly(F2, "t^2 + t + 1", "t", 1));
}

TEST(Contract, Examples) {
  auto F2 = field(2);
  EXPECT_EQ(contract_prime(prime(F2, "t^(1/2) + s", 1)).gen(), gen(F2, "t + s^2", 0));
  EXPECT_EQ(contract_prime(prime(F2, "t + s", 1)).gen(), gen(F2, "t + s", 0));
  EXPECT_EQ(contract_prime(prime(F2, "t^(1/2)", 1)).gen(), gen(F2, "t", 0));
  EXPECT_THROW(contract_prime(prime(F2, "t + s", 0)), Error);
}

TEST(Contract, ShapeRuleForSeveralVariables) {
  auto cfg = field(3, {"s", "u"});
  const auto P = prime(cfg, "t + s*u");
  const auto lifted = lift_prime(P);
  EXPECT_EQ(lifted.lift_case, LiftCase::Extend);
  EXPECT_EQ(contract_prime(lifted.prime), P);
  const auto Q = TowerPrime<RationalDomain>(0, gen(cfg, "t + s^3*u^3", 0));
  EXPECT_EQ(contract_prime(lift_prime(Q).prime), Q);
}

// Monic generators over F_p(s) of degree <= 3 with coefficient s-degree <= 2;
// half of them with all coefficients p-th powers so both lift cases occur.
std::vector<TowerPrime<RationalDomain>> sample_primes(std::uint64_t p, std::size_t count, std::uint64_t seed) {
  auto cfg = field(p);
  const RationalDomain dom{cfg};
  std::mt19937_64 rng(seed);
  std::vector<TowerPrime<RationalDomain>> out;
  while (out.size() < count) {
    const bool powers = out.size() % 2 == 1;
    const std::size_t n = 1 + rng() % 3;
    std::vector<RationalFunction> c;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial x(cfg);
      for (int k = 0; k <= 2; ++k) {
        if (powers && k % p != 0) continue;
        x = x + Polynomial::variable(cfg, 0, k).scaled(cfg->fq().from_int(BigInt(rng() % p)));
      }
      c.push_back(RationalFunction(x));
    }
    c.push_back(dom.one());
    MonicPoly<RationalDomain> g(UPoly<RationalDomain>(dom, tower_symbol(0), c));
    if (is_irreducible(g)) out.emplace_back(0, g);
  }
  return out;
}

class LiftProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LiftProperties, RoundtripAndDegreeLaw) {
  const std::uint64_t p = GetParam();
  for (const auto& P : sample_primes(p, 50, p * 1000)) {
    const auto lifted = lift_prime(P);
    const std::size_t expected = lifted.lift_case == LiftCase::Root ? P.gen().degree() : p * P.gen().degree();
    EXPECT_EQ(lifted.prime.gen().degree(), expected);
    EXPECT_EQ(contract_prime(lifted.prime), P) << format_upoly(P.gen());
    EXPECT_EQ(contraction_by_shape(lifted.prime.gen()), P.gen());
    EXPECT_TRUE(is_irreducible(lifted.prime.gen(), OracleBounds{9, 8}));
  }
}

TEST_P(LiftProperties, LiftIsTheUniquePrimeAbove) {
  const std::uint64_t p = GetParam();
  auto cfg = field(p);
  const RationalDomain dom{cfg};
  std::mt19937_64 rng(p + 17);
  for (const auto& P : sample_primes(p, 12, p * 7)) {
    const auto Q = lift_prime(P).prime;
    for (int i = 0; i < 8; ++i) {
      std::vector<RationalFunction> c;
      for (int k = 0; k < 3; ++k) c.push_back(RationalFunction(testing::random_poly(cfg, rng, 2, 3)));
      UPoly<RationalDomain> y(dom, Q.gen().symbol(), c);
      if (i % 2 == 0) y = y * Q.gen().poly();
      const bool below = extended_membership(poly_pow(y, p), P);
      EXPECT_EQ(below, poly_divides(Q.gen().poly(), y));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, LiftProperties, ::testing::Values(2, 3));

TEST(Stabilization, ExampleRootsThenExtension) {
  auto F2 = field(2);
  const auto r = stabilization_index(gen(F2, "t + s^4", 0), 2);
  EXPECT_EQ(r.m0, 2u);
  ASSERT_EQ(r.gens.size(), 5u);
  EXPECT_EQ(r.gens[0], gen(F2, "t + s^4", 0));
  EXPECT_EQ(r.gens[1], gen(F2, "t^(1/2) + s^2", 1));
  EXPECT_EQ(r.gens[2], gen(F2, "t^(1/4) + s", 2));
  EXPECT_EQ(r.gens[3], gen(F2, "t^(1/4) + s", 3));
  EXPECT_EQ(r.gens[4], gen(F2, "t^(1/4) + s", 4));
  EXPECT_EQ(r.gens[4].degree(), 4u);
  EXPECT_EQ(r.cases, (std::vector<LiftCase>{LiftCase::Root, LiftCase::Root, LiftCase::Extend, LiftCase::Extend}));
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.cert_in.size(), 1u);
  EXPECT_EQ(r.cert_in[0], testing::rf(F2, "s"));
}

TEST(Stabilization, ExampleImmediateExtension) {
  auto F2 = field(2);
  const auto r = stabilization_index(gen(F2, "t + s", 0), 1);
  EXPECT_EQ(r.m0, 0u);
  ASSERT_EQ(r.gens.size(), 2u);
  EXPECT_EQ(r.gens[1], gen(F2, "t + s", 1));
  EXPECT_TRUE(verify_extended_tower(r));
}

TEST(Stabilization, Errors) {
  auto F2 = field(2);
  try {
    stabilization_index(gen(F2, "t^2 + t + 1", 0));
    FAIL() << "expected PerfectCoefficients";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PerfectCoefficients);
  }
  try {
    stabilization_index(gen(F2, "t^2 + s^2", 0));
    FAIL() << "expected NotIrreducible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIrreducible);
  }
}

TEST(Stabilization, PowersOfTheVariable) {
  for (std::uint64_t p : {2, 3}) {
    auto cfg = field(p);
    for (std::uint64_t j = 0; j <= 4; ++j) {
      const std::string text = "t + s^" + ipow(p, j).str();
      auto r = stabilization_index(gen(cfg, text, 0), 3);
      EXPECT_EQ(r.m0, j) << text;
      EXPECT_TRUE(r.verified);
      for (std::size_t i = 1; i < r.gens.size(); ++i) {
        auto tampered = r;
        std::vector<RationalFunction> c = tampered.gens[i].poly().coeffs();
        c[0] = c[0] + RationalFunction::from_int(cfg, 1);
        tampered.gens[i] = MonicPoly<RationalDomain>(UPoly<RationalDomain>(RationalDomain{cfg}, tower_symbol(i), c));
        EXPECT_FALSE(verify_extended_tower(tampered)) << text << " level " << i;
      }
    }
  }
}

TEST(Stabilization, TamperedExample) {
  auto F2 = field(2);
  auto r = stabilization_index(gen(F2, "t + s^4", 0), 2);
  r.gens[3] = gen(F2, "t^(1/4) + s + 1", 3);
  EXPECT_FALSE(verify_extended_tower(r));
  auto r2 = stabilization_index(gen(F2, "t + s^4", 0), 2);
  r2.cert_in[0] = testing::rf(F2, "s + 1");
  EXPECT_FALSE(verify_extended_tower(r2));
  auto r3 = stabilization_index(gen(F2, "t + s^4", 0), 2);
  r3.m0 = 1;
  EXPECT_FALSE(verify_extended_tower(r3));
}

TEST(Basis, Examples) {
  auto F2 = field(2);
  const auto a = basis_coords(testing::rpoly(F2, "t + t^(1/2) + s", "t", 1), 0);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], testing::rpoly(F2, "t + s", "t", 0));
  EXPECT_EQ(a[1], testing::rpoly(F2, "1", "t", 0));

  const auto b = basis_coords(testing::rpoly(F2, "t + s", "t", 1), 0);
  EXPECT_EQ(b[0], testing::rpoly(F2, "t + s", "t", 0));
  EXPECT_TRUE(b[1].is_zero());

  const auto c = basis_coords(testing::rpoly(F2, "t^(3/4)", "t", 2), 0);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_TRUE(c[0].is_zero() && c[1].is_zero() && c[2].is_zero());
  EXPECT_EQ(c[3], testing::rpoly(F2, "1", "t", 0));

  std::mt19937_64 rng(3);
  auto F3 = field(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<RationalFunction> coeffs;
    for (int k = 0; k < 12; ++k) coeffs.push_back(testing::random_rf(F3, rng));
    UPoly<RationalDomain> f(RationalDomain{F3}, tower_symbol(2), coeffs);
    EXPECT_EQ(from_basis_coords(basis_coords(f, 1), 2), f);
  }
}

TEST(ExtendedMembership, Examples) {
  auto F2 = field(2);
  const auto P0 = prime(F2, "t + s");
  EXPECT_TRUE(extended_membership(testing::rpoly(F2, "(t + s)*(1 + t^(1/2))", "t", 1), P0));
  EXPECT_FALSE(extended_membership(testing::rpoly(F2, "s*t*t^(1/2) + t + 1", "t", 1), P0));
  EXPECT_TRUE(extended_membership(testing::rpoly(F2, "0", "t", 1), P0));
}

TEST(LocalizedMembership, Examples) {
  auto F2 = field(2);
  const PerfectDomain dom{F2};
  const auto alpha1 = testing::ppoly(F2, "t^(1/2) + s^(1/2)", "t", 1);
  EXPECT_FALSE(localized_membership(alpha1, poly_pow(alpha1, 2)));

  const auto g = testing::rpoly(F2, "t + s", "t");
  EXPECT_TRUE(localized_membership(testing::rpoly(F2, "(t + s)*(t^2 + s*t + 1)", "t"), g));
  EXPECT_TRUE(localized_membership(testing::rpoly(F2, "1", "t"), testing::rpoly(F2, "t", "t")));
  EXPECT_FALSE(localized_membership(testing::rpoly(F2, "1", "t"), g));
  // t*(t + s) localizes to (t + s).
  EXPECT_TRUE(localized_membership(testing::rpoly(F2, "t + s", "t"), testing::rpoly(F2, "t*(t + s)", "t")));
  EXPECT_TRUE(localized_membership(testing::rpoly(F2, "1", "t"), testing::rpoly(F2, "t^2 + t + 1", "t")));
}

TEST(LocalizedMembership, AgreesWithExtendedMembershipAboveStabilization) {
  for (std::uint64_t p : {2, 3}) {
    auto cfg = field(p);
    const RationalDomain dom{cfg};
    const auto r = stabilization_index(gen(cfg, "t^2 + s*t + s", 0), 2);
    const TowerPrime<RationalDomain> P0(r.m0, r.gens[r.m0]);
    std::mt19937_64 rng(p * 91);
    for (int i = 0; i < 100; ++i) {
      const std::uint64_t m = r.m0 + 1 + rng() % 2;
      std::vector<RationalFunction> c;
      for (int k = 0; k < 4; ++k) c.push_back(RationalFunction(testing::random_poly(cfg, rng, 2, 3)));
      UPoly<RationalDomain> f(dom, tower_symbol(m), c);
      if (i % 2 == 0) f = f * r.gens[m].poly();
      EXPECT_EQ(localized_membership(f, r.gens[m].poly()), extended_membership(f, P0));
    }
  }
}

TEST(PerfectTower, RootCaseAlways) {
  auto F2 = field(2);
  const PerfectDomain dom{F2};
  const TowerPrime<PerfectDomain> P(0, MonicPoly<PerfectDomain>(testing::ppoly(F2, "t + s", "t", 0)));
  const auto lifted = lift_prime(P);
  EXPECT_EQ(lifted.lift_case, LiftCase::Root);
  EXPECT_EQ(lifted.prime.gen().poly(), testing::ppoly(F2, "t^(1/2) + s^(1/2)", "t", 1));
  EXPECT_EQ(contract_prime(lifted.prime), P);
  try {
    stabilization_index(P.gen());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PerfectCoefficients);
  }
}

}  // namespace
}  // namespace perfclosure
