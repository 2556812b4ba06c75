#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "helpers.hpp"
#include "perfclosure/cli/certificate.hpp"
#include "perfclosure/cli/cli.hpp"

namespace perfclosure {
namespace {

using testing::field;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Splits a commands.txt line into shell-like words (double quotes only).
std::vector<std::string> words(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (c == ' ' && !quoted) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

TEST(Parse, Examples) {
  auto F2 = field(2);
  const auto f = parse_monic("t + s^4", RationalDomain{F2}, Symbol{"t", 0});
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.coeff(0), testing::rf(F2, "s^4"));

  const auto alpha = parse_upoly("t^(1/2) + s^(1/2)", PerfectDomain{F2}, Symbol{"t", 1});
  EXPECT_EQ(alpha.degree(), 1);
  EXPECT_EQ(alpha.coeff(0).level(), 1u);

  EXPECT_EQ(parse_rational("(s^2+1)/(s+1)", F2), testing::rf(F2, "s + 1"));
  EXPECT_EQ(parse_tower_element("s^(1/2^3)", F2).level(), 3u);
  EXPECT_EQ(parse_tower_element("s^(3/p^2)", field(3)), parse_tower_element("s^(1/3)", field(3)));
  EXPECT_EQ(parse_tower_element("s^(1/p)", F2), parse_tower_element("s^(1/2)", F2));
  EXPECT_EQ(parse_tower_element("s^(-2)", F2), parse_tower_element("1/s^2", F2));
  EXPECT_EQ(parse_tower_element("-s", field(3)), parse_tower_element("2*s", field(3)));
}

TEST(Parse, Errors) {
  auto F2 = field(2);
  auto kind_of = [&](const std::string& text) {
    try {
      parse_tower_element(text, F2);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of("s +"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("s $ 1"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("(s"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("u + 1"), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind_of("s^(1/3)"), ErrorKind::NonCanonicalExponent);
  EXPECT_EQ(kind_of("1/(s - s)"), ErrorKind::ZeroDenominator);
  try {
    parse_tower_element("s + + 1", F2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_upoly("1/t", RationalDomain{F2}, Symbol{"t", 0}), Error);
  EXPECT_THROW(parse_upoly("t^(1/2)", RationalDomain{F2}, Symbol{"t", 0}), Error);
  EXPECT_THROW(parse_upoly("t + s^(1/2)", RationalDomain{F2}, Symbol{"t", 0}), Error);
  EXPECT_THROW(parse_upoly("t + s", FqDomain{F2}, Symbol{"t", 0}), Error);
  EXPECT_THROW(parse_monic("s*t + 1", RationalDomain{F2}, Symbol{"t", 0}), Error);
}

TEST(Parse, FormatRoundTrip) {
  for (std::uint64_t p : {2, 3, 5}) {
    auto cfg = field(p, {"s", "u"});
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      const auto x = testing::random_te(cfg, rng);
      EXPECT_EQ(parse_tower_element(format_tower(x), cfg), x) << format_tower(x);
    }
    const RationalDomain dom{cfg};
    for (int i = 0; i < 30; ++i) {
      std::vector<RationalFunction> c;
      for (int k = 0; k < 3; ++k) c.push_back(testing::random_rf(cfg, rng));
      UPoly<RationalDomain> f(dom, Symbol{"t", 2}, c);
      EXPECT_EQ(parse_upoly(format_upoly(f), dom, Symbol{"t", 2}), f) << format_upoly(f);
    }
  }
  auto F9 = field(3, {"s"}, 2, {1, 0, 1});  // a^2 = -1
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto x = testing::random_te(F9, rng);
    EXPECT_EQ(parse_tower_element(format_tower(x), F9), x) << format_tower(x);
  }
}

TEST(Cli, DocumentedCommands) {
  const auto a = run({"stabilize", "--p", "2", "--vars", "s", "t + s^4", "--overhang", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("m0 = 2"), std::string::npos);
  EXPECT_NE(a.out.find("verified: true"), std::string::npos);

  const auto b = run({"witness", "--p", "2", "--depth", "3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("alpha_3 = t^(1/8) + s^(1/8)"), std::string::npos);
  EXPECT_EQ(b.out.find("ascent: false"), std::string::npos);

  const auto c = run({"irreducible", "--p", "2", "--vars", "s", "X + s", "--transfer"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("coefficient s is not in K^p, so X^2 + s is irreducible"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"arith", "--p", "2", "s +"}).code, 2);
  EXPECT_EQ(run({"arith", "--p", "4", "s"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"stabilize", "t^2 + t + 1"}).code, 1);
  EXPECT_EQ(run({"stabilize", "t^2 + s^2"}).code, 1);
  EXPECT_EQ(run({"witness", "--s", "1"}).code, 1);
  EXPECT_EQ(run({"classify", "QUOT_POLY(X^2 + 1)"}).code, 2);
  EXPECT_EQ(run({"classify", "BANACH_SPACE(2)"}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ArithAndClassify) {
  const auto a = run({"arith", "--p", "2", "(t^(1/2) + s^(1/2))^2"});
  EXPECT_EQ(a.out, "s + t\nlevel: 0\n");
  const auto b = run({"classify", "--p", "2", "PERFECT_CLOSURE_RATFUNC(1)"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("not noetherian"), std::string::npos);
  EXPECT_NE(b.out.find("witness verified to depth 5: true"), std::string::npos);
}

TEST(Cli, Crosscheck) {
  const auto a = run({"crosscheck", "--p", "2", "--count", "40", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run({"crosscheck", "--p", "2", "--count", "40", "--seed", "7"}).out);
  EXPECT_NE(a.out.find("0 mismatches"), std::string::npos);
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, RegeneratesAndVerifies) {
  const auto w = words(GetParam());
  ASSERT_GE(w.size(), 2u);
  const std::string path = std::string(GOLDEN_DIR) + "/" + w[0] + ".json";
  const std::string stored = read_file(path);
  ASSERT_FALSE(stored.empty()) << path;

  std::vector<std::string> args(w.begin() + 1, w.end());
  args.push_back("--json");
  args.push_back("-");
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(stored), std::string::npos) << "output drifted from " << path;

  const Json j = parse_certificate(stored);
  EXPECT_EQ(emit(j), stored);
  const auto check = verify_certificate(j);
  EXPECT_TRUE(check.ok) << check.detail;
  EXPECT_EQ(run({"verify", path}).code, 0);
}

std::vector<std::string> golden_commands() {
  std::ifstream f(std::string(GOLDEN_DIR) + "/commands.txt");
  std::vector<std::string> out;
  for (std::string line; std::getline(f, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Files, Golden, ::testing::ValuesIn(golden_commands()),
                         [](const auto& info) { return words(info.param)[0]; });

Json golden(const std::string& name) { return parse_certificate(read_file(std::string(GOLDEN_DIR) + "/" + name + ".json")); }

TEST(Tamper, StabilizationCertificate) {
  auto j = golden("stabilize_p2_s4");
  j["gens"][3]["poly"] = "t^(1/4) + s + 1";
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("stabilize_p2_s4");
  j["cert_in"][0] = "s + 1";
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("stabilize_p2_s4");
  j["cert_out"]["index"] = 1;
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("stabilize_p2_s4");
  j["gens"][1]["case"] = "EXTEND_CASE";
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("stabilize_p2_s4");
  j["verified"] = false;
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("stabilize_p2_s4");
  j.erase("F0");
  EXPECT_THROW(verify_certificate(j), Error);
}

TEST(Tamper, WitnessCertificate) {
  auto j = golden("witness_p2");
  j["alphas"][2] = "t^(1/4) + s^(1/2)";
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("witness_p2");
  j["ascent"][1] = false;
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("witness_p2");
  j["s"] = "s + 1";
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("witness_p2");
  j["s"] = "1";
  j["alphas"] = {"t + 1", "t^(1/2) + 1", "t^(1/4) + 1", "t^(1/8) + 1"};
  j["ascent"] = {false, false, false};
  EXPECT_FALSE(verify_certificate(j).ok);
}

TEST(Tamper, VerdictCertificate) {
  auto j = golden("verdict_perfect_closure");
  j["noetherian"] = true;
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("verdict_poly_ring");
  j["rule"] = "local-algebraic-residue";
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("verdict_ratfunc");
  j["sample_report"]["m0"] = 2;
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("irreducible_transfer");
  j["irreducible"] = false;
  EXPECT_FALSE(verify_certificate(j).ok);
  j = golden("lift_extend");
  j["lifted"] = "t^(1/2) + s";
  EXPECT_FALSE(verify_certificate(j).ok);
}

}  // namespace
}  // namespace perfclosure
