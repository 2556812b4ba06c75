#include "perfclosure/cli/cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "perfclosure/cli/certificate.hpp"
#include "perfclosure/cli/parse.hpp"

namespace perfclosure {

namespace {

struct Options {
  std::uint64_t p = 2;
  std::size_t degree = 1;
  std::string modulus;
  std::string vars = "s";
  std::uint64_t depth = 5;
  std::uint64_t overhang = 3;
  std::string json;
  bool perfect = false;
  std::uint64_t seed = 0;

  std::string input;
  bool transfer = false;
  std::uint64_t steps = 1;
  std::uint64_t level = 0;
  std::string s;
  std::uint64_t count = 100;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

ConfigPtr make_config(const Options& o) {
  std::vector<std::uint64_t> modulus;
  for (const auto& c : split(o.modulus, ',')) {
    try {
      modulus.push_back(std::stoull(c));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, "modulus entry '" + c + "' is not a non-negative integer");
    }
  }
  return FieldConfig::make(o.p, split(o.vars, ','), o.degree, modulus);
}

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConfig:
    case ErrorKind::InvalidArgument:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::NonCanonicalExponent:
    case ErrorKind::NotPolynomial:
    case ErrorKind::WrongCoefficientField:
    case ErrorKind::MalformedCertificate:
    case ErrorKind::InvalidDescriptor:
    case ErrorKind::IncompatibleFields:
      return true;
    default:
      return false;
  }
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void write_json(const Json& j) {
    if (o_.json.empty()) return;
    if (o_.json == "-") {
      out_ << emit(j);
      return;
    }
    std::ofstream f(o_.json, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + o_.json + "'");
    f << emit(j);
  }

  int arith() {
    const ConfigPtr cfg = make_config(o_);
    const Json j = arith_record(o_.input, cfg);
    out_ << j["value"].get<std::string>() << "\n";
    out_ << "level: " << j["level"].get<std::uint64_t>() << "\n";
    write_json(j);
    return kExitOk;
  }

  int irreducible() {
    const ConfigPtr cfg = make_config(o_);
    const Json j = irreducible_record(o_.input, cfg, o_.perfect, o_.transfer, o_.steps);
    const std::string field = o_.perfect ? PerfectDomain{cfg}.name() : cfg->describe();
    const std::string g = j["poly"].get<std::string>();
    if (!o_.transfer) {
      out_ << g << (j["irreducible"].get<bool>() ? " is irreducible" : " is reducible") << " over " << field << "\n";
    } else {
      const std::string target = j["target"].get<std::string>();
      const bool base = j["base_irreducible"].get<bool>();
      const Json& idx = j["non_pth_power_index"];
      if (!base) {
        out_ << "g = " << g << " is reducible, so " << target << " is reducible\n";
      } else if (idx.is_null()) {
        out_ << "g = " << g << " is irreducible but every coefficient lies in K^p, so " << target
             << " is reducible\n";
      } else {
        out_ << "g = " << g << " is irreducible and coefficient " << j["non_pth_power"].get<std::string>()
             << " is not in K^p";
        out_ << ", so " << target << (j["irreducible"].get<bool>() ? " is irreducible" : " is reducible") << " over "
             << field << "\n";
      }
    }
    write_json(j);
    return kExitOk;
  }

  int lift() {
    const ConfigPtr cfg = make_config(o_);
    const Json j = lift_record(o_.input, o_.level, cfg, o_.perfect);
    out_ << j["case"].get<std::string>() << ": " << j["lifted"].get<std::string>() << "\n";
    out_ << "contracts to " << j["contracted"].get<std::string>() << "\n";
    write_json(j);
    return j["roundtrip"].get<bool>() ? kExitOk : kExitFailure;
  }

  int stabilize() {
    const ConfigPtr cfg = make_config(o_);
    if (o_.perfect) {
      const auto F0 = parse_monic(o_.input, PerfectDomain{cfg}, tower_symbol(0));
      stabilization_index(F0, o_.overhang);  // always rejected: every coefficient is perfect
      return kExitFailure;
    }
    const auto report = stabilization_index(parse_monic(o_.input, RationalDomain{cfg}, tower_symbol(0)), o_.overhang);
    out_ << "F0 = " << format_upoly(report.F0) << " over " << cfg->describe() << "\n";
    out_ << "m0 = " << report.m0 << "\n";
    for (std::size_t i = 0; i < report.gens.size(); ++i) {
      out_ << "F_" << i << " = " << format_upoly(report.gens[i]);
      if (i > 0) out_ << "  [" << to_string(report.cases[i - 1]) << "]";
      out_ << "\n";
    }
    out_ << "cert_in:";
    for (const auto& c : report.cert_in) out_ << " " << format_rational(c);
    out_ << "\ncert_out: coefficient " << report.cert_out_index << " (" << format_rational(report.cert_out_coefficient)
         << ") is not a p^" << report.m0 + 1 << "-th power\n";
    out_ << "verified: " << (report.verified ? "true" : "false") << "\n";
    write_json(stabilization_to_json(report));
    return report.verified ? kExitOk : kExitFailure;
  }

  int witness() {
    const ConfigPtr cfg = make_config(o_);
    if (cfg->nvars() == 0 && o_.s.empty()) {
      throw Error(ErrorKind::NotTranscendental, "no coefficient variables: " + cfg->describe() + " has no transcendental element");
    }
    const TowerElement s = parse_tower_element(o_.s.empty() ? cfg->vars().front() : o_.s, cfg);
    const WitnessChain chain = build_witness_chain(s, o_.depth);
    out_ << "s = " << format_tower(s) << " over " << PerfectDomain{cfg}.name() << ", depth " << chain.depth << "\n";
    for (std::size_t m = 0; m < chain.alphas.size(); ++m) {
      out_ << "alpha_" << m << " = " << format_upoly(chain.alphas[m]);
      if (m < chain.ascent.size()) out_ << "  ascent: " << (chain.ascent[m] ? "true" : "false");
      out_ << "\n";
    }
    out_ << "coherent: " << (chain.coherent ? "true" : "false") << "\n";
    const bool ok = witness_verified(chain);
    out_ << "verified: " << (ok ? "true" : "false") << "\n";
    write_json(witness_to_json(chain));
    return ok ? kExitOk : kExitFailure;
  }

  int classify() {
    const AlgebraDescriptor d = parse_descriptor(o_.input);
    const Verdict v = classify_algebra(d, ClassifyOptions{o_.depth, o_.overhang});
    out_ << d.describe() << " over " << FqDomain{d.base}.name() << ": "
         << (v.noetherian ? "noetherian" : "not noetherian") << "\n";
    out_ << "rule: " << v.rule << "\n";
    out_ << v.justification << "\n";
    if (v.witness) out_ << "witness verified to depth " << v.witness->depth << ": " << (witness_verified(*v.witness) ? "true" : "false") << "\n";
    if (v.sample_report) {
      out_ << "sample prime " << format_upoly(v.sample_report->F0) << ": m0 = " << v.sample_report->m0
           << ", verified " << (v.sample_report->verified ? "true" : "false") << "\n";
    }
    write_json(verdict_to_json(v));
    bool ok = !v.witness || witness_verified(*v.witness);
    ok = ok && (!v.sample_report || v.sample_report->verified);
    return ok ? kExitOk : kExitFailure;
  }

  int verify() {
    std::ifstream f(o_.input, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot read '" + o_.input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const CertificateCheck c = verify_certificate(parse_certificate(buf.str()));
    out_ << c.kind << ": " << (c.ok ? "ok" : "FAILED");
    if (!c.detail.empty()) out_ << " (" << c.detail << ")";
    out_ << "\n";
    return c.ok ? kExitOk : kExitFailure;
  }

  // Random monic g over F_p(s) of X-degree <= 2 and s-degree <= 2: the transfer
  // verdict must match the factor oracle on g(X^p).
  int crosscheck() {
    const ConfigPtr cfg = make_config(o_);
    if (cfg->nvars() != 1) throw Error(ErrorKind::InvalidConfig, "crosscheck needs exactly one variable");
    const RationalDomain dom{cfg};
    std::mt19937_64 rng(o_.seed);
    const auto q = static_cast<std::uint64_t>(cfg->fq().order());
    const std::size_t p = cfg->p();
    std::uint64_t mismatches = 0;
    for (std::uint64_t i = 0; i < o_.count; ++i) {
      const std::size_t n = 1 + rng() % 2;
      std::vector<RationalFunction> c;
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Term> terms;
        for (int e = 0; e <= 2; ++e) terms.push_back({{BigInt(e)}, cfg->fq().from_int(BigInt(rng() % q))});
        c.emplace_back(Polynomial::from_terms(cfg, std::move(terms)));
      }
      c.push_back(dom.one());
      const MonicPoly<RationalDomain> g(UPoly<RationalDomain>(dom, Symbol{"X", 0}, c));
      const MonicPoly<RationalDomain> f(substitute_power(g.poly(), p, g.symbol()));
      const bool a = irreducible_transfer(g).irreducible;
      const bool b = is_irreducible(f, OracleBounds{2 * p, 2 * p});
      if (a != b) {
        ++mismatches;
        out_ << "mismatch: " << format_upoly(g) << " transfer=" << a << " oracle=" << b << "\n";
      }
    }
    out_ << "crosscheck: " << o_.count << " polynomials, " << mismatches << " mismatches (seed " << o_.seed << ")\n";
    return mismatches == 0 ? kExitOk : kExitFailure;
  }

 private:
  AlgebraDescriptor parse_descriptor(const std::string& text) {
    Options field_only = o_;
    field_only.vars.clear();
    const ConfigPtr base = make_config(field_only);
    const auto open = text.find('(');
    std::string name = text.substr(0, open);
    name.erase(name.find_last_not_of(" \t") + 1);
    std::vector<std::string> args;
    if (open != std::string::npos) {
      const auto close = text.rfind(')');
      if (close == std::string::npos || close < open) {
        throw Error(ErrorKind::InvalidDescriptor, "unbalanced parentheses in '" + text + "'");
      }
      const std::string inner = text.substr(open + 1, close - open - 1);
      args = name == "QUOT_POLY" ? std::vector<std::string>{inner} : split(inner, ',');
    }
    auto number = [&](std::size_t i) -> std::uint64_t {
      if (i >= args.size()) throw Error(ErrorKind::InvalidDescriptor, name + " needs " + std::to_string(i + 1) + " argument(s)");
      try {
        std::size_t used = 0;
        const auto v = std::stoull(args[i], &used);
        if (used != args[i].size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidDescriptor, "'" + args[i] + "' is not a natural number");
      }
    };
    AlgebraDescriptor d{AlgebraKind::LocalResidueAlgebraic, base, 0, {}, 1};
    if (name == "POLY_RING") {
      d.kind = AlgebraKind::PolyRing;
      d.count = number(0);
    } else if (name == "RATFUNC") {
      d.kind = AlgebraKind::RatFunc;
      d.count = number(0);
    } else if (name == "PERFECT_CLOSURE_RATFUNC") {
      d.kind = AlgebraKind::PerfectClosureRatFunc;
      d.count = number(0);
    } else if (name == "QUOT_POLY") {
      d.kind = AlgebraKind::QuotPoly;
      if (args.empty()) throw Error(ErrorKind::InvalidDescriptor, "QUOT_POLY needs a polynomial in X");
      if (base->degree() > 1) throw Error(ErrorKind::InvalidDescriptor, "QUOT_POLY is supported over prime fields");
      const auto f = parse_upoly(args[0], FqDomain{base}, Symbol{"X", 0});
      for (const auto& c : f.coeffs()) d.modulus.push_back(c.coords[0]);
    } else if (name == "POWER_SERIES") {
      d.kind = AlgebraKind::PowerSeries;
      d.count = number(0);
      if (args.size() < 2) throw Error(ErrorKind::InvalidDescriptor, "POWER_SERIES needs (n, F_q')");
      std::string k = args[1];
      if (k.rfind("F_", 0) != 0) throw Error(ErrorKind::InvalidDescriptor, "coefficient field must be written F_q'");
      BigInt order(k.substr(2));
      std::uint64_t e = 0;
      while (order > 1 && order % base->p() == 0) {
        order /= base->p();
        ++e;
      }
      if (order != 1 || e == 0) throw Error(ErrorKind::InvalidDescriptor, k + " is not a field of characteristic " + std::to_string(base->p()));
      d.residue_degree = e;
    } else if (name != "LOCAL_RESIDUE_ALGEBRAIC" || !args.empty()) {
      throw Error(ErrorKind::InvalidDescriptor, "unknown algebra descriptor '" + text + "'");
    }
    return d;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic in perfect-closure towers of function fields", "perfclosure"};
  app.require_subcommand(1, 1);
  app.add_option("--p", o.p, "characteristic (prime)");
  app.add_option("--degree", o.degree, "degree d of F_q over F_p");
  app.add_option("--modulus", o.modulus, "monic modulus for d > 1, coefficients low to high, comma separated");
  app.add_option("--vars", o.vars, "coefficient variables, comma separated (default s)");
  app.add_option("--depth", o.depth, "witness depth (default 5)");
  app.add_option("--overhang", o.overhang, "levels verified beyond m0 (default 3)");
  app.add_option("--json", o.json, "write the certificate to FILE ('-' for standard output)");
  app.add_flag("--perfect", o.perfect, "coefficients in the perfect closure F_q(V)_per");
  app.add_option("--seed", o.seed, "random seed (default 0)");

  auto* arith = app.add_subcommand("arith", "evaluate an element of F_q(V, t)_per");
  arith->add_option("expr", o.input, "expression")->required();
  auto* irr = app.add_subcommand("irreducible", "decide irreducibility of a monic polynomial in X");
  irr->add_option("poly", o.input, "polynomial in X")->required();
  irr->add_flag("--transfer", o.transfer, "decide g(X^p) via the transfer criterion");
  irr->add_option("--steps", o.steps, "Frobenius steps for --transfer (default 1)");
  auto* lift = app.add_subcommand("lift", "lift a prime of K[t_m] to K[t_{m+1}]");
  lift->add_option("gen", o.input, "monic irreducible generator in t")->required();
  lift->add_option("--level", o.level, "level m of the generator (default 0)");
  auto* stab = app.add_subcommand("stabilize", "stabilization index and extended-ideal certificate");
  stab->add_option("F0", o.input, "monic irreducible polynomial in t")->required();
  auto* wit = app.add_subcommand("witness", "non-noetherian witness chain in K_(infinity)");
  wit->add_option("--s", o.s, "transcendental element (default: first variable)");
  auto* cls = app.add_subcommand("classify", "noetherianity verdict for an algebra descriptor");
  cls->add_option("descriptor", o.input, "e.g. POLY_RING(2), QUOT_POLY(X^2 + X + 1), POWER_SERIES(3, F_4)")->required();
  auto* ver = app.add_subcommand("verify", "re-verify a JSON certificate");
  ver->add_option("file", o.input, "certificate file")->required();
  auto* cross = app.add_subcommand("crosscheck", "compare the transfer criterion with the factor oracle");
  cross->add_option("--count", o.count, "number of random polynomials (default 100)");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Runner run(o, out);
  try {
    if (arith->parsed()) return run.arith();
    if (irr->parsed()) return run.irreducible();
    if (lift->parsed()) return run.lift();
    if (stab->parsed()) return run.stabilize();
    if (wit->parsed()) return run.witness();
    if (cls->parsed()) return run.classify();
    if (ver->parsed()) return run.verify();
    if (cross->parsed()) return run.crosscheck();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace perfclosure
