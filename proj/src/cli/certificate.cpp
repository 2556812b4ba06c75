#include "perfclosure/cli/certificate.hpp"

#include "perfclosure/cli/parse.hpp"

namespace perfclosure {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedCertificate, "malformed certificate: " + what);
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field_of(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("bad value for '") + key + "'");
  }
}

std::string expect_kind(const Json& j, const std::string& kind) {
  const auto k = get<std::string>(j, "kind");
  if (k != kind) malformed("expected kind '" + kind + "', found '" + k + "'");
  return k;
}

}  // namespace

std::string emit(const Json& certificate) { return certificate.dump(2) + "\n"; }

Json parse_certificate(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json field_to_json(const ConfigPtr& config) {
  std::vector<std::uint64_t> modulus;
  if (config->degree() > 1) modulus = config->fq().modulus();
  return Json{{"p", config->p()}, {"degree", config->degree()}, {"modulus", modulus}, {"vars", config->vars()}};
}

ConfigPtr field_from_json(const Json& j) {
  try {
    return FieldConfig::make(get<std::uint64_t>(j, "p"), get<std::vector<std::string>>(j, "vars"),
                             get<std::size_t>(j, "degree"), get<std::vector<std::uint64_t>>(j, "modulus"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedCertificate) throw;
    malformed(std::string("invalid field: ") + e.what());
  }
}

Json stabilization_to_json(const StabilizationReport<RationalDomain>& report) {
  const ConfigPtr& cfg = report.F0.domain().cfg;
  Json gens = Json::array();
  for (std::size_t i = 0; i < report.gens.size(); ++i) {
    Json g{{"level", i}, {"poly", format_upoly(report.gens[i])}};
    g["case"] = i == 0 ? Json(nullptr) : Json(to_string(report.cases[i - 1]));
    gens.push_back(std::move(g));
  }
  Json cert_in = Json::array();
  for (const auto& c : report.cert_in) cert_in.push_back(format_rational(c));
  return Json{{"kind", "stabilization"},
              {"field", field_to_json(cfg)},
              {"p", cfg->p()},
              {"q", cfg->fq().order().str()},
              {"F0", format_upoly(report.F0)},
              {"m0", report.m0},
              {"overhang", report.overhang},
              {"gens", gens},
              {"cert_in", cert_in},
              {"cert_out",
               {{"index", report.cert_out_index}, {"coefficient", format_rational(report.cert_out_coefficient)}}},
              {"verified", report.verified}};
}

StabilizationReport<RationalDomain> stabilization_from_json(const Json& j) {
  expect_kind(j, "stabilization");
  const ConfigPtr cfg = field_from_json(field_of(j, "field"));
  const RationalDomain dom{cfg};
  try {
    StabilizationReport<RationalDomain> r{parse_monic(get<std::string>(j, "F0"), dom, tower_symbol(0)),
                                          get<std::uint64_t>(j, "m0"),
                                          get<std::uint64_t>(j, "overhang"),
                                          {},
                                          {},
                                          {},
                                          0,
                                          dom.zero(),
                                          get<bool>(j, "verified")};
    const Json& gens = field_of(j, "gens");
    if (!gens.is_array()) malformed("'gens' must be an array");
    for (const auto& g : gens) {
      const auto level = get<std::uint64_t>(g, "level");
      r.gens.push_back(parse_monic(get<std::string>(g, "poly"), dom, tower_symbol(level)));
      const Json& c = field_of(g, "case");
      if (c.is_null()) continue;
      const auto name = c.get<std::string>();
      if (name != "ROOT_CASE" && name != "EXTEND_CASE") malformed("unknown lift case '" + name + "'");
      r.cases.push_back(name == "ROOT_CASE" ? LiftCase::Root : LiftCase::Extend);
    }
    for (const auto& c : get<std::vector<std::string>>(j, "cert_in")) r.cert_in.push_back(parse_rational(c, cfg));
    const Json& out = field_of(j, "cert_out");
    r.cert_out_index = get<std::size_t>(out, "index");
    r.cert_out_coefficient = parse_rational(get<std::string>(out, "coefficient"), cfg);
    if (get<std::uint64_t>(j, "p") != cfg->p() || get<std::string>(j, "q") != cfg->fq().order().str()) {
      malformed("p/q disagree with the field");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json witness_to_json(const WitnessChain& chain) {
  Json alphas = Json::array();
  for (const auto& a : chain.alphas) alphas.push_back(format_upoly(a));
  Json ascent = Json::array();
  for (bool b : chain.ascent) ascent.push_back(b);
  return Json{{"kind", "witness"},      {"field", field_to_json(chain.s.config())},
              {"s", format_tower(chain.s)}, {"depth", chain.depth},
              {"alphas", alphas},       {"ascent", ascent},
              {"coherent", chain.coherent}};
}

WitnessChain witness_from_json(const Json& j) {
  expect_kind(j, "witness");
  const ConfigPtr cfg = field_from_json(field_of(j, "field"));
  const PerfectDomain dom{cfg};
  WitnessChain chain{parse_tower_element(get<std::string>(j, "s"), cfg), get<std::uint64_t>(j, "depth"), {}, {},
                     get<bool>(j, "coherent")};
  const auto alphas = get<std::vector<std::string>>(j, "alphas");
  for (std::size_t m = 0; m < alphas.size(); ++m) chain.alphas.push_back(parse_monic(alphas[m], dom, tower_symbol(m)));
  chain.ascent = get<std::vector<bool>>(j, "ascent");
  return chain;
}

Json descriptor_to_json(const AlgebraDescriptor& d) {
  return Json{{"family", to_string(d.kind)},
              {"count", d.count},
              {"modulus", d.modulus},
              {"residue_degree", d.residue_degree},
              {"text", d.describe()}};
}

AlgebraDescriptor descriptor_from_json(const Json& j) {
  const auto family = get<std::string>(j, "family");
  for (AlgebraKind k : {AlgebraKind::PolyRing, AlgebraKind::RatFunc, AlgebraKind::PerfectClosureRatFunc,
                        AlgebraKind::QuotPoly, AlgebraKind::PowerSeries, AlgebraKind::LocalResidueAlgebraic}) {
    if (to_string(k) == family) {
      return AlgebraDescriptor{k, nullptr, get<std::uint64_t>(j, "count"), get<std::vector<std::uint64_t>>(j, "modulus"),
                               get<std::uint64_t>(j, "residue_degree")};
    }
  }
  malformed("unknown algebra family '" + family + "'");
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"kind", "verdict"},
         {"field", field_to_json(v.descriptor.base)},
         {"descriptor", descriptor_to_json(v.descriptor)},
         {"noetherian", v.noetherian},
         {"rule", v.rule},
         {"justification", v.justification},
         {"depth", v.depth}};
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  if (v.sample_report) j["sample_report"] = stabilization_to_json(*v.sample_report);
  return j;
}

namespace {

CertificateCheck check_stabilization(const Json& j) {
  const auto r = stabilization_from_json(j);
  const bool recomputed = verify_extended_tower(r);
  CertificateCheck c{"stabilization", recomputed && r.verified, ""};
  if (!recomputed) c.detail = "tower verification failed";
  if (recomputed && !r.verified) c.detail = "certificate claims verification failed";
  if (c.ok && emit(stabilization_to_json(r)) != emit(j)) {
    c.ok = false;
    c.detail = "re-emitted certificate differs";
  }
  return c;
}

CertificateCheck check_witness(const Json& j) {
  const WitnessChain stored = witness_from_json(j);
  CertificateCheck c{"witness", false, ""};
  if (stored.depth == 0 || stored.alphas.size() != stored.depth + 1 || stored.ascent.size() != stored.depth) {
    c.detail = "chain length does not match depth";
    return c;
  }
  const PerfectDomain dom{stored.s.config()};
  // alpha_0 must be t - s.
  if (!(stored.alphas[0].poly() == UPoly<PerfectDomain>(dom, tower_symbol(0), {-stored.s, dom.one()}))) {
    c.detail = "alpha_0 is not t - s";
    return c;
  }
  if (stored.s.is_constant()) {
    c.detail = "s is not transcendental";
    return c;
  }
  const bool coherent = verify_coherence(stored);
  const auto ascent = verify_strict_ascent(stored);
  if (coherent != stored.coherent || ascent != stored.ascent) {
    c.detail = "recomputed verdicts differ from the stored ones";
    return c;
  }
  WitnessChain recomputed = stored;
  recomputed.coherent = coherent;
  recomputed.ascent = ascent;
  if (!witness_verified(recomputed)) {
    c.detail = "chain is not a strictly ascending witness";
    return c;
  }
  if (emit(witness_to_json(stored)) != emit(j)) {
    c.detail = "re-emitted certificate differs";
    return c;
  }
  c.ok = true;
  return c;
}

CertificateCheck check_verdict(const Json& j) {
  expect_kind(j, "verdict");
  AlgebraDescriptor d = descriptor_from_json(field_of(j, "descriptor"));
  d.base = field_from_json(field_of(j, "field"));
  CertificateCheck c{"verdict", false, ""};
  const std::uint64_t overhang =
      j.contains("sample_report") ? get<std::uint64_t>(j.at("sample_report"), "overhang") : ClassifyOptions{}.overhang;
  const Verdict v =
      classify_algebra(d, ClassifyOptions{std::max<std::uint64_t>(get<std::uint64_t>(j, "depth"), 1), overhang});
  if (v.noetherian != get<bool>(j, "noetherian") || v.rule != get<std::string>(j, "rule")) {
    c.detail = "verdict or rule differs from the classifier";
    return c;
  }
  if (v.witness.has_value() != j.contains("witness") || v.sample_report.has_value() != j.contains("sample_report")) {
    c.detail = "evidence attachments differ";
    return c;
  }
  if (j.contains("witness")) {
    auto w = check_witness(j.at("witness"));
    if (!w.ok) {
      c.detail = "witness: " + w.detail;
      return c;
    }
  }
  if (j.contains("sample_report")) {
    auto s = check_stabilization(j.at("sample_report"));
    if (!s.ok) {
      c.detail = "sample report: " + s.detail;
      return c;
    }
  }
  Json expected = verdict_to_json(v);
  if (!v.witness) expected["depth"] = j.at("depth");
  if (emit(expected) != emit(j)) {
    c.detail = "re-emitted certificate differs";
    return c;
  }
  c.ok = true;
  return c;
}

CertificateCheck check_record(const Json& j, const std::string& kind) {
  CertificateCheck c{kind, false, ""};
  const ConfigPtr cfg = field_from_json(field_of(j, "field"));
  Json expected;
  if (kind == "arith") {
    expected = arith_record(get<std::string>(j, "input"), cfg);
  } else if (kind == "irreducible") {
    expected = irreducible_record(get<std::string>(j, "poly"), cfg, get<bool>(j, "perfect"), get<bool>(j, "transfer"),
                                  get<std::uint64_t>(j, "steps"));
  } else {
    expected = lift_record(get<std::string>(j, "gen"), get<std::uint64_t>(j, "level"), cfg, get<bool>(j, "perfect"));
  }
  if (emit(expected) != emit(j)) {
    c.detail = "recomputed result differs";
    return c;
  }
  c.ok = true;
  return c;
}

}  // namespace

Json arith_record(const std::string& input, const ConfigPtr& config) {
  const TowerElement x = parse_tower_element(input, config->with_variable(std::string(FieldConfig::kTowerSymbol)));
  return Json{{"kind", "arith"},
              {"field", field_to_json(config)},
              {"input", input},
              {"value", format_tower(x)},
              {"level", x.level()}};
}

namespace {

template <CoefficientDomain D>
Json irreducible_fields(const MonicPoly<D>& g, bool transfer, std::uint64_t steps) {
  Json j{{"poly", format_upoly(g)}, {"transfer", transfer}, {"steps", transfer ? steps : 0}};
  if (transfer) {
    const auto r = irreducible_transfer(g, steps);
    j["base_irreducible"] = r.base_irreducible;
    j["non_pth_power_index"] = r.non_pth_power_index ? Json(*r.non_pth_power_index) : Json(nullptr);
    j["non_pth_power"] =
        r.non_pth_power_index ? Json(format_element(g.domain(), g.coeff(*r.non_pth_power_index))) : Json(nullptr);
    j["irreducible"] = r.irreducible;
    const auto p = static_cast<std::size_t>(g.domain().characteristic());
    const auto k = static_cast<std::size_t>(ipow(p, steps));
    j["target"] = format_upoly(substitute_power(g.poly(), k, g.symbol()));
  } else {
    j["irreducible"] = is_irreducible(g);
  }
  return j;
}

template <CoefficientDomain D>
Json lift_fields(const MonicPoly<D>& g, std::uint64_t level) {
  const auto P = TowerPrime<D>::certified(level, g);
  const auto lifted = lift_prime(P);
  const auto back = contract_prime(lifted.prime);
  return Json{{"gen", format_upoly(g)},
              {"case", to_string(lifted.lift_case)},
              {"lifted", format_upoly(lifted.prime.gen())},
              {"contracted", format_upoly(back.gen())},
              {"roundtrip", back == P}};
}

}  // namespace

Json irreducible_record(const std::string& poly, const ConfigPtr& config, bool perfect, bool transfer,
                        std::uint64_t steps) {
  const Symbol X{"X", 0};
  Json j = perfect ? irreducible_fields(parse_monic(poly, PerfectDomain{config}, X), transfer, steps)
                   : irreducible_fields(parse_monic(poly, RationalDomain{config}, X), transfer, steps);
  j["kind"] = "irreducible";
  j["field"] = field_to_json(config);
  j["perfect"] = perfect;
  return j;
}

Json lift_record(const std::string& gen, std::uint64_t level, const ConfigPtr& config, bool perfect) {
  const Symbol t = tower_symbol(level);
  Json j = perfect ? lift_fields(parse_monic(gen, PerfectDomain{config}, t), level)
                   : lift_fields(parse_monic(gen, RationalDomain{config}, t), level);
  j["kind"] = "lift";
  j["field"] = field_to_json(config);
  j["level"] = level;
  j["perfect"] = perfect;
  return j;
}

CertificateCheck verify_certificate(const Json& certificate) {
  const auto kind = get<std::string>(certificate, "kind");
  try {
    if (kind == "stabilization") return check_stabilization(certificate);
    if (kind == "witness") return check_witness(certificate);
    if (kind == "verdict") return check_verdict(certificate);
    if (kind == "arith" || kind == "irreducible" || kind == "lift") return check_record(certificate, kind);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  malformed("unknown certificate kind '" + kind + "'");
}

}  // namespace perfclosure
