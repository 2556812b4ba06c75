#pragma once

#include <string>

#include "json.hpp"
#include "perfclosure/witness/classify.hpp"

namespace perfclosure {

using Json = nlohmann::json;

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string emit(const Json& certificate);
/// Throws MalformedCertificate on invalid JSON.
Json parse_certificate(const std::string& text);

Json field_to_json(const ConfigPtr& config);
ConfigPtr field_from_json(const Json& j);

Json stabilization_to_json(const StabilizationReport<RationalDomain>& report);
StabilizationReport<RationalDomain> stabilization_from_json(const Json& j);

Json witness_to_json(const WitnessChain& chain);
/// The stored chain as written (alphas and verdicts are parsed, not rebuilt).
WitnessChain witness_from_json(const Json& j);

Json descriptor_to_json(const AlgebraDescriptor& d);
AlgebraDescriptor descriptor_from_json(const Json& j);
Json verdict_to_json(const Verdict& v);

/// Result records of the evaluation commands; verification recomputes them.
Json arith_record(const std::string& input, const ConfigPtr& config);
/// Polynomial in X over F_q(V) (or its perfect closure).
Json irreducible_record(const std::string& poly, const ConfigPtr& config, bool perfect, bool transfer,
                        std::uint64_t steps);
/// Generator in t at the given level; includes the contraction back.
Json lift_record(const std::string& gen, std::uint64_t level, const ConfigPtr& config, bool perfect);

struct CertificateCheck {
  std::string kind;
  bool ok = false;
  std::string detail;
};

/// Recomputes every claim of the certificate from its stored data. Throws
/// MalformedCertificate for structurally invalid input.
CertificateCheck verify_certificate(const Json& certificate);

}  // namespace perfclosure
