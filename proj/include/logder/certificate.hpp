#pragma once

#include "logder/arrangement.hpp"
#include "logder/criteria.hpp"
#include "logder/derivation.hpp"
#include "logder/minors.hpp"
#include "logder/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>

namespace logder {

using Json = nlohmann::ordered_json;

// Machine-readable certificates. Polynomials are grammar strings; every
// certificate embeds its arrangement and input derivations so it can be
// re-verified on its own. Layout is documented in docs/certificates.md.

Json to_json(const Arrangement& a);
Json to_json(std::span<const Derivation> thetas);
Json to_json(const ModuloDivisorReport& r);

Json saito_certificate_json(const Arrangement& a, std::span<const Derivation> thetas, const SaitoCertificate& cert);
Json spog_certificate_json(const Arrangement& a, std::span<const Derivation> thetas, const SpogCertificate& cert,
                           const std::optional<SpogOracleEvidence>& evidence = std::nullopt);
Json minors_json(const Arrangement& a, std::span<const Derivation> thetas, std::span<const MinorProfile> profiles);

Arrangement arrangement_from_json(const Json& j);
std::vector<Derivation> derivations_from_json(const Json& j, std::size_t nvars);

struct VerifyResult {
    bool ok = false;
    std::string message;
};

// Re-parses a certificate and re-checks every algebraic claim it makes
// (relations re-evaluated to zero, minors and quotients recomputed).
VerifyResult verify_certificate(const Json& cert);

}  // namespace logder
