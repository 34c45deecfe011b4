#include "logder/certificate.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace logder;
using testsupport::D;

namespace {

const Arrangement generic4 = testsupport::A({"x", "y", "z", "x + y + z"}, 3);

std::vector<Derivation> generic4_gens() {
    return {D({"x", "y", "z"}, 3), D({"x^2 + x*y + x*z", "0", "0"}, 3), D({"x*y", "-x*y", "0"}, 3),
            D({"x*y", "y^2 + y*z", "0"}, 3)};
}

}  // namespace

TEST_CASE("round trips") {
    const auto a = testsupport::A({"x", "y", "x - 2/3*y"}, 2);
    const auto back = arrangement_from_json(to_json(a));
    CHECK(back.hyperplanes() == a.hyperplanes());
    const auto gens = generic4_gens();
    CHECK(derivations_from_json(to_json(std::span<const Derivation>(gens)), 3) == gens);
}

TEST_CASE("Saito certificates re-verify") {
    const auto triple = testsupport::A({"x", "y", "x - y"}, 2);
    const std::vector<Derivation> basis{euler(2), D({"x^2", "y^2"}, 2)};
    Json cert = saito_certificate_json(triple, basis, check_saito(triple, basis));
    CHECK(cert["verdict"] == "Free");
    CHECK(cert["constant"] == "-1");
    auto r = verify_certificate(Json::parse(cert.dump()));
    CHECK(r.ok);

    cert["determinant"] = "x1*x2";
    CHECK_FALSE(verify_certificate(cert).ok);
}

TEST_CASE("SPOG certificates re-verify") {
    const auto gens = generic4_gens();
    auto c = check_spog(generic4, gens);
    Json cert = spog_certificate_json(generic4, gens, c);
    CHECK(cert["verdict"] == "SPOG");
    CHECK(cert["relation_degree"] == 3);
    auto r = verify_certificate(Json::parse(cert.dump()));
    CHECK_MESSAGE(r.ok, r.message);

    Json tampered = cert;
    tampered["coefficients"][1] = "x1";
    CHECK_FALSE(verify_certificate(tampered).ok);
    tampered = cert;
    tampered["verdict"] = "Fail";
    CHECK_FALSE(verify_certificate(tampered).ok);
    tampered = cert;
    tampered["derivations"][1][0] = "x1^2";
    CHECK_FALSE(verify_certificate(tampered).ok);
    CHECK_FALSE(verify_certificate(Json::parse("{\"kind\": \"spog\"}")).ok);
}

TEST_CASE("minor certificates re-verify") {
    const auto coords = testsupport::A({"x", "y"}, 2);
    const std::vector<Derivation> rows{D({"x", "0"}, 2), D({"0", "x*y"}, 2), D({"0", "y"}, 2)};
    Json cert = minors_json(coords, rows, minor_profiles(rows, coords));
    CHECK(cert["rows"].size() == 3);
    CHECK(verify_certificate(cert).ok);
    cert["rows"][0]["sigma"] = 1;
    CHECK_FALSE(verify_certificate(cert).ok);
}
