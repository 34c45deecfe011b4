#include "logder/certificate.hpp"

namespace logder {

namespace {

Json poly_list(std::span<const Polynomial> ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(format(p));
    return arr;
}

std::vector<Polynomial> parse_poly_list(const Json& j, std::size_t nvars) {
    std::vector<Polynomial> out;
    for (const auto& s : j) out.push_back(parse_polynomial(s.get<std::string>(), nvars));
    return out;
}

Json saito_body(const Arrangement& a, const SaitoCertificate& cert) {
    Json j;
    j["verdict"] = to_string(cert.verdict);
    j["determinant"] = format(cert.determinant);
    j["Q"] = format(a.defining_polynomial());
    j["constant"] = cert.constant ? Json(cert.constant->get_str()) : Json(nullptr);
    j["exponents"] = cert.exponents;
    j["degree_sum"] = cert.degree_sum;
    j["arrangement_size"] = cert.arrangement_size;
    j["degree_sum_matches"] = cert.degree_sum_matches;
    return j;
}

VerifyResult fail(std::string msg) { return {false, std::move(msg)}; }

VerifyResult verify_saito(const Json& c, const Arrangement& a, const std::vector<Derivation>& thetas) {
    const SaitoCertificate redo = check_saito(a, thetas);
    if (format(redo.determinant) != c.at("determinant").get<std::string>())
        return fail("determinant does not match recomputation");
    if (to_string(redo.verdict) != c.at("verdict").get<std::string>()) return fail("verdict does not match");
    if (redo.verdict == SaitoCertificate::Verdict::Free) {
        const Rational claimed = parse_rational(c.at("constant").get<std::string>());
        if (redo.determinant != claimed * a.defining_polynomial()) return fail("det != c * Q");
        if (!redo.degree_sum_matches) return fail("free basis degrees do not sum to |A|");
    }
    return {true, "saito certificate verified"};
}

VerifyResult verify_spog(const Json& c, const Arrangement& a, const std::vector<Derivation>& thetas) {
    const auto gs = parse_poly_list(c.at("coefficients"), a.nvars());
    if (!verify_syzygy(gs, thetas)) return fail("relation sum g_i theta_i is not zero");
    if (gs != spog_coefficients(thetas, a)) return fail("coefficients do not match the recomputed minors");
    const SpogCertificate redo = check_spog(a, thetas, c.value("pd1_assumed", false));
    const std::string verdict = c.at("verdict").get<std::string>();
    // An oracle-confirmed certificate may carry an upgraded verdict.
    const bool upgraded = redo.verdict == SpogCertificate::Verdict::SpogConditionalOnPd1 && verdict == "SPOG" &&
                          c.contains("oracle") && c["oracle"].value("confirmed", false);
    if (to_string(redo.verdict) != verdict && !upgraded) return fail("verdict does not match recomputation");
    if (c.contains("pivot") && !c["pivot"].is_null()) {
        if (!redo.pivot || *redo.pivot != c["pivot"].get<std::size_t>()) return fail("pivot does not match");
    }
    return {true, "spog certificate verified"};
}

VerifyResult verify_minors(const Json& c, const Arrangement& a, const std::vector<Derivation>& thetas) {
    const Polynomial q = a.defining_polynomial();
    const auto profiles = minor_profiles(thetas, a);
    const auto& rows = c.at("rows");
    if (rows.size() != profiles.size()) return fail("wrong number of minors");
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const Polynomial minor = parse_polynomial(rows[i].at("minor").get<std::string>(), a.nvars());
        const Polynomial coeff = parse_polynomial(rows[i].at("coefficient").get<std::string>(), a.nvars());
        if (minor != profiles[i].minor) return fail("minor " + std::to_string(i + 1) + " does not match");
        if (minor != coeff * q) return fail("minor " + std::to_string(i + 1) + " != g * Q");
        if (rows[i].at("sigma").get<int>() != profiles[i].sign_exponent) return fail("sign exponent mismatch");
    }
    return {true, "minors certificate verified"};
}

}  // namespace

Json to_json(const Arrangement& a) {
    Json j;
    j["vars"] = a.nvars();
    Json hs = Json::array();
    for (const auto& h : a.hyperplanes()) hs.push_back(format(h.to_polynomial()));
    j["hyperplanes"] = hs;
    return j;
}

Json to_json(std::span<const Derivation> thetas) {
    Json arr = Json::array();
    for (const auto& t : thetas) arr.push_back(poly_list(t.components()));
    return arr;
}

Json to_json(const ModuloDivisorReport& r) {
    Json j;
    j["outcome"] = to_string(r.outcome);
    j["divisor"] = format(r.divisor);
    j["residues"] = poly_list(r.residues);
    j["eliminated_variable"] = r.pivot + 1;
    return j;
}

Json saito_certificate_json(const Arrangement& a, std::span<const Derivation> thetas, const SaitoCertificate& cert) {
    Json j;
    j["kind"] = "saito";
    j["arrangement"] = to_json(a);
    j["derivations"] = to_json(thetas);
    j.update(saito_body(a, cert));
    return j;
}

Json spog_certificate_json(const Arrangement& a, std::span<const Derivation> thetas, const SpogCertificate& cert,
                           const std::optional<SpogOracleEvidence>& evidence) {
    Json j;
    j["kind"] = "spog";
    j["arrangement"] = to_json(a);
    j["derivations"] = to_json(thetas);
    j["verdict"] = to_string(cert.verdict);
    j["reason"] = to_string(cert.reason);
    j["detail"] = cert.detail;
    j["coefficients"] = poly_list(cert.coefficients);
    j["generator_degrees"] = cert.generator_degrees;
    j["pivot"] = cert.pivot ? Json(*cert.pivot) : Json(nullptr);
    j["relation_degree"] = cert.relation_degree ? Json(*cert.relation_degree) : Json(nullptr);
    j["relation_verified"] = cert.relation_verified;
    j["relation_primitive"] = cert.relation_primitive;
    j["divisor_test"] = cert.divisor_report ? to_json(*cert.divisor_report) : Json(nullptr);
    j["divisor_interpretation"] =
        "h is homogeneous of positive degree; tested as a nonconstant common divisor of the residues in S/(g_pivot)";
    j["pd1_assumed"] = cert.pd1_assumed;
    if (cert.saito) {
        j["saito_omitted"] = *cert.saito_omitted;
        j["saito"] = saito_body(a, *cert.saito);
    }
    if (evidence) {
        Json o;
        o["max_degree"] = evidence->max_degree;
        o["generates"] = evidence->generates;
        o["first_failing_degree"] =
            evidence->generation.first_failing_degree ? Json(*evidence->generation.first_failing_degree) : Json(nullptr);
        o["proper_subset_generates"] = evidence->proper_subset_generates;
        o["minimal"] = evidence->minimal;
        o["relation_space_dim"] = evidence->relation_space_dim;
        o["unique_relation"] = evidence->unique_relation;
        o["confirmed"] = evidence->confirmed();
        j["oracle"] = o;
    }
    return j;
}

Json minors_json(const Arrangement& a, std::span<const Derivation> thetas, std::span<const MinorProfile> profiles) {
    Json j;
    j["kind"] = "minors";
    j["arrangement"] = to_json(a);
    j["derivations"] = to_json(thetas);
    j["Q"] = format(a.defining_polynomial());
    Json rows = Json::array();
    for (const auto& p : profiles) {
        Json r;
        r["rows"] = p.rows;
        r["sigma"] = p.sign_exponent;
        r["minor"] = format(p.minor);
        r["coefficient"] = format(p.coefficient);
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

Arrangement arrangement_from_json(const Json& j) {
    const std::size_t n = j.at("vars").get<std::size_t>();
    std::vector<LinearForm> forms;
    for (const auto& s : j.at("hyperplanes"))
        forms.push_back(LinearForm::from_polynomial(parse_polynomial(s.get<std::string>(), n)));
    return Arrangement(n, std::move(forms));
}

std::vector<Derivation> derivations_from_json(const Json& j, std::size_t nvars) {
    std::vector<Derivation> out;
    for (const auto& comps : j) out.emplace_back(parse_poly_list(comps, nvars));
    return out;
}

VerifyResult verify_certificate(const Json& cert) {
    try {
        const Arrangement a = arrangement_from_json(cert.at("arrangement"));
        a.validate();
        const auto thetas = derivations_from_json(cert.at("derivations"), a.nvars());
        const std::string kind = cert.at("kind").get<std::string>();
        if (kind == "saito") return verify_saito(cert, a, thetas);
        if (kind == "spog") return verify_spog(cert, a, thetas);
        if (kind == "minors") return verify_minors(cert, a, thetas);
        return fail("unknown certificate kind '" + kind + "'");
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace logder
