#include "logder/criteria.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace logder;
using testsupport::D;
using testsupport::P;

namespace {

std::vector<Derivation> generic4_gens() {
    return {D({"x", "y", "z"}, 3), D({"x^2 + x*y + x*z", "0", "0"}, 3), D({"x*y", "-x*y", "0"}, 3),
            D({"x*y", "y^2 + y*z", "0"}, 3)};
}

const Arrangement generic4 = testsupport::A({"x", "y", "z", "x + y + z"}, 3);

}  // namespace

TEST_CASE("Saito's criterion") {
    const auto triple = testsupport::A({"x", "y", "x - y"}, 2);
    auto c = check_saito(triple, std::vector<Derivation>{euler(2), D({"x^2", "y^2"}, 2)});
    CHECK(c.verdict == SaitoCertificate::Verdict::Free);
    REQUIRE(c.constant.has_value());
    CHECK(*c.constant == -1);
    CHECK(c.exponents == std::vector<int>{1, 2});
    CHECK(c.degree_sum_matches);

    const auto product = testsupport::A({"x", "y", "x - y", "z"}, 3);
    c = check_saito(product, std::vector<Derivation>{D({"x", "y", "0"}, 3), D({"x^2", "y^2", "0"}, 3),
                                                      D({"0", "0", "z"}, 3)});
    CHECK(c.verdict == SaitoCertificate::Verdict::Free);
    CHECK(c.exponents == std::vector<int>{1, 2, 1});

    c = check_saito(triple, std::vector<Derivation>{euler(2), coordinate(2, 0, triple.defining_polynomial())});
    CHECK(c.verdict == SaitoCertificate::Verdict::NotConclusive);
    CHECK_FALSE(c.degree_sum_matches);

    auto gens = generic4_gens();
    for (std::size_t drop = 0; drop < 4; ++drop) {
        std::vector<Derivation> three;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != drop) three.push_back(gens[i]);
        CHECK(check_saito(generic4, three).verdict == SaitoCertificate::Verdict::NotConclusive);
    }

    CHECK_THROWS_AS(check_saito(triple, std::vector<Derivation>{D({"x", "y^2"}, 2), euler(2)}), ContractViolation);
    CHECK_THROWS_AS(check_saito(triple, std::vector<Derivation>{D({"y", "0"}, 2), euler(2)}), ContractViolation);
}

TEST_CASE("primitivity") {
    CHECK(primitivity(std::vector<Polynomial>{P("x", 2), P("y", 2)}));
    CHECK_FALSE(primitivity(std::vector<Polynomial>{P("x^2", 2), P("x*y", 2)}));
    CHECK(primitivity(std::vector<Polynomial>{P("0", 2), P("1", 2), P("x", 2)}));
    CHECK_THROWS(primitivity(std::vector<Polynomial>{P("0", 2)}));
}

TEST_CASE("common divisor modulo a linear form") {
    const std::size_t n = 3;
    const auto z = LinearForm::from_polynomial(P("z", n));
    auto r = common_divisor_modulo(std::vector<Polynomial>{P("x*y + z*x + z^2", n), P("x^2 - 3*y*z", n)}, z);
    CHECK(r.outcome == ModuloDivisorReport::Outcome::CommonDivisor);
    CHECK(r.divisor == P("x", n));
    r = common_divisor_modulo(std::vector<Polynomial>{P("x", n), P("y", n)}, z);
    CHECK(r.outcome == ModuloDivisorReport::Outcome::NoNontrivialDivisor);
    r = common_divisor_modulo(std::vector<Polynomial>{P("z", n), P("2*z", n)}, z);
    CHECK(r.outcome == ModuloDivisorReport::Outcome::AllZeroResidues);
    CHECK_THROWS(common_divisor_modulo(std::vector<Polynomial>{P("x", n)}, LinearForm(std::vector<Rational>(3))));

    // shifting by multiples of f changes nothing
    testsupport::Rng rng(29);
    const auto f = LinearForm::from_polynomial(P("x - 2*y + z", n));
    for (int t = 0; t < 10; ++t) {
        std::vector<Polynomial> gs{testsupport::random_homogeneous(rng, n, 2), testsupport::random_homogeneous(rng, n, 2)};
        auto shifted = gs;
        shifted[t % 2] += testsupport::random_homogeneous(rng, n, 1) * f.to_polynomial();
        const auto a = common_divisor_modulo(gs, f), b = common_divisor_modulo(shifted, f);
        CHECK(a.outcome == b.outcome);
        CHECK(a.divisor == b.divisor);
    }
}

TEST_CASE("SPOG criterion") {
    auto c = check_spog(generic4, generic4_gens());
    CHECK(c.verdict == SpogCertificate::Verdict::Spog);
    CHECK(c.relation_degree == 3);
    CHECK(c.relation_verified);
    CHECK(c.relation_primitive);
    REQUIRE(c.pivot.has_value());
    CHECK(c.coefficients[*c.pivot - 1].degree() == 1);

    const auto coords = testsupport::A({"x", "y"}, 2);
    c = check_spog(coords, std::vector<Derivation>{D({"x", "0"}, 2), D({"0", "x*y"}, 2), D({"0", "y"}, 2)});
    CHECK(c.verdict == SpogCertificate::Verdict::Fail);
    CHECK(c.reason == SpogCertificate::FailReason::SaitoApplies);
    CHECK(c.saito_omitted == 2u);
    REQUIRE(c.saito.has_value());
    CHECK(c.saito->verdict == SaitoCertificate::Verdict::Free);

    auto dup = generic4_gens();
    dup[3] = dup[2];
    c = check_spog(generic4, dup);
    CHECK(c.verdict == SpogCertificate::Verdict::Fail);

    auto dup2 = generic4_gens();
    dup2.push_back(dup2[3]);
    dup2.erase(dup2.begin());  // three degree-2 generators and a repeat: every minor is 0
    CHECK_THROWS_AS(check_spog(generic4, dup2), ContractViolation);

    // verdict invariance under permutation and scaling
    auto gens = generic4_gens();
    std::swap(gens[0], gens[2]);
    gens[1] = Rational(-3, 2) * gens[1];
    c = check_spog(generic4, gens);
    CHECK(c.verdict == SpogCertificate::Verdict::Spog);
    CHECK(c.relation_degree == 3);
}

TEST_CASE("SPOG in four variables is conditional") {
    // the generic four planes times a line: D(A) = D(A') + S x4 d4
    const auto a = testsupport::A({"x1", "x2", "x3", "x1 + x2 + x3", "x4"}, 4);
    const auto gens = flatten(minimal_generators(a, 5));
    REQUIRE(gens.size() == 5);
    auto c = check_spog(a, gens);
    CHECK(c.verdict == SpogCertificate::Verdict::SpogConditionalOnPd1);
    CHECK(check_spog(a, gens, true).verdict == SpogCertificate::Verdict::Spog);
    const auto ev = oracle_verify_spog(a, gens, *c.relation_degree, 4);
    CHECK(ev.confirmed());
    apply_oracle_evidence(c, ev);
    CHECK(c.verdict == SpogCertificate::Verdict::Spog);
}

TEST_CASE("necessity direction") {
    const auto gens = generic4_gens();
    const auto rel = syzygy_space(gens, 3).front();
    auto rep = necessity_check(generic4, gens, rel);
    CHECK(rep.passed());
    CHECK(rep.constant.has_value());

    // scaling theta_1 by 2 and f_1 by 1/2 keeps the relation
    auto scaled = gens;
    scaled[0] = Rational(2) * scaled[0];
    auto rel2 = rel;
    rel2[0] = Rational(1, 2) * rel2[0];
    CHECK(necessity_check(generic4, scaled, rel2).passed());

    auto bad = rel;
    bad[1] = bad[1] + generic4.defining_polynomial();
    rep = necessity_check(generic4, gens, bad);
    CHECK_FALSE(rep.proportional);
    CHECK(rep.proportionality_failure == 2u);
}

TEST_CASE("degree bookkeeping") {
    CHECK(betti_degree_check(6, {{1, 2, 3}}));
    CHECK(betti_degree_check(4, {{1, 2, 2, 2}, {3}}));
    CHECK_FALSE(betti_degree_check(3, {{1, 1}}));
}

TEST_CASE("exploratory reports") {
    GradedOracle oracle(generic4);
    auto shape = explore_conjecture_resolution_shape(3, oracle.resolution(6));
    CHECK(shape.status == ResolutionShapeReport::Status::Consistent);
    REQUIRE(shape.pairing.size() == 1);
    CHECK(shape.pairing[0] == std::pair<unsigned, unsigned>{3, 2});

    GradedOracle boolean(testsupport::A({"x", "y", "z"}, 3));
    shape = explore_conjecture_resolution_shape(3, boolean.resolution(4));
    CHECK(shape.status == ResolutionShapeReport::Status::Vacuous);

    const auto gens = generic4_gens();
    auto rep = explore_conjecture_generic_ideal(generic4, gens, 8);
    CHECK(rep.k == 0);
    CHECK(rep.rows.size() == 9);
    CHECK_THROWS(explore_conjecture_generic_ideal(generic4, gens, 3));
}
