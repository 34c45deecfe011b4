#include "support.hpp"

#include <doctest.h>

using namespace logder;
using testsupport::D;
using testsupport::P;

TEST_CASE("determinants") {
    const std::size_t n = 3;
    CHECK(determinant({{P("x", n), P("0", n)}, {P("0", n), P("y", n)}}) == P("x*y", n));
    CHECK(determinant({{P("x", n), P("y", n)}, {P("x", n), P("y", n)}}).is_zero());
    const PolyMatrix m{{P("x", n), P("y", n), P("0", n)},
                       {P("x^2", n), P("y^2", n), P("0", n)},
                       {P("0", n), P("0", n), P("z", n)}};
    CHECK(determinant(m) == P("x*y^2*z - x^2*y*z", n));
    CHECK_THROWS(determinant({{P("x", n), P("y", n)}}));

    // Bareiss path (size > 4) against the Leibniz oracle
    testsupport::Rng rng(23);
    for (int t = 0; t < 6; ++t) {
        const std::size_t size = 5 + t % 2;
        PolyMatrix big(size, std::vector<Polynomial>(size));
        for (auto& row : big)
            for (auto& e : row) e = testsupport::random_polynomial(rng, 2, 1, 0.7);
        CHECK(determinant(big) == testsupport::leibniz_det(big));
    }
}

TEST_CASE("sign exponents and subset order") {
    const std::vector<std::size_t> first{1, 2}, skip{1, 3}, tail{2, 3, 4};
    CHECK(sign_exponent(first, 2, 3) == 0);
    CHECK(sign_exponent(skip, 2, 3) == 1);
    CHECK(sign_exponent(tail, 3, 4) == 3);
    CHECK_THROWS(sign_exponent(first, 3, 3));
    const std::vector<std::size_t> out_of_range{1, 4};
    CHECK_THROWS(sign_exponent(out_of_range, 2, 3));
    const auto s = subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<std::size_t>{1, 2});
    CHECK(s[2] == std::vector<std::size_t>{1, 4});
    CHECK(s.back() == std::vector<std::size_t>{3, 4});
}

TEST_CASE("minor profiles") {
    const auto a = testsupport::A({"x", "y"}, 2);
    const std::vector<Derivation> diag{D({"x", "0"}, 2), D({"0", "y"}, 2)};
    auto prof = minor_profiles(diag, a);
    REQUIRE(prof.size() == 1);
    CHECK(prof[0].minor == P("x*y", 2));
    CHECK(prof[0].coefficient == Polynomial::constant(2, 1));

    const std::vector<Derivation> three{D({"x", "0"}, 2), D({"0", "x*y"}, 2), D({"0", "y"}, 2)};
    prof = minor_profiles(three, a);
    REQUIRE(prof.size() == 3);
    CHECK(prof[0].rows == std::vector<std::size_t>{1, 2});
    CHECK(prof[0].sign_exponent == 0);
    CHECK(prof[0].minor == P("x^2*y", 2));
    CHECK(prof[0].coefficient == P("x", 2));
    CHECK(prof[1].coefficient == Polynomial::constant(2, -1));
    CHECK(prof[2].coefficient.is_zero());

    const std::vector<Derivation> dup{D({"x", "0"}, 2), D({"x", "0"}, 2), D({"0", "y"}, 2)};
    prof = minor_profiles(dup, a);
    CHECK(prof[0].minor.is_zero());
    CHECK(prof[0].coefficient.is_zero());

    const std::vector<Derivation> bad{D({"y", "0"}, 2), D({"0", "y"}, 2)};
    try {
        minor_profiles(bad, a);
        FAIL("expected a contract violation");
    } catch (const ContractViolation& e) {
        CHECK(e.kind() == ContractViolation::Kind::NotLogarithmic);
        CHECK(e.indices().front() == 1);
    }
}

TEST_CASE("relation coefficients from minors") {
    const auto a = testsupport::A({"x", "y"}, 2);
    const std::vector<Derivation> three{D({"x", "0"}, 2), D({"0", "x*y"}, 2), D({"0", "y"}, 2)};
    const auto g = spog_coefficients(three, a);
    REQUIRE(g.size() == 3);
    CHECK(g[0].is_zero());
    CHECK(g[1] == Polynomial::constant(2, 1));
    CHECK(g[2] == P("-x", 2));
    CHECK(verify_syzygy(g, three));
    // deg g_3 = deg theta_1 + deg theta_2 - |A|
    CHECK(g[2].degree() == 1 + 2 - 2);

    const std::vector<Derivation> repeated{D({"x", "0"}, 2), D({"0", "y"}, 2), D({"0", "y"}, 2)};
    CHECK(spog_coefficients(repeated, a)[0].is_zero());

    const std::vector<Derivation> diag{D({"x", "0"}, 2), D({"0", "y"}, 2)};
    const std::vector<Polynomial> ones{Polynomial::constant(2, 1), Polynomial::constant(2, 1)};
    CHECK_FALSE(verify_syzygy(ones, diag));
    CHECK(verify_syzygy(std::vector<Polynomial>(2, Polynomial(2)), diag));
    CHECK_THROWS(verify_syzygy(ones, three));
}

TEST_CASE("Cramer coefficients") {
    const auto a = testsupport::A({"x", "y"}, 2);
    const std::vector<Derivation> frame{D({"x", "0"}, 2), D({"0", "x*y"}, 2)};
    auto rel = cramer_coefficients(frame, D({"0", "y"}, 2), a);
    CHECK(rel.coefficients[0].is_zero());
    CHECK(rel.coefficients[1] == Polynomial::constant(2, 1));
    CHECK(rel.frame_coefficient == P("-x", 2));

    // eta equal to the last frame element
    rel = cramer_coefficients(frame, frame[1], a);
    CHECK(rel.coefficients[0].is_zero());
    CHECK(rel.coefficients[1] == -rel.frame_coefficient);

    rel = cramer_coefficients(frame, Derivation(2), a);
    CHECK(rel.coefficients[0].is_zero());
    CHECK(rel.coefficients[1].is_zero());

    const std::vector<Derivation> degenerate{D({"x", "0"}, 2), D({"x^2", "0"}, 2)};
    try {
        cramer_coefficients(degenerate, D({"0", "y"}, 2), a);
        FAIL("expected DegenerateFrame");
    } catch (const ContractViolation& e) {
        CHECK(e.kind() == ContractViolation::Kind::DegenerateFrame);
    }
}
