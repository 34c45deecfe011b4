#include "support.hpp"

#include <doctest.h>

using namespace logder;
using testsupport::P;

TEST_CASE("defining polynomial") {
    const auto boolean = testsupport::A({"x", "y", "z"}, 3);
    CHECK(format(boolean.defining_polynomial()) == "x1*x2*x3");
    CHECK(boolean.is_essential());
    const auto triple = testsupport::A({"x", "y", "x - y"}, 2);
    CHECK(triple.defining_polynomial() == P("x^2*y - x*y^2", 2));
    CHECK(triple.defining_polynomial().degree() == 3);
    CHECK_FALSE(testsupport::A({"x", "y"}, 3).is_essential());
}

TEST_CASE("validation names offending indices") {
    try {
        testsupport::A({"x", "y", "2*x + 2*y", "x + y"}, 2).validate();
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ValidationError::Kind::ProportionalPair);
        CHECK(e.first() == 3);
        CHECK(e.second() == 4);
    }
    try {
        Arrangement(2, {LinearForm(std::vector<Rational>{1, 0}), LinearForm(std::vector<Rational>{0, 0})}).validate();
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.kind() == ValidationError::Kind::ZeroForm);
        CHECK(e.first() == 2);
    }
    CHECK_THROWS_AS(Arrangement(2, {LinearForm(std::vector<Rational>{1, 0, 0})}).validate(), ValidationError);
    CHECK_NOTHROW(testsupport::A({"x", "y", "x - y", "x + 2*y"}, 2).validate());
}

TEST_CASE("arrangement files") {
    const auto a = parse_arrangement("# Boolean\nvars: 3\nx1\nx2   # second\n\nx3\n");
    CHECK(a.size() == 3);
    CHECK(a.nvars() == 3);
    CHECK(parse_arrangement(format_arrangement(a)).hyperplanes() == a.hyperplanes());
    const auto b = parse_arrangement("vars: 3\nx + 2y + 3z\n-1/1*x + 1/2*y\n");
    CHECK(b[0].coeffs == std::vector<Rational>{1, 2, 3});
    CHECK(format_arrangement(parse_arrangement(format_arrangement(b))) == format_arrangement(b));

    CHECK_THROWS_AS(parse_arrangement(""), FormatError);
    CHECK_THROWS_AS(parse_arrangement("x\ny\n"), FormatError);
    CHECK_THROWS_AS(parse_arrangement("vars: 2\nx^2\n"), std::exception);
    CHECK_THROWS_AS(parse_arrangement("vars: 2\nx + 1\n"), std::exception);
    CHECK_THROWS_AS(parse_arrangement("vars: 0\n"), FormatError);
}
