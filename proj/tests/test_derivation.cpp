#include "support.hpp"

#include <doctest.h>

using namespace logder;
using testsupport::D;
using testsupport::P;

TEST_CASE("applying derivations") {
    const std::size_t n = 2;
    const auto theta = D({"x^2", "y^2"}, n);
    CHECK(apply(theta, P("x - y", n)) == P("x^2 - y^2", n));
    CHECK(apply(euler(n), P("x^3 + x*y^2", n)) == P("3*x^3 + 3*x*y^2", n));
    CHECK(theta.degree() == 2);
    CHECK(euler(3).degree() == 1);
    CHECK(Derivation(n).degree() == -1);
    CHECK_FALSE(D({"x", "y^2"}, n).is_homogeneous());
    CHECK(D({"0", "y^2"}, n).is_homogeneous());
    CHECK(coordinate(n, 1, P("x", n)) == D({"0", "x"}, n));
}

TEST_CASE("logarithmic check names a witness") {
    const auto a = testsupport::A({"x", "y", "x - y"}, 2);
    CHECK(is_logarithmic(euler(2), a).logarithmic);
    CHECK(is_logarithmic(D({"x^2", "y^2"}, 2), a).logarithmic);
    const auto bad = is_logarithmic(D({"y", "0"}, 2), a);
    CHECK_FALSE(bad.logarithmic);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == 0);
    CHECK(is_logarithmic(coordinate(2, 0, a.defining_polynomial()), a).logarithmic);
}

TEST_CASE("derivation files") {
    const auto ds = parse_derivations("vars: 2\n# Euler\nd1: x\nd2: y\n\nd2: y^2\nd1: x^2\n");
    REQUIRE(ds.size() == 2);
    CHECK(ds[0] == euler(2));
    CHECK(ds[1] == D({"x^2", "y^2"}, 2));
    CHECK(parse_derivations(format_derivations(ds)) == ds);
    CHECK_THROWS_AS(parse_derivations("vars: 2\nd1: x\n"), FormatError);
    CHECK_THROWS_AS(parse_derivations("vars: 2\nd1: x\nd3: y\n"), FormatError);
    CHECK_THROWS_AS(parse_derivations("vars: 2\nd1: x\nd1: y\n"), FormatError);
    CHECK_THROWS_AS(parse_derivations("d1: x\nd2: y\n"), FormatError);
}
