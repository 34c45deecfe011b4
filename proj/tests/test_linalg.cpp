#include "logder/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace logder;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(0, rows.empty() ? 0 : rows[0].size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

RationalMatrix random_matrix(testsupport::Rng& rng, std::size_t r, std::size_t c, std::size_t rank_cap) {
    // product of r x k and k x c random matrices, so rank <= k
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(rank_cap)), b(rank_cap, std::vector<Rational>(c));
    for (auto& row : a)
        for (auto& x : row) x = testsupport::uniform(rng, -4, 4);
    for (auto& row : b)
        for (auto& x : row) x = testsupport::uniform(rng, -4, 4);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t k = 0; k < rank_cap; ++k) m(i, j) += a[i][k] * b[k][j];
    return m;
}

}  // namespace

TEST_CASE("rank, kernel and solve") {
    const auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == RationalVector{1, 1, -1});

    CHECK(kernel(RationalMatrix(0, 3)).size() == 3);

    const std::vector<Rational> b{6, 12, 2};
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * (*x)[j];
        CHECK(s == b[i]);
    }
    CHECK_FALSE(solve(m, std::vector<Rational>{1, 0, 0}).has_value());
}

TEST_CASE("random kernels and determinants") {
    testsupport::Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        const std::size_t r = 2 + t % 5, c = 3 + t % 4, k = 1 + t % 3;
        const auto m = random_matrix(rng, r, c, k);
        const auto ker = kernel(m);
        CHECK(ker.size() == c - rank(m));
        for (const auto& v : ker) {
            for (std::size_t i = 0; i < r; ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
                CHECK(s == 0);
            }
        }
        const std::size_t n = 2 + t % 4;
        RationalMatrix sq(n, n);
        std::vector<std::vector<Rational>> copy(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) copy[i][j] = sq(i, j) = testsupport::random_rational(rng);
        CHECK(determinant(sq) == testsupport::gauss_det(copy));
    }
}

TEST_CASE("echelon span") {
    EchelonSpan span(3);
    CHECK(span.insert({1, 1, 0}));
    CHECK(span.insert({0, 1, 1}));
    CHECK_FALSE(span.insert({1, 2, 1}));
    CHECK(span.contains({2, 0, -2}));
    CHECK_FALSE(span.contains({0, 0, 1}));
    CHECK(span.rank() == 2);
    CHECK_FALSE(span.insert({0, 0, 0}));
}
