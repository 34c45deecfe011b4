#pragma once
// Test-side helpers: seeded generators and independent oracles. Nothing here
// calls the library's linalg or determinant code, so the oracles can be
// compared against it.

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/minors.hpp"
#include "logder/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using logder::Arrangement;
using logder::Derivation;
using logder::LinearForm;
using logder::Monomial;
using logder::Polynomial;
using logder::Rational;

using Rng = std::mt19937_64;

inline Polynomial P(const std::string& s, std::size_t n) { return logder::parse_polynomial(s, n); }

inline Derivation D(std::initializer_list<const char*> comps, std::size_t n) {
    std::vector<Polynomial> v;
    for (auto c : comps) v.push_back(P(c, n));
    return Derivation(v);
}

inline Arrangement A(std::initializer_list<const char*> forms, std::size_t n) {
    std::vector<LinearForm> v;
    for (auto f : forms) v.push_back(LinearForm::from_polynomial(P(f, n)));
    return Arrangement(n, v);
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Nonzero small rational.
inline Rational random_rational(Rng& rng, long range = 5) {
    long num = 0;
    while (num == 0) num = uniform(rng, -range, range);
    Rational q(num, uniform(rng, 1, 3));
    q.canonicalize();
    return q;
}

// All exponent vectors of total degree d in n variables.
inline std::vector<Monomial> monomials(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (n == 0) return out;
    rec(rec, 0, d);
    return out;
}

// Homogeneous of degree d with roughly `density` of the monomials present.
inline Polynomial random_homogeneous(Rng& rng, std::size_t n, int d, double density = 0.6) {
    Polynomial f(n);
    if (d < 0) return f;
    std::bernoulli_distribution keep(density);
    for (const auto& m : monomials(n, static_cast<unsigned>(d)))
        if (keep(rng)) f.add_term(m, random_rational(rng));
    return f;
}

inline Polynomial random_nonzero_homogeneous(Rng& rng, std::size_t n, int d) {
    for (;;) {
        Polynomial f = random_homogeneous(rng, n, d);
        if (!f.is_zero()) return f;
    }
}

// Dense-ish inhomogeneous polynomial of total degree <= d.
inline Polynomial random_polynomial(Rng& rng, std::size_t n, int d, double density = 0.4) {
    Polynomial f(n);
    for (int k = 0; k <= d; ++k) f += random_homogeneous(rng, n, k, density);
    return f;
}

inline LinearForm random_linear_form(Rng& rng, std::size_t n, long range = 3) {
    for (;;) {
        std::vector<Rational> c(n);
        for (auto& x : c) x = uniform(rng, -range, range);
        LinearForm f(c);
        if (!f.is_zero()) return f;
    }
}

// Random central arrangement of `size` pairwise non-proportional integer
// forms (proportionality tested by cross products, not by the library).
inline Arrangement random_arrangement(Rng& rng, std::size_t n, std::size_t size) {
    std::vector<LinearForm> forms;
    while (forms.size() < size) {
        LinearForm f = random_linear_form(rng, n);
        bool fresh = true;
        for (const auto& g : forms) {
            bool proportional = true;
            for (std::size_t i = 0; i < n && proportional; ++i)
                for (std::size_t j = i + 1; j < n && proportional; ++j)
                    if (f.coeffs[i] * g.coeffs[j] != f.coeffs[j] * g.coeffs[i]) proportional = false;
            if (proportional) fresh = false;
        }
        if (fresh) forms.push_back(f);
    }
    return Arrangement(n, forms);
}

// dim S_d in n variables.
inline std::size_t binom_dim(std::size_t n, long d) {
    if (d < 0) return 0;
    // C(d + n - 1, n - 1)
    std::size_t r = 1;
    for (std::size_t k = 1; k < n; ++k) r = r * (static_cast<std::size_t>(d) + k) / k;
    return r;
}

// --- independent oracles -------------------------------------------------------

// Leibniz expansion over all permutations.
inline Polynomial leibniz_det(const logder::PolyMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial total(n ? m[0][0].nvars() : 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial term = Polynomial::constant(total.nvars(), Rational(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Plain Gauss-Jordan on an augmented system; nullopt when inconsistent.
inline std::optional<std::vector<Rational>> gauss_solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
    return x;
}

inline Rational gauss_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

// Coefficients of a univariate polynomial in x1 obtained by evaluating the
// other variables at `point` (index 0 ignored). Highest degree first.
inline std::vector<Rational> specialize_x1(const Polynomial& f, const std::vector<Rational>& point) {
    const int deg = f.degree_in(0);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(deg, 0)) + 1);
    for (const auto& [m, coeff] : f.terms()) {
        Rational v = coeff;
        for (std::size_t j = 1; j < m.nvars(); ++j)
            for (unsigned e = 0; e < m.exps[j]; ++e) v *= point[j];
        c[static_cast<std::size_t>(deg) - m.exps[0]] += v;
    }
    return c;
}

// Sylvester resultant of two univariate coefficient lists.
inline Rational resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[k];
    return gauss_det(s);
}

// Sum_i c_i * theta_i computed componentwise here, not via logder::combine.
inline Derivation linear_combination(const std::vector<Polynomial>& cs, const std::vector<Derivation>& thetas) {
    const std::size_t n = thetas.front().nvars();
    std::vector<Polynomial> comps(n, Polynomial(n));
    for (std::size_t i = 0; i < thetas.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) comps[j] += cs[i] * thetas[i][j];
    return Derivation(comps);
}

}  // namespace testsupport
