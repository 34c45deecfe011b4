#pragma once

#include "logder/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logder {

// Exponent vector of a monomial in x_1..x_n. Variables are 0-based in the C++
// API and 1-based in every text format.
struct Monomial {
    std::vector<unsigned> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }
    unsigned degree() const;
    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);

// Graded lexicographic order with x_1 > x_2 > ... ; "greater" sorts leading
// terms first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Every monomial of total degree d in n variables, in descending grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t j);
    static Polynomial term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; meaningful when is_constant().
    Rational constant_value() const;
    // Total degree, -1 for zero.
    int degree() const;
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    bool contains_variable(std::size_t var) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    Rational coefficient(const Monomial& m) const;

    // Adds c*m in place; prunes zeros.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
    friend Polynomial operator-(Polynomial f) { return f *= Rational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

// A homogeneous degree-one form sum c_j x_j.
struct LinearForm {
    std::vector<Rational> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

    std::size_t nvars() const { return coeffs.size(); }
    bool is_zero() const;
    Polynomial to_polynomial() const;
    // Highest-index variable with a nonzero coefficient.
    std::optional<std::size_t> default_pivot() const;

    // Throws std::invalid_argument unless p is zero or homogeneous of degree 1.
    static LinearForm from_polynomial(const Polynomial& p);

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

Polynomial pow(const Polynomial& f, unsigned k);

// q with f = q*g, or nullopt when g does not divide f. Throws
// std::domain_error when g is zero.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

// d f / d x_j (0-based j).
Polynomial partial_derivative(const Polynomial& f, std::size_t j);

// Image of f in S/(g): substitutes x_pivot := -(g - c x_pivot)/c. The pivot
// defaults to g.default_pivot(). Throws std::domain_error on a zero pivot
// coefficient.
Polynomial reduce_mod_linear(const Polynomial& f, const LinearForm& g,
                             std::optional<std::size_t> pivot = std::nullopt);

// Substitutes a polynomial for one variable.
Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& value);

// Evaluates f at a rational point.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

struct ContentPrimitive {
    Polynomial content;
    Polynomial primitive;
};

// Content with respect to x_main (normalized gcd of the x_main-coefficients)
// and the corresponding primitive part. Throws on zero input.
ContentPrimitive content_primitive(const Polynomial& f, std::size_t main);

// Scales f so its grlex leading coefficient is 1; zero stays zero.
Polynomial make_monic(const Polynomial& f);

// Normalized (monic) greatest common divisor, computed recursively with a
// subresultant remainder sequence in a main variable.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial gcd(std::span<const Polynomial> fs);

// True when a and b differ by a nonzero rational factor.
bool are_associates(const Polynomial& a, const Polynomial& b);

// --- text form --------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar: terms joined by + / -, each an optional rational coefficient and
// '*'-separated powers xK^E. Aliases x, y, z stand for x1, x2, x3 when
// nvars <= 3. Whitespace is ignored. Positions in errors are 0-based.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

// Canonical text: descending grlex, e.g. "x1^2 - 2/3*x2*x3".
std::string format(const Polynomial& f);

}  // namespace logder
