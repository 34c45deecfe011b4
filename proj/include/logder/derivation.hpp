#pragma once

#include "logder/arrangement.hpp"
#include "logder/poly.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logder {

// Polynomial vector field sum_j theta(x_j) d/dx_j; component j is theta(x_j).
class Derivation {
public:
    Derivation() = default;
    explicit Derivation(std::size_t nvars);
    explicit Derivation(std::vector<Polynomial> components);

    std::size_t nvars() const { return components_.size(); }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& operator[](std::size_t j) const { return components_[j]; }

    bool is_zero() const;
    // Every nonzero component homogeneous of one common degree.
    bool is_homogeneous() const;
    // Polynomial degree of the coefficients (Euler derivation has degree 1);
    // -1 for the zero derivation. Meaningful for homogeneous derivations.
    int degree() const;

    Derivation& operator+=(const Derivation& other);
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator*(const Polynomial& f, const Derivation& d);
    friend Derivation operator*(const Rational& c, const Derivation& d);
    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    std::vector<Polynomial> components_;
};

// theta(f) = sum_j df/dx_j * theta(x_j).
Polynomial apply(const Derivation& theta, const Polynomial& f);

struct LogarithmicCheck {
    bool logarithmic = true;
    // First offending hyperplane (0-based) when not logarithmic.
    std::optional<std::size_t> witness;
};

LogarithmicCheck is_logarithmic(const Derivation& theta, const Arrangement& a);

Derivation euler(std::size_t nvars);

// Coordinate derivation f * d/dx_j.
Derivation coordinate(std::size_t nvars, std::size_t j, const Polynomial& f);

// sum_i coeffs[i] * thetas[i].
Derivation combine(std::span<const Polynomial> coeffs, std::span<const Derivation> thetas);

// "vars: l" header, then blocks of l lines "dK: <poly>" separated by blank lines.
std::vector<Derivation> parse_derivations(std::string_view text);
std::string format_derivations(std::span<const Derivation> thetas);
std::vector<Derivation> read_derivations_file(const std::string& path);

}  // namespace logder
