#pragma once

#include "logder/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logder {

// Malformed arrangement or derivation file; line is 1-based (0 if unknown).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Raised by Arrangement::validate. Indices are 1-based, as in every report.
class ValidationError : public std::runtime_error {
public:
    enum class Kind { ZeroForm, ProportionalPair, WrongVariableCount, TooFewVariables };

    ValidationError(Kind kind, std::size_t first, std::size_t second, const std::string& what)
        : std::runtime_error(what), kind_(kind), first_(first), second_(second) {}

    Kind kind() const { return kind_; }
    std::size_t first() const { return first_; }
    std::size_t second() const { return second_; }

private:
    Kind kind_;
    std::size_t first_;
    std::size_t second_;
};

// Central arrangement given by its defining linear forms, kept in input order.
class Arrangement {
public:
    Arrangement() = default;
    Arrangement(std::size_t nvars, std::vector<LinearForm> hyperplanes)
        : nvars_(nvars), hyperplanes_(std::move(hyperplanes)) {}

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const std::vector<LinearForm>& hyperplanes() const { return hyperplanes_; }
    const LinearForm& operator[](std::size_t i) const { return hyperplanes_[i]; }

    // Throws ValidationError: every form nonzero, no two proportional.
    void validate() const;

    // Product of the forms, homogeneous of degree |A|.
    Polynomial defining_polynomial() const;

    // Rank of the coefficient vectors equals the number of variables.
    bool is_essential() const;

private:
    std::size_t nvars_ = 0;
    std::vector<LinearForm> hyperplanes_;
};

// Line-oriented text: "vars: l" header, then one form per line, '#' comments.
Arrangement parse_arrangement(std::string_view text);
std::string format_arrangement(const Arrangement& a);

Arrangement read_arrangement_file(const std::string& path);

}  // namespace logder
