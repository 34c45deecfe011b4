#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace logder {

// An input broke the contract of a minor/criterion computation: a derivation
// outside D(A), a non-homogeneous input, or a rank-deficient frame. Indices
// are 1-based.
class ContractViolation : public std::runtime_error {
public:
    enum class Kind { NotLogarithmic, NonHomogeneous, NotDivisibleByQ, DegenerateFrame, AllMinorsZero, WrongCount };

    ContractViolation(Kind kind, std::vector<std::size_t> indices, const std::string& what)
        : std::runtime_error(what), kind_(kind), indices_(std::move(indices)) {}

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& indices() const { return indices_; }

private:
    Kind kind_;
    std::vector<std::size_t> indices_;
};

inline const char* to_string(ContractViolation::Kind k) {
    switch (k) {
        case ContractViolation::Kind::NotLogarithmic: return "NotLogarithmic";
        case ContractViolation::Kind::NonHomogeneous: return "NonHomogeneous";
        case ContractViolation::Kind::NotDivisibleByQ: return "NotDivisibleByQ";
        case ContractViolation::Kind::DegenerateFrame: return "DegenerateFrame";
        case ContractViolation::Kind::AllMinorsZero: return "AllMinorsZero";
        case ContractViolation::Kind::WrongCount: return "WrongCount";
    }
    return "Unknown";
}

}  // namespace logder
