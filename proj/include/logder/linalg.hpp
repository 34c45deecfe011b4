#pragma once

#include "logder/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace logder {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Rational> values);

    static RationalMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns. Pivots are
// chosen per column as the candidate with the smallest numerator+denominator
// size to limit coefficient growth.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Null-space basis. Each vector is scaled so its first nonzero coordinate is 1;
// the dimension is cols - rank.
std::vector<RationalVector> kernel(RationalMatrix m);

// Some x with m x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b);

Rational determinant(RationalMatrix m);

// Incrementally built row space; insert() reports whether the rank grew.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current basis; true if v was outside the span
    // (and has been added).
    bool insert(RationalVector v);
    bool contains(RationalVector v) const;

private:
    // Reduces v in place and returns the index of its first nonzero entry,
    // or dim_ when v reduces to zero.
    std::size_t reduce(RationalVector& v) const;

    std::size_t dim_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace logder
