#include "logder/linalg.hpp"

#include <stdexcept>

namespace logder {

namespace {

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

void normalize_leading(RationalVector& v) {
    for (const auto& x : v) {
        if (!is_zero(x)) {
            const Rational inv = Rational(1) / x;
            for (auto& y : v) y *= inv;
            return;
        }
    }
}

}  // namespace

void RationalMatrix::append_row(std::span<const Rational> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            if (best == m.rows() || bit_size(m(i, c)) < bit_size(m(best, c))) best = i;
        }
        if (best == m.rows()) continue;
        if (best != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(best, k));
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Rational factor = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!is_zero(m(r, k))) m(i, k) -= factor * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

std::vector<RationalVector> kernel(RationalMatrix m) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        normalize_leading(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        const Rational inv = Rational(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const Rational factor = m(i, c) * inv;
            for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
        }
    }
    return det;
}

std::size_t EchelonSpan::reduce(RationalVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (is_zero(v[p])) continue;
        const Rational factor = v[p];
        const auto& row = rows_[k];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!is_zero(row[j])) v[j] -= factor * row[j];
    }
    for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(v[j])) return j;
    return dim_;
}

bool EchelonSpan::insert(RationalVector v) {
    const std::size_t lead = reduce(v);
    if (lead == dim_) return false;
    const Rational inv = Rational(1) / v[lead];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

bool EchelonSpan::contains(RationalVector v) const { return reduce(v) == dim_; }

}  // namespace logder
