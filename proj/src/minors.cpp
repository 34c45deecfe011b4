#include "logder/minors.hpp"

#include <stdexcept>

namespace logder {

namespace {

std::string join_indices(std::span<const std::size_t> rows) {
    std::string s = "{";
    for (std::size_t k = 0; k < rows.size(); ++k) s += (k ? "," : "") + std::to_string(rows[k]);
    return s + "}";
}

void require_square(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of non-square matrix");
}

Polynomial cofactor_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det(m[0][0].nvars());
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMatrix sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * cofactor_determinant(sub);
        if (c % 2) det -= term;
        else det += term;
    }
    return det;
}

Polynomial bareiss_determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    const std::size_t nvars = m[0][0].nvars();
    Polynomial prev = Polynomial::constant(nvars, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Polynomial(nvars);
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw std::logic_error("Bareiss step was not exact");
                m[i][j] = std::move(*q);
            }
            m[i][k] = Polynomial(nvars);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return negate ? -det : det;
}

void require_logarithmic(std::span<const Derivation> rows, const Arrangement& a) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].nvars() != a.nvars())
            throw std::invalid_argument("derivation " + std::to_string(i + 1) + " has wrong variable count");
        const auto check = is_logarithmic(rows[i], a);
        if (!check.logarithmic)
            throw ContractViolation(ContractViolation::Kind::NotLogarithmic, {i + 1, *check.witness + 1},
                                    "derivation " + std::to_string(i + 1) + " is not logarithmic along hyperplane " +
                                        std::to_string(*check.witness + 1));
    }
}

Polynomial divide_by_q(const Polynomial& minor, const Polynomial& q, std::span<const std::size_t> rows) {
    auto g = exact_divide(minor, q);
    if (!g)
        throw ContractViolation(ContractViolation::Kind::NotDivisibleByQ, {rows.begin(), rows.end()},
                                "Q does not divide the minor on rows " + join_indices(rows));
    return *std::move(g);
}

PolyMatrix select_rows(const PolyMatrix& m, std::span<const std::size_t> rows) {
    PolyMatrix out;
    for (auto r : rows) out.push_back(m[r - 1]);
    return out;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.empty()) throw std::invalid_argument("determinant of empty matrix");
    require_square(m);
    if (m.size() <= 4) return cofactor_determinant(m);
    return bareiss_determinant(m);
}

PolyMatrix derivation_matrix(std::span<const Derivation> rows) {
    PolyMatrix m;
    for (const auto& theta : rows) m.push_back(theta.components());
    return m;
}

int sign_exponent(std::span<const std::size_t> rows, std::size_t ell, std::size_t p) {
    if (rows.size() != ell) throw std::invalid_argument("index set must have exactly l elements");
    int sigma = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] < 1 || rows[k] > p) throw std::invalid_argument("row index out of range");
        if (k > 0 && rows[k] <= rows[k - 1]) throw std::invalid_argument("index set must be increasing");
        sigma += static_cast<int>(rows[k]) - static_cast<int>(k + 1);
    }
    return sigma;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t p, std::size_t ell) {
    std::vector<std::vector<std::size_t>> out;
    if (ell > p) return out;
    std::vector<std::size_t> cur(ell);
    for (std::size_t k = 0; k < ell; ++k) cur[k] = k + 1;
    for (;;) {
        out.push_back(cur);
        std::size_t k = ell;
        while (k > 0 && cur[k - 1] == p - ell + k) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t j = k; j < ell; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<MinorProfile> minor_profiles(std::span<const Derivation> rows, const Arrangement& a) {
    const std::size_t ell = a.nvars();
    if (rows.size() < ell)
        throw ContractViolation(ContractViolation::Kind::WrongCount, {rows.size()},
                                "need at least l = " + std::to_string(ell) + " derivations");
    require_logarithmic(rows, a);
    const Polynomial q = a.defining_polynomial();
    const PolyMatrix m = derivation_matrix(rows);
    std::vector<MinorProfile> out;
    for (auto& subset : subsets(rows.size(), ell)) {
        MinorProfile prof;
        prof.sign_exponent = sign_exponent(subset, ell, rows.size());
        prof.minor = determinant(select_rows(m, subset));
        if (prof.sign_exponent % 2) prof.minor = -prof.minor;
        prof.coefficient = divide_by_q(prof.minor, q, subset);
        prof.rows = std::move(subset);
        out.push_back(std::move(prof));
    }
    return out;
}

std::vector<Polynomial> spog_coefficients(std::span<const Derivation> rows, const Arrangement& a) {
    const std::size_t ell = a.nvars();
    if (rows.size() != ell + 1)
        throw ContractViolation(ContractViolation::Kind::WrongCount, {rows.size()},
                                "need exactly l+1 = " + std::to_string(ell + 1) + " derivations");
    require_logarithmic(rows, a);
    const Polynomial q = a.defining_polynomial();
    const PolyMatrix m = derivation_matrix(rows);
    std::vector<Polynomial> gs;
    for (std::size_t i = 1; i <= ell + 1; ++i) {
        std::vector<std::size_t> kept;
        for (std::size_t r = 1; r <= ell + 1; ++r)
            if (r != i) kept.push_back(r);
        Polynomial delta = determinant(select_rows(m, kept));
        if (i % 2) delta = -delta;
        gs.push_back(divide_by_q(delta, q, kept));
    }
    return gs;
}

bool verify_syzygy(std::span<const Polynomial> gs, std::span<const Derivation> thetas) {
    if (gs.size() != thetas.size()) throw std::invalid_argument("verify_syzygy: length mismatch");
    return combine(gs, thetas).is_zero();
}

CramerRelation cramer_coefficients(std::span<const Derivation> basis, const Derivation& eta, const Arrangement& a) {
    const std::size_t ell = a.nvars();
    if (basis.size() != ell)
        throw ContractViolation(ContractViolation::Kind::WrongCount, {basis.size()},
                                "need exactly l = " + std::to_string(ell) + " frame derivations");
    std::vector<Derivation> all(basis.begin(), basis.end());
    all.push_back(eta);
    require_logarithmic(all, a);

    const Polynomial q = a.defining_polynomial();
    const PolyMatrix m = derivation_matrix(all);
    std::vector<std::size_t> frame_rows;
    for (std::size_t r = 1; r <= ell; ++r) frame_rows.push_back(r);
    const Polynomial frame_det = determinant(select_rows(m, frame_rows));
    if (frame_det.is_zero())
        throw ContractViolation(ContractViolation::Kind::DegenerateFrame, {},
                                "frame derivations have zero determinant");

    CramerRelation rel;
    rel.frame_coefficient = divide_by_q(ell % 2 ? frame_det : -frame_det, q, frame_rows);
    for (std::size_t i = 1; i <= ell; ++i) {
        std::vector<std::size_t> kept;
        for (std::size_t r = 1; r <= ell + 1; ++r)
            if (r != i) kept.push_back(r);
        Polynomial gamma = determinant(select_rows(m, kept));
        if (i % 2) gamma = -gamma;
        rel.coefficients.push_back(divide_by_q(gamma, q, kept));
    }

    std::vector<Polynomial> coeffs = rel.coefficients;
    coeffs.push_back(rel.frame_coefficient);
    if (!verify_syzygy(coeffs, all)) throw std::logic_error("Cramer relation failed its zero check");
    return rel;
}

}  // namespace logder
