#pragma once

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/errors.hpp"
#include "logder/poly.hpp"

#include <span>
#include <vector>

namespace logder {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Exact determinant. Cofactor expansion up to 4x4, fraction-free (Bareiss)
// elimination with exact division above that.
Polynomial determinant(const PolyMatrix& m);

// Row i is theta_i, column j is theta_i(x_j).
PolyMatrix derivation_matrix(std::span<const Derivation> rows);

// sigma(I) = sum_k (i_k - k) for 1-based increasing I with |I| = l, I in [p].
int sign_exponent(std::span<const std::size_t> rows, std::size_t ell, std::size_t p);

// Increasing l-subsets of {1..p} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t p, std::size_t ell);

struct MinorProfile {
    std::vector<std::size_t> rows;  // 1-based, increasing
    int sign_exponent = 0;
    Polynomial minor;               // (-1)^sigma det(M_I)
    Polynomial coefficient;         // minor / Q
};

// Every maximal minor of the p x l derivation matrix with its quotient by Q.
// Throws ContractViolation (NotLogarithmic / NotDivisibleByQ).
std::vector<MinorProfile> minor_profiles(std::span<const Derivation> rows, const Arrangement& a);

// For l+1 derivations: g_i = (-1)^i det(M_i) / Q, M_i omitting row i (1-based).
std::vector<Polynomial> spog_coefficients(std::span<const Derivation> rows, const Arrangement& a);

// True iff sum_i gs[i] * thetas[i] is the zero derivation.
bool verify_syzygy(std::span<const Polynomial> gs, std::span<const Derivation> thetas);

struct CramerRelation {
    std::vector<Polynomial> coefficients;  // f_1..f_l
    Polynomial frame_coefficient;          // g_{l+1} = (-1)^{l+1} det M[theta] / Q
};

// Coefficients f_i = Gamma_i / Q of the relation
//   f_1 theta_1 + ... + f_l theta_l + g_{l+1} eta = 0,
// with Gamma_i = (-1)^i det M[theta_1..^theta_i..theta_l, eta]. The relation
// is re-checked before returning. Throws DegenerateFrame when det M[theta] = 0.
CramerRelation cramer_coefficients(std::span<const Derivation> basis, const Derivation& eta,
                                   const Arrangement& a);

}  // namespace logder
