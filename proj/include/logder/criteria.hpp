#pragma once

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/errors.hpp"
#include "logder/oracle.hpp"
#include "logder/poly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace logder {

// --- Saito ------------------------------------------------------------------

struct SaitoCertificate {
    enum class Verdict { Free, NotConclusive };

    Verdict verdict = Verdict::NotConclusive;
    Polynomial determinant;           // det M[theta_1..theta_l]
    std::optional<Rational> constant; // c with det = c Q, when Free
    std::vector<int> exponents;       // deg theta_i, input order
    int degree_sum = 0;
    std::size_t arrangement_size = 0;
    bool degree_sum_matches = false;  // sum deg theta_i == |A|
};

// Free iff det M[theta] is a nonzero rational multiple of Q. Throws
// ContractViolation for non-homogeneous or non-logarithmic input.
SaitoCertificate check_saito(const Arrangement& a, std::span<const Derivation> thetas);

// --- divisibility tests -------------------------------------------------------

// True iff the gcd of all entries is a nonzero constant. Throws on all-zero.
bool primitivity(std::span<const Polynomial> fs);

struct ModuloDivisorReport {
    enum class Outcome { NoNontrivialDivisor, CommonDivisor, AllZeroResidues };

    Outcome outcome = Outcome::NoNontrivialDivisor;
    Polynomial divisor;              // monic gcd of the residues when CommonDivisor
    std::vector<Polynomial> residues;
    std::size_t pivot = 0;           // 0-based eliminated variable
};

// Whether the gs share a positive-degree h with every g in (h, f). Works in
// S/(f), a polynomial ring in l-1 variables: residues are taken with
// reduce_mod_linear and a nonconstant gcd of them is the witness.
ModuloDivisorReport common_divisor_modulo(std::span<const Polynomial> gs, const LinearForm& f);

// --- SPOG criterion -----------------------------------------------------------

struct SpogCertificate {
    enum class Verdict { Spog, SpogConditionalOnPd1, Fail };
    enum class FailReason { None, SaitoApplies, NoLinearCoefficient, ConstantOrZeroCoefficient, CommonDivisorModulo };

    Verdict verdict = Verdict::Fail;
    FailReason reason = FailReason::None;
    std::string detail;

    std::vector<Polynomial> coefficients;   // g_1..g_{l+1}
    std::vector<int> generator_degrees;
    std::optional<std::size_t> pivot;       // 1-based position of the linear coefficient
    std::optional<int> relation_degree;     // 1 + deg theta_pivot
    bool relation_verified = false;         // sum g_i theta_i == 0 re-checked
    bool relation_primitive = false;        // gcd(g_1..g_{l+1}) == 1
    std::optional<ModuloDivisorReport> divisor_report;
    std::optional<std::size_t> saito_omitted;   // 1-based row dropped for Saito
    std::optional<SaitoCertificate> saito;
    bool pd1_assumed = false;
    bool oracle_confirmed = false;
};

const char* to_string(SpogCertificate::Verdict v);
const char* to_string(SpogCertificate::FailReason r);
const char* to_string(SaitoCertificate::Verdict v);
const char* to_string(ModuloDivisorReport::Outcome o);

// Minor-based SPOG test for l+1 homogeneous logarithmic derivations. The
// pivot is the first index whose coefficient is a nonzero linear form and for
// which the remaining coefficients have positive degree and no common divisor
// modulo it. For l <= 3 a passing test is unconditional; for l > 3 it is
// conditional on pd D(A) <= 1 unless pd1_assumed.
SpogCertificate check_spog(const Arrangement& a, std::span<const Derivation> thetas, bool pd1_assumed = false);

// Bounded-degree confirmation from the graded oracle.
struct SpogOracleEvidence {
    unsigned max_degree = 0;
    GenerationReport generation;
    bool generates = false;
    // Per input index: whether dropping it still generates (must be false).
    std::vector<bool> proper_subset_generates;
    bool minimal = false;
    std::size_t relation_space_dim = 0;  // syzygies in the relation degree
    bool unique_relation = false;
    bool confirmed() const { return generates && minimal && unique_relation; }
};

SpogOracleEvidence oracle_verify_spog(const Arrangement& a, std::span<const Derivation> thetas, int relation_degree,
                                      unsigned d_max);

// Upgrades a conditional verdict when the oracle evidence is complete.
void apply_oracle_evidence(SpogCertificate& cert, const SpogOracleEvidence& evidence);

// Default degree bound for generation checks: max deg theta + |A|.
unsigned default_degree_bound(const Arrangement& a, std::span<const Derivation> thetas);

// --- necessity direction -----------------------------------------------------

struct NecessityReport {
    bool proportional = false;             // Delta_i = c f_i Q for one c
    std::optional<Rational> constant;
    std::optional<std::size_t> proportionality_failure;  // 1-based
    std::optional<ModuloDivisorReport> divisor_report;   // f_1..f_l modulo f_{l+1}
    bool divisor_ok = true;
    bool degree_law_ok = false;            // |A| = sum_{j != i} deg theta_j - deg f_i
    std::optional<std::size_t> degree_law_failure;       // 1-based
    bool passed() const { return proportional && divisor_ok && degree_law_ok; }
};

NecessityReport necessity_check(const Arrangement& a, std::span<const Derivation> thetas,
                                std::span<const Polynomial> relation);

// --- degree bookkeeping -------------------------------------------------------

// |A| == sum_j (-1)^j sum_i d_i^j over homological positions j.
bool betti_degree_check(std::size_t arrangement_size, const std::vector<std::vector<int>>& degrees);

// --- exploratory reports (never pass/fail gates) ------------------------------

struct ResolutionShapeReport {
    enum class Status { Consistent, Inconsistent, Vacuous, Inconclusive };
    Status status = Status::Inconclusive;
    std::vector<unsigned> generator_degrees;
    std::vector<unsigned> relation_degrees;
    // (relation degree, matched generator degree) pairs.
    std::vector<std::pair<unsigned, unsigned>> pairing;
    unsigned max_degree = 0;
};

const char* to_string(ResolutionShapeReport::Status s);

ResolutionShapeReport explore_conjecture_resolution_shape(std::size_t nvars, const ResolutionEvidence& evidence);

struct GenericIdealRow {
    unsigned degree = 0;
    std::size_t ideal_dim = 0;
    std::size_t predicted_dim = 0;
    bool agrees() const { return ideal_dim == predicted_dim; }
};

struct GenericIdealReport {
    long k = 0;  // (l - 1)(|A| - l - 1)
    unsigned max_degree = 0;
    std::size_t minor_count = 0;  // nonzero maximal minors
    std::vector<GenericIdealRow> rows;
};

// Compares dim J(G)_d, J(G) generated by the maximal minors of M[G], with
// dim (S_{>=k} Q)_d for d <= d_max. Throws if d_max < k + |A|.
GenericIdealReport explore_conjecture_generic_ideal(const Arrangement& a, std::span<const Derivation> gens,
                                                    unsigned d_max);

}  // namespace logder
