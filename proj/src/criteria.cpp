#include "logder/criteria.hpp"

#include "logder/minors.hpp"

#include <algorithm>
#include <map>

namespace logder {

namespace {

void require_homogeneous(std::span<const Derivation> thetas) {
    for (std::size_t i = 0; i < thetas.size(); ++i)
        if (!thetas[i].is_homogeneous())
            throw ContractViolation(ContractViolation::Kind::NonHomogeneous, {i + 1},
                                    "derivation " + std::to_string(i + 1) + " is not homogeneous");
}

void require_logarithmic(const Arrangement& a, std::span<const Derivation> thetas) {
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (thetas[i].nvars() != a.nvars())
            throw std::invalid_argument("derivation " + std::to_string(i + 1) + " has wrong variable count");
        const auto check = is_logarithmic(thetas[i], a);
        if (!check.logarithmic)
            throw ContractViolation(ContractViolation::Kind::NotLogarithmic, {i + 1, *check.witness + 1},
                                    "derivation " + std::to_string(i + 1) + " is not logarithmic along hyperplane " +
                                        std::to_string(*check.witness + 1));
    }
}

std::vector<int> degrees_of(std::span<const Derivation> thetas) {
    std::vector<int> out;
    for (const auto& t : thetas) out.push_back(t.degree());
    return out;
}

bool is_linear_form(const Polynomial& g) { return !g.is_zero() && g.is_homogeneous() && g.degree() == 1; }

}  // namespace

const char* to_string(SpogCertificate::Verdict v) {
    switch (v) {
        case SpogCertificate::Verdict::Spog: return "SPOG";
        case SpogCertificate::Verdict::SpogConditionalOnPd1: return "SPOGConditionalOnPd1";
        case SpogCertificate::Verdict::Fail: return "Fail";
    }
    return "?";
}

const char* to_string(SpogCertificate::FailReason r) {
    switch (r) {
        case SpogCertificate::FailReason::None: return "None";
        case SpogCertificate::FailReason::SaitoApplies: return "SaitoApplies";
        case SpogCertificate::FailReason::NoLinearCoefficient: return "NoLinearCoefficient";
        case SpogCertificate::FailReason::ConstantOrZeroCoefficient: return "ConstantOrZeroCoefficient";
        case SpogCertificate::FailReason::CommonDivisorModulo: return "CommonDivisorModulo";
    }
    return "?";
}

const char* to_string(SaitoCertificate::Verdict v) {
    return v == SaitoCertificate::Verdict::Free ? "Free" : "NotConclusive";
}

const char* to_string(ModuloDivisorReport::Outcome o) {
    switch (o) {
        case ModuloDivisorReport::Outcome::NoNontrivialDivisor: return "NoNontrivialDivisor";
        case ModuloDivisorReport::Outcome::CommonDivisor: return "CommonDivisor";
        case ModuloDivisorReport::Outcome::AllZeroResidues: return "AllZeroResidues";
    }
    return "?";
}

const char* to_string(ResolutionShapeReport::Status s) {
    switch (s) {
        case ResolutionShapeReport::Status::Consistent: return "consistent";
        case ResolutionShapeReport::Status::Inconsistent: return "inconsistent";
        case ResolutionShapeReport::Status::Vacuous: return "vacuous";
        case ResolutionShapeReport::Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

SaitoCertificate check_saito(const Arrangement& a, std::span<const Derivation> thetas) {
    a.validate();
    if (thetas.size() != a.nvars())
        throw ContractViolation(ContractViolation::Kind::WrongCount, {thetas.size()},
                                "Saito's criterion needs exactly l = " + std::to_string(a.nvars()) + " derivations");
    require_homogeneous(thetas);
    require_logarithmic(a, thetas);

    SaitoCertificate cert;
    cert.exponents = degrees_of(thetas);
    for (int e : cert.exponents) cert.degree_sum += std::max(e, 0);
    cert.arrangement_size = a.size();
    cert.degree_sum_matches = cert.degree_sum == static_cast<int>(a.size());
    cert.determinant = determinant(derivation_matrix(thetas));

    if (!cert.determinant.is_zero()) {
        const auto quotient = exact_divide(cert.determinant, a.defining_polynomial());
        if (quotient && quotient->is_constant()) {
            cert.verdict = SaitoCertificate::Verdict::Free;
            cert.constant = quotient->constant_value();
        }
    }
    return cert;
}

bool primitivity(std::span<const Polynomial> fs) {
    if (std::all_of(fs.begin(), fs.end(), [](const Polynomial& f) { return f.is_zero(); }))
        throw std::invalid_argument("primitivity of an all-zero list");
    const Polynomial g = gcd(fs);
    return g.is_constant();
}

ModuloDivisorReport common_divisor_modulo(std::span<const Polynomial> gs, const LinearForm& f) {
    if (f.is_zero()) throw std::invalid_argument("common_divisor_modulo: zero linear form");
    ModuloDivisorReport report;
    report.pivot = *f.default_pivot();
    for (const auto& g : gs) report.residues.push_back(reduce_mod_linear(g, f, report.pivot));
    if (std::all_of(report.residues.begin(), report.residues.end(), [](const Polynomial& r) { return r.is_zero(); })) {
        report.outcome = ModuloDivisorReport::Outcome::AllZeroResidues;
        report.divisor = f.to_polynomial();
        return report;
    }
    const Polynomial g = gcd(report.residues);
    if (g.is_constant()) {
        report.outcome = ModuloDivisorReport::Outcome::NoNontrivialDivisor;
        report.divisor = Polynomial::constant(f.nvars(), 1);
    } else {
        report.outcome = ModuloDivisorReport::Outcome::CommonDivisor;
        report.divisor = g;
    }
    return report;
}

SpogCertificate check_spog(const Arrangement& a, std::span<const Derivation> thetas, bool pd1_assumed) {
    a.validate();
    const std::size_t ell = a.nvars();
    if (thetas.size() != ell + 1)
        throw ContractViolation(ContractViolation::Kind::WrongCount, {thetas.size()},
                                "the SPOG criterion needs exactly l+1 = " + std::to_string(ell + 1) + " derivations");
    require_homogeneous(thetas);
    require_logarithmic(a, thetas);

    SpogCertificate cert;
    cert.pd1_assumed = pd1_assumed;
    cert.generator_degrees = degrees_of(thetas);
    cert.coefficients = spog_coefficients(thetas, a);
    const auto& gs = cert.coefficients;
    if (std::all_of(gs.begin(), gs.end(), [](const Polynomial& g) { return g.is_zero(); }))
        throw ContractViolation(ContractViolation::Kind::AllMinorsZero, {},
                                "every maximal minor vanishes: the derivation matrix has rank < l");
    cert.relation_verified = verify_syzygy(gs, thetas);
    cert.relation_primitive = primitivity(gs);

    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (!gs[i].is_zero() && gs[i].is_constant()) {
            cert.reason = SpogCertificate::FailReason::SaitoApplies;
            cert.saito_omitted = i + 1;
            std::vector<Derivation> rest;
            for (std::size_t j = 0; j < thetas.size(); ++j)
                if (j != i) rest.push_back(thetas[j]);
            cert.saito = check_saito(a, rest);
            cert.detail = "g_" + std::to_string(i + 1) + " is a nonzero constant; the other " + std::to_string(ell) +
                          " derivations are tested by Saito's criterion";
            return cert;
        }
    }

    bool any_candidate = false;
    for (std::size_t p = 0; p < gs.size(); ++p) {
        if (!is_linear_form(gs[p])) continue;
        any_candidate = true;
        std::vector<Polynomial> others;
        bool positive = true;
        for (std::size_t j = 0; j < gs.size(); ++j) {
            if (j == p) continue;
            // S_{>0} is the irrelevant ideal: zero is allowed, constants are not.
            if (!gs[j].is_zero() && (gs[j].degree() <= 0 || !gs[j].is_homogeneous())) positive = false;
            others.push_back(gs[j]);
        }
        if (!positive) {
            cert.reason = SpogCertificate::FailReason::ConstantOrZeroCoefficient;
            cert.detail = "pivot " + std::to_string(p + 1) + ": some other coefficient lies outside S_{>0}";
            continue;
        }
        auto report = common_divisor_modulo(others, LinearForm::from_polynomial(gs[p]));
        if (report.outcome != ModuloDivisorReport::Outcome::NoNontrivialDivisor) {
            cert.reason = SpogCertificate::FailReason::CommonDivisorModulo;
            cert.detail = "pivot " + std::to_string(p + 1) + ": " + to_string(report.outcome) +
                          (report.outcome == ModuloDivisorReport::Outcome::CommonDivisor
                               ? " " + format(report.divisor)
                               : std::string());
            cert.divisor_report = std::move(report);
            continue;
        }
        cert.pivot = p + 1;
        cert.relation_degree = 1 + thetas[p].degree();
        cert.divisor_report = std::move(report);
        cert.reason = SpogCertificate::FailReason::None;
        const bool unconditional = ell <= 3 || pd1_assumed;
        cert.verdict = unconditional ? SpogCertificate::Verdict::Spog : SpogCertificate::Verdict::SpogConditionalOnPd1;
        cert.detail = ell <= 3 ? "l <= 3: pd D(A) <= 1 holds automatically"
                               : (pd1_assumed ? "pd D(A) <= 1 assumed by the caller"
                                              : "valid only if pd D(A) <= 1");
        return cert;
    }
    if (!any_candidate) {
        cert.reason = SpogCertificate::FailReason::NoLinearCoefficient;
        cert.detail = "no coefficient g_i is a nonzero linear form";
    }
    return cert;
}

unsigned default_degree_bound(const Arrangement& a, std::span<const Derivation> thetas) {
    int max_deg = 0;
    for (const auto& t : thetas) max_deg = std::max(max_deg, t.degree());
    return static_cast<unsigned>(max_deg) + static_cast<unsigned>(a.size());
}

SpogOracleEvidence oracle_verify_spog(const Arrangement& a, std::span<const Derivation> thetas, int relation_degree,
                                      unsigned d_max) {
    GradedOracle oracle(a);
    SpogOracleEvidence ev;
    ev.max_degree = d_max;
    ev.generation = oracle.submodule_generates(thetas, d_max);
    ev.generates = ev.generation.generates;
    ev.minimal = true;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        std::vector<Derivation> rest;
        for (std::size_t j = 0; j < thetas.size(); ++j)
            if (j != i) rest.push_back(thetas[j]);
        const bool still = oracle.submodule_generates(rest, d_max).generates;
        ev.proper_subset_generates.push_back(still);
        if (still) ev.minimal = false;
    }
    ev.unique_relation = relation_degree >= 0;
    for (int e = 0; e <= relation_degree; ++e) {
        const std::size_t dim = syzygy_space(thetas, static_cast<unsigned>(e)).size();
        if (e < relation_degree && dim != 0) ev.unique_relation = false;
        if (e == relation_degree) ev.relation_space_dim = dim;
    }
    if (ev.relation_space_dim != 1) ev.unique_relation = false;
    return ev;
}

void apply_oracle_evidence(SpogCertificate& cert, const SpogOracleEvidence& evidence) {
    cert.oracle_confirmed = evidence.confirmed();
    if (cert.verdict == SpogCertificate::Verdict::SpogConditionalOnPd1 && cert.oracle_confirmed) {
        cert.verdict = SpogCertificate::Verdict::Spog;
        cert.detail = "generation, minimality and relation uniqueness confirmed by the graded oracle up to degree " +
                      std::to_string(evidence.max_degree);
    }
}

NecessityReport necessity_check(const Arrangement& a, std::span<const Derivation> thetas,
                                std::span<const Polynomial> relation) {
    const std::size_t ell = a.nvars();
    if (relation.size() != ell + 1 || thetas.size() != ell + 1)
        throw std::invalid_argument("necessity_check needs l+1 derivations and l+1 relation coefficients");
    if (std::all_of(relation.begin(), relation.end(), [](const Polynomial& f) { return f.is_zero(); }))
        throw std::invalid_argument("necessity_check: relation is identically zero");
    require_homogeneous(thetas);

    NecessityReport report;
    const auto gs = spog_coefficients(thetas, a);  // g_i = Delta_i / Q

    report.proportional = true;
    for (std::size_t i = 0; i <= ell; ++i) {
        bool ok = true;
        if (relation[i].is_zero()) {
            ok = gs[i].is_zero();
        } else {
            const auto ratio = exact_divide(gs[i], relation[i]);
            if (!ratio || ratio->is_zero() || !ratio->is_constant()) {
                ok = false;
            } else if (!report.constant) {
                report.constant = ratio->constant_value();
            } else {
                ok = *report.constant == ratio->constant_value();
            }
        }
        if (!ok) {
            report.proportional = false;
            report.proportionality_failure = i + 1;
            report.constant.reset();
            break;
        }
    }

    const Polynomial& last = relation[ell];
    if (!last.is_zero() && is_linear_form(last)) {
        std::vector<Polynomial> head(relation.begin(), relation.begin() + static_cast<long>(ell));
        report.divisor_report = common_divisor_modulo(head, LinearForm::from_polynomial(last));
        report.divisor_ok = report.divisor_report->outcome == ModuloDivisorReport::Outcome::NoNontrivialDivisor;
    }

    int total = 0;
    for (const auto& t : thetas) total += t.degree();
    report.degree_law_ok = true;
    for (std::size_t i = 0; i <= ell; ++i) {
        if (relation[i].is_zero()) continue;
        const bool ok = relation[i].is_homogeneous() &&
                        static_cast<int>(a.size()) == total - thetas[i].degree() - relation[i].degree();
        if (!ok) {
            report.degree_law_ok = false;
            report.degree_law_failure = i + 1;
            break;
        }
    }
    return report;
}

bool betti_degree_check(std::size_t arrangement_size, const std::vector<std::vector<int>>& degrees) {
    long total = 0;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        long s = 0;
        for (int d : degrees[j]) s += d;
        total += (j % 2 ? -s : s);
    }
    return total == static_cast<long>(arrangement_size);
}

ResolutionShapeReport explore_conjecture_resolution_shape(std::size_t nvars, const ResolutionEvidence& evidence) {
    ResolutionShapeReport report;
    report.generator_degrees = evidence.generator_degrees;
    report.relation_degrees = evidence.relation_degrees;
    report.max_degree = evidence.max_degree;
    if (!evidence.pd_at_most_one) {
        report.status = ResolutionShapeReport::Status::Inconclusive;
        return report;
    }
    if (evidence.relation_degrees.empty()) {
        report.status = ResolutionShapeReport::Status::Vacuous;
        return report;
    }
    // Each relation of degree e needs its own generator of degree e - 1; the
    // number of relations must be p - l.
    std::map<unsigned, std::size_t> available;
    for (unsigned d : evidence.generator_degrees) ++available[d];
    bool ok = evidence.relation_degrees.size() + nvars == evidence.generator_degrees.size();
    for (unsigned e : evidence.relation_degrees) {
        if (e == 0 || available[e - 1] == 0) {
            ok = false;
            continue;
        }
        --available[e - 1];
        report.pairing.emplace_back(e, e - 1);
    }
    report.status = ok ? ResolutionShapeReport::Status::Consistent : ResolutionShapeReport::Status::Inconsistent;
    return report;
}

GenericIdealReport explore_conjecture_generic_ideal(const Arrangement& a, std::span<const Derivation> gens,
                                                    unsigned d_max) {
    const long ell = static_cast<long>(a.nvars());
    const long size = static_cast<long>(a.size());
    GenericIdealReport report;
    report.k = (ell - 1) * (size - ell - 1);
    report.max_degree = d_max;
    const long k_eff = std::max(report.k, 0L);
    if (static_cast<long>(d_max) < k_eff + size)
        throw std::invalid_argument("d_max must be at least k + |A| = " + std::to_string(k_eff + size));
    require_logarithmic(a, gens);

    std::vector<Polynomial> minors;
    if (gens.size() >= a.nvars()) {
        const PolyMatrix m = derivation_matrix(gens);
        for (const auto& subset : subsets(gens.size(), a.nvars())) {
            PolyMatrix sub;
            for (auto r : subset) sub.push_back(m[r - 1]);
            Polynomial det = determinant(sub);
            if (!det.is_zero()) minors.push_back(std::move(det));
        }
    }
    report.minor_count = minors.size();
    for (unsigned d = 0; d <= d_max; ++d) {
        GenericIdealRow row;
        row.degree = d;
        row.ideal_dim = ideal_graded_dimension(minors, a.nvars(), d);
        const long shift = static_cast<long>(d) - size;
        row.predicted_dim = shift >= k_eff ? dim_polynomials(a.nvars(), static_cast<int>(shift)) : 0;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace logder
