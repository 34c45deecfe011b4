#include "logder/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace logder {

std::size_t dim_polynomials(std::size_t nvars, int d) {
    if (d < 0) return 0;
    if (nvars == 0) return d == 0 ? 1 : 0;
    // C(d + n - 1, n - 1)
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(d) + nvars - 1, nvars - 1);
    return c.get_ui();
}

// --- DegreeCoordinates ------------------------------------------------------

DegreeCoordinates::DegreeCoordinates(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t DegreeCoordinates::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("monomial has the wrong degree");
    return it->second;
}

RationalVector DegreeCoordinates::polynomial_vector(const Polynomial& f) const {
    RationalVector v(monomials_.size());
    for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
    return v;
}

Polynomial DegreeCoordinates::polynomial_from(std::span<const Rational> v) const {
    Polynomial f(nvars_);
    for (std::size_t i = 0; i < monomials_.size(); ++i) f.add_term(monomials_[i], v[i]);
    return f;
}

RationalVector DegreeCoordinates::derivation_vector(const Derivation& theta) const {
    RationalVector v(derivation_dim());
    const std::size_t n = monomials_.size();
    for (std::size_t j = 0; j < nvars_; ++j)
        for (const auto& [m, c] : theta[j].terms()) v[j * n + index_of(m)] = c;
    return v;
}

Derivation DegreeCoordinates::derivation_from(std::span<const Rational> v) const {
    std::vector<Polynomial> comps;
    const std::size_t n = monomials_.size();
    for (std::size_t j = 0; j < nvars_; ++j) comps.push_back(polynomial_from(v.subspan(j * n, n)));
    return Derivation(std::move(comps));
}

// --- GradedOracle -----------------------------------------------------------

GradedOracle::GradedOracle(Arrangement a) : arr_(std::move(a)) { arr_.validate(); }

const DegreeCoordinates& GradedOracle::coords(unsigned d) {
    auto it = coords_.find(d);
    if (it == coords_.end()) it = coords_.emplace(d, DegreeCoordinates(arr_.nvars(), d)).first;
    return it->second;
}

const GradedBasis& GradedOracle::derivation_space(unsigned d) {
    if (auto it = spaces_.find(d); it != spaces_.end()) return it->second;
    const std::size_t ell = arr_.nvars();
    const DegreeCoordinates& cd = coords(d);
    const std::size_t n = cd.monomial_count();

    RationalMatrix conditions(0, cd.derivation_dim());
    for (const auto& h : arr_.hyperplanes()) {
        // theta(alpha) = sum_j a_j theta_j; its class modulo alpha is linear in
        // the unknown coefficients. Column (j, m) contributes a_j * [m mod alpha].
        std::vector<Polynomial> residues;
        residues.reserve(n);
        for (const auto& m : cd.monomials()) residues.push_back(reduce_mod_linear(Polynomial::term(m, 1), h));
        RationalMatrix block(n, cd.derivation_dim());
        for (std::size_t j = 0; j < ell; ++j) {
            if (is_zero(h.coeffs[j])) continue;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& [m, c] : residues[k].terms()) block(cd.index_of(m), j * n + k) += h.coeffs[j] * c;
        }
        for (std::size_t r = 0; r < block.rows(); ++r) {
            const auto row = block.row(r);
            if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return !is_zero(x); }))
                conditions.append_row(row);
        }
    }

    GradedBasis basis;
    basis.degree = d;
    const auto kern = kernel(std::move(conditions));
    for (const auto& v : kern) basis.basis.push_back(cd.derivation_from(v));
    return spaces_.emplace(d, std::move(basis)).first->second;
}

std::vector<GeneratorBatch> GradedOracle::minimal_generators(unsigned d_max) {
    const std::size_t ell = arr_.nvars();
    std::vector<GeneratorBatch> out;
    for (unsigned d = 0; d <= d_max; ++d) {
        const DegreeCoordinates& cd = coords(d);
        EchelonSpan span(cd.derivation_dim());
        if (d > 0) {
            for (const auto& theta : derivation_space(d - 1).basis)
                for (std::size_t k = 0; k < ell; ++k)
                    span.insert(cd.derivation_vector(Polynomial::variable(ell, k) * theta));
        }
        GeneratorBatch batch;
        batch.degree = d;
        for (const auto& theta : derivation_space(d).basis)
            if (span.insert(cd.derivation_vector(theta))) batch.representatives.push_back(theta);
        if (batch.count() > 0) out.push_back(std::move(batch));
    }
    return out;
}

GenerationReport GradedOracle::submodule_generates(std::span<const Derivation> gens, unsigned d_max) {
    const std::size_t ell = arr_.nvars();
    for (const auto& g : gens)
        if (g.nvars() != ell || !g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
    GenerationReport report;
    report.max_degree = d_max;
    for (unsigned d = 0; d <= d_max; ++d) {
        const DegreeCoordinates& cd = coords(d);
        EchelonSpan span(cd.derivation_dim());
        for (const auto& g : gens) {
            const int dg = g.degree();
            if (dg < 0 || dg > static_cast<int>(d)) continue;
            for (const auto& m : monomials_of_degree(ell, d - static_cast<unsigned>(dg)))
                span.insert(cd.derivation_vector(Polynomial::term(m, 1) * g));
        }
        const std::size_t dim = dimension(d);
        report.span_dims.push_back(span.rank());
        report.module_dims.push_back(dim);
        if (span.rank() != dim && report.generates) {
            report.generates = false;
            report.first_failing_degree = d;
        }
    }
    return report;
}

namespace {

// Coordinates of coefficient tuples (f_i) with deg f_i = e - deg theta_i.
struct TupleCoordinates {
    std::vector<std::optional<DegreeCoordinates>> blocks;
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;

    TupleCoordinates(std::span<const int> degrees, std::size_t nvars, unsigned e) {
        for (int dg : degrees) {
            offsets.push_back(dim);
            if (dg >= 0 && dg <= static_cast<int>(e)) {
                blocks.emplace_back(DegreeCoordinates(nvars, e - static_cast<unsigned>(dg)));
                dim += blocks.back()->monomial_count();
            } else {
                blocks.emplace_back(std::nullopt);
            }
        }
    }

    RationalVector vector(std::span<const Polynomial> tuple) const {
        RationalVector v(dim);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (!blocks[i]) continue;
            for (const auto& [m, c] : tuple[i].terms()) v[offsets[i] + blocks[i]->index_of(m)] = c;
        }
        return v;
    }

    std::vector<Polynomial> tuple(std::span<const Rational> v, std::size_t nvars) const {
        std::vector<Polynomial> out;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (!blocks[i]) {
                out.emplace_back(nvars);
                continue;
            }
            out.push_back(blocks[i]->polynomial_from(v.subspan(offsets[i], blocks[i]->monomial_count())));
        }
        return out;
    }
};

std::vector<int> degrees_of(std::span<const Derivation> gens) {
    std::vector<int> out;
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero derivation has no degree");
        if (!g.is_homogeneous()) throw std::invalid_argument("derivations must be homogeneous");
        out.push_back(g.degree());
    }
    return out;
}

}  // namespace

std::vector<std::vector<Polynomial>> syzygy_space(std::span<const Derivation> gens, unsigned d) {
    if (gens.empty()) return {};
    const std::size_t ell = gens.front().nvars();
    const auto degrees = degrees_of(gens);
    const TupleCoordinates tc(degrees, ell, d);
    if (tc.dim == 0) return {};
    const DegreeCoordinates cd(ell, d);

    // Column per unknown coefficient: the image of (monomial in slot i).
    RationalMatrix eval(cd.derivation_dim(), tc.dim);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!tc.blocks[i]) continue;
        const auto& mons = tc.blocks[i]->monomials();
        for (std::size_t k = 0; k < mons.size(); ++k) {
            const auto col = cd.derivation_vector(Polynomial::term(mons[k], 1) * gens[i]);
            for (std::size_t r = 0; r < col.size(); ++r)
                if (!is_zero(col[r])) eval(r, tc.offsets[i] + k) = col[r];
        }
    }
    std::vector<std::vector<Polynomial>> out;
    for (const auto& v : kernel(std::move(eval))) out.push_back(tc.tuple(v, ell));
    return out;
}

ResolutionEvidence GradedOracle::resolution(unsigned d_max) {
    const std::size_t ell = arr_.nvars();
    ResolutionEvidence ev;
    ev.max_degree = d_max;
    for (auto& batch : minimal_generators(d_max))
        for (auto& g : batch.representatives) {
            ev.generator_degrees.push_back(batch.degree);
            ev.generators.push_back(g);
        }
    const auto degrees = degrees_of(ev.generators);

    std::vector<std::vector<Polynomial>> previous;
    std::vector<std::size_t> syz_dims;
    for (unsigned e = 0; e <= d_max; ++e) {
        ev.module_dims.push_back(dimension(e));
        const TupleCoordinates tc(degrees, ell, e);
        auto current = syzygy_space(ev.generators, e);
        syz_dims.push_back(current.size());
        EchelonSpan span(tc.dim);
        for (const auto& rel : previous)
            for (std::size_t k = 0; k < ell; ++k) {
                std::vector<Polynomial> shifted;
                for (const auto& f : rel) shifted.push_back(Polynomial::variable(ell, k) * f);
                span.insert(tc.vector(shifted));
            }
        for (const auto& rel : current)
            if (span.insert(tc.vector(rel))) {
                ev.relation_degrees.push_back(e);
                ev.relations.push_back({e, rel});
            }
        previous = std::move(current);
    }

    // A one-step free resolution forces dim Syz_e = sum_j dim S_{e - e_j}.
    ev.pd_at_most_one = true;
    for (unsigned e = 0; e <= d_max; ++e) {
        std::size_t expected = 0;
        for (unsigned r : ev.relation_degrees) expected += dim_polynomials(ell, static_cast<int>(e) - static_cast<int>(r));
        if (expected != syz_dims[e]) ev.pd_at_most_one = false;
    }
    return ev;
}

std::size_t ideal_graded_dimension(std::span<const Polynomial> gens, std::size_t nvars, unsigned d) {
    const DegreeCoordinates cd(nvars, d);
    EchelonSpan span(cd.monomial_count());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
        const int dg = g.degree();
        if (dg > static_cast<int>(d)) continue;
        for (const auto& m : monomials_of_degree(nvars, d - static_cast<unsigned>(dg)))
            span.insert(cd.polynomial_vector(Polynomial::term(m, 1) * g));
    }
    return span.rank();
}

GradedBasis derivation_space(const Arrangement& a, unsigned d) { return GradedOracle(a).derivation_space(d); }

std::vector<GeneratorBatch> minimal_generators(const Arrangement& a, unsigned d_max) {
    return GradedOracle(a).minimal_generators(d_max);
}

GenerationReport submodule_generates(const Arrangement& a, std::span<const Derivation> gens, unsigned d_max) {
    return GradedOracle(a).submodule_generates(gens, d_max);
}

std::vector<Derivation> flatten(std::span<const GeneratorBatch> batches) {
    std::vector<Derivation> out;
    for (const auto& b : batches) out.insert(out.end(), b.representatives.begin(), b.representatives.end());
    return out;
}

}  // namespace logder
