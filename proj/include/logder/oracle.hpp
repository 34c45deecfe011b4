#pragma once

#include "logder/arrangement.hpp"
#include "logder/derivation.hpp"
#include "logder/linalg.hpp"
#include "logder/poly.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace logder {

// dim S_d for S = Q[x_1..x_n]; 0 for negative d.
std::size_t dim_polynomials(std::size_t nvars, int d);

// Coordinates for homogeneous objects of one degree: a polynomial of degree d
// is a vector over monomials_of_degree(n, d); a derivation of degree d is l
// such blocks, component j first.
class DegreeCoordinates {
public:
    DegreeCoordinates(std::size_t nvars, unsigned degree);

    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t monomial_count() const { return monomials_.size(); }
    std::size_t derivation_dim() const { return nvars_ * monomials_.size(); }
    std::size_t index_of(const Monomial& m) const;

    RationalVector polynomial_vector(const Polynomial& f) const;
    Polynomial polynomial_from(std::span<const Rational> v) const;
    RationalVector derivation_vector(const Derivation& theta) const;
    Derivation derivation_from(std::span<const Rational> v) const;

private:
    std::size_t nvars_;
    unsigned degree_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t, GrlexGreater> index_;
};

struct GradedBasis {
    unsigned degree = 0;
    std::vector<Derivation> basis;
};

struct GeneratorBatch {
    unsigned degree = 0;
    std::vector<Derivation> representatives;
    std::size_t count() const { return representatives.size(); }
};

struct GenerationReport {
    bool generates = true;
    unsigned max_degree = 0;
    std::optional<unsigned> first_failing_degree;
    std::vector<std::size_t> span_dims;    // rank of the submodule span, per degree
    std::vector<std::size_t> module_dims;  // dim D(A)_d, per degree
};

// A minimal generator of the syzygy module of G, as a coefficient tuple.
struct Relation {
    unsigned degree = 0;
    std::vector<Polynomial> coefficients;
};

struct ResolutionEvidence {
    unsigned max_degree = 0;
    std::vector<unsigned> generator_degrees;  // ascending
    std::vector<Derivation> generators;
    std::vector<unsigned> relation_degrees;    // ascending
    std::vector<Relation> relations;
    std::vector<std::size_t> module_dims;      // dim D(A)_d
    // Generators plus one layer of relations reproduce every dim D(A)_d,
    // d <= max_degree, as for a length-one free resolution.
    bool pd_at_most_one = false;
};

// Brute-force ground truth for D(A) degree by degree, via exact linear
// algebra over Q. Caches graded pieces; not safe for concurrent use.
class GradedOracle {
public:
    explicit GradedOracle(Arrangement a);

    const Arrangement& arrangement() const { return arr_; }

    // Basis of D(A)_d: apply(theta, alpha_H) must vanish modulo alpha_H.
    const GradedBasis& derivation_space(unsigned d);
    std::size_t dimension(unsigned d) { return derivation_space(d).basis.size(); }

    // Graded Nakayama: new generators in degree d complete the span of
    // x_j * D(A)_{d-1} inside D(A)_d.
    std::vector<GeneratorBatch> minimal_generators(unsigned d_max);

    GenerationReport submodule_generates(std::span<const Derivation> gens, unsigned d_max);

    ResolutionEvidence resolution(unsigned d_max);

private:
    const DegreeCoordinates& coords(unsigned d);

    Arrangement arr_;
    std::map<unsigned, GradedBasis> spaces_;
    std::map<unsigned, DegreeCoordinates> coords_;
};

// Basis of the degree-d syzygies sum_i f_i theta_i = 0, deg f_i = d - deg theta_i.
std::vector<std::vector<Polynomial>> syzygy_space(std::span<const Derivation> gens, unsigned d);

// Dimension of the degree-d piece of the ideal generated by gens.
std::size_t ideal_graded_dimension(std::span<const Polynomial> gens, std::size_t nvars, unsigned d);

// Convenience wrappers over a fresh GradedOracle.
GradedBasis derivation_space(const Arrangement& a, unsigned d);
std::vector<GeneratorBatch> minimal_generators(const Arrangement& a, unsigned d_max);
GenerationReport submodule_generates(const Arrangement& a, std::span<const Derivation> gens, unsigned d_max);

std::vector<Derivation> flatten(std::span<const GeneratorBatch> batches);

}  // namespace logder
