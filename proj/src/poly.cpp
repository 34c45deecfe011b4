#include "logder/poly.hpp"

#include <algorithm>
#include <numeric>

namespace logder {

namespace {

void require_same_nvars(const Polynomial& f, const Polynomial& g) {
    if (f.nvars() != g.nvars()) {
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(f.nvars()) +
                                    " vs " + std::to_string(g.nvars()));
    }
}

void require_var(const Polynomial& f, std::size_t j) {
    if (j >= f.nvars()) {
        throw std::invalid_argument("variable index " + std::to_string(j + 1) +
                                    " out of range 1.." + std::to_string(f.nvars()));
    }
}

// Coefficients of f viewed as a polynomial in x_var; entry k multiplies x_var^k.
using Univariate = std::vector<Polynomial>;

Univariate to_univariate(const Polynomial& f, std::size_t var) {
    Univariate out;
    for (const auto& [m, c] : f.terms()) {
        unsigned k = m.exps[var];
        if (out.size() <= k) out.resize(k + 1, Polynomial(f.nvars()));
        Monomial rest = m;
        rest.exps[var] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

Polynomial from_univariate(const Univariate& u, std::size_t var, std::size_t nvars) {
    Polynomial out(nvars);
    for (std::size_t k = 0; k < u.size(); ++k) {
        for (const auto& [m, c] : u[k].terms()) {
            Monomial shifted = m;
            shifted.exps[var] += static_cast<unsigned>(k);
            out.add_term(shifted, c);
        }
    }
    return out;
}

void trim(Univariate& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int udeg(const Univariate& u) { return static_cast<int>(u.size()) - 1; }

Polynomial divide_or_throw(const Polynomial& f, const Polynomial& g) {
    auto q = exact_divide(f, g);
    if (!q) throw std::logic_error("expected exact division failed");
    return *std::move(q);
}

// lc(B)^(deg A - deg B + 1) * A mod B, in the main variable.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
    const int db = udeg(b);
    const Polynomial& lcb = b.back();
    int e = udeg(a) - db + 1;
    while (!a.empty() && udeg(a) >= db) {
        Polynomial lead = a.back();
        const int shift = udeg(a) - db;
        for (auto& c : a) c = c * lcb;
        for (int k = 0; k <= db; ++k) a[k + shift] -= lead * b[k];
        trim(a);
        --e;
    }
    if (e > 0) {
        Polynomial scale = pow(lcb, static_cast<unsigned>(e));
        for (auto& c : a) c = c * scale;
    }
    return a;
}

Polynomial content_of(const Univariate& u) {
    Polynomial c(u.front().nvars());
    for (const auto& coeff : u) {
        c = gcd(c, coeff);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

Univariate primitive_of(Univariate u) {
    Polynomial c = content_of(u);
    if (c.is_constant()) return u;
    for (auto& coeff : u) coeff = divide_or_throw(coeff, c);
    return u;
}

// Primitive gcd of two x-primitive polynomials with positive x-degree.
Univariate subresultant_gcd(Univariate a, Univariate b) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    const std::size_t n = a.front().nvars();
    Polynomial g = Polynomial::constant(n, 1);
    Polynomial h = Polynomial::constant(n, 1);
    for (;;) {
        const int delta = udeg(a) - udeg(b);
        Univariate r = pseudo_remainder(a, b);
        if (r.empty()) return primitive_of(std::move(b));
        if (udeg(r) == 0) return Univariate{Polynomial::constant(n, 1)};
        a = std::move(b);
        Polynomial divisor = g * pow(h, static_cast<unsigned>(delta));
        for (auto& c : r) c = divide_or_throw(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divide_or_throw(pow(g, static_cast<unsigned>(delta)),
                                pow(h, static_cast<unsigned>(delta - 1)));
        }
    }
}

}  // namespace

// --- Monomial ---------------------------------------------------------------

unsigned Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= b.exps[i];
    return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(),
                                        a.exps.end());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    Monomial m(nvars);
    // Lex-descending enumeration of compositions of d is grlex-descending
    // within a fixed degree.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            m.exps[i] = left;
            out.push_back(m);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m.exps[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

// --- Polynomial -------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t j) {
    Polynomial p(nvars);
    require_var(p, j);
    Monomial m(nvars);
    m.exps[j] = 1;
    p.add_term(m, 1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::constant_value() const {
    return coefficient(Monomial(nvars_));
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::degree_in(std::size_t var) const {
    require_var(*this, var);
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exps[var]));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::contains_variable(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m.exps[var] > 0) return true;
    return false;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong variable count");
    if (logder::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (logder::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    require_same_nvars(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    require_same_nvars(*this, g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (logder::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_nvars(f, g);
    Polynomial out(f.nvars());
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) out.add_term(mf * mg, cf * cg);
    return out;
}

// --- LinearForm -------------------------------------------------------------

bool LinearForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return logder::is_zero(c); });
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        Monomial m(coeffs.size());
        m.exps[j] = 1;
        p.add_term(m, coeffs[j]);
    }
    return p;
}

std::optional<std::size_t> LinearForm::default_pivot() const {
    for (std::size_t j = coeffs.size(); j-- > 0;)
        if (!logder::is_zero(coeffs[j])) return j;
    return std::nullopt;
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
    LinearForm form(std::vector<Rational>(p.nvars(), Rational(0)));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != 1) throw std::invalid_argument("not a linear form: " + format(p));
        for (std::size_t j = 0; j < m.nvars(); ++j)
            if (m.exps[j] == 1) form.coeffs[j] = c;
    }
    return form;
}

// --- algorithms -------------------------------------------------------------

Polynomial pow(const Polynomial& f, unsigned k) {
    Polynomial result = Polynomial::constant(f.nvars(), 1);
    Polynomial base = f;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    require_same_nvars(f, g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q(f.nvars());
    Polynomial r = f;
    const Monomial& lg = g.leading_monomial();
    const Rational& cg = g.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lg.divides(lr)) return std::nullopt;
        Polynomial t = Polynomial::term(lr / lg, r.leading_coefficient() / cg);
        q += t;
        r -= t * g;
    }
    return q;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t j) {
    require_var(f, j);
    Polynomial out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m.exps[j] == 0) continue;
        Monomial d = m;
        d.exps[j] -= 1;
        out.add_term(d, c * m.exps[j]);
    }
    return out;
}

Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& value) {
    require_var(f, var);
    require_same_nvars(f, value);
    Univariate u = to_univariate(f, var);
    Polynomial out(f.nvars());
    // Horner in the substituted value.
    for (std::size_t k = u.size(); k-- > 0;) out = out * value + u[k];
    return out;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (point.size() != f.nvars()) throw std::invalid_argument("point has wrong dimension");
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (std::size_t j = 0; j < m.nvars(); ++j)
            for (unsigned e = 0; e < m.exps[j]; ++e) t *= point[j];
        total += t;
    }
    return total;
}

Polynomial reduce_mod_linear(const Polynomial& f, const LinearForm& g,
                             std::optional<std::size_t> pivot) {
    if (g.nvars() != f.nvars()) throw std::invalid_argument("variable-count mismatch");
    const std::size_t p = pivot ? *pivot : g.default_pivot().value_or(0);
    if (p >= g.nvars() || is_zero(g.coeffs[p]))
        throw std::domain_error("zero pivot coefficient in reduce_mod_linear");
    Polynomial value(f.nvars());
    for (std::size_t j = 0; j < g.nvars(); ++j) {
        if (j == p) continue;
        Monomial m(f.nvars());
        m.exps[j] = 1;
        value.add_term(m, -g.coeffs[j] / g.coeffs[p]);
    }
    return substitute(f, p, value);
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / f.leading_coefficient());
}

ContentPrimitive content_primitive(const Polynomial& f, std::size_t main) {
    require_var(f, main);
    if (f.is_zero()) throw std::domain_error("content of zero polynomial");
    Polynomial c = content_of(to_univariate(f, main));
    c = make_monic(c);
    return {c, divide_or_throw(f, c)};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    require_same_nvars(f, g);
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    const std::size_t n = f.nvars();
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(n, 1);

    // A variable present in only one argument cannot occur in the gcd.
    for (std::size_t v = 0; v < n; ++v) {
        const bool in_f = f.contains_variable(v);
        const bool in_g = g.contains_variable(v);
        if (in_f && !in_g) return gcd(content_of(to_univariate(f, v)), g);
        if (in_g && !in_f) return gcd(f, content_of(to_univariate(g, v)));
    }

    std::size_t main = 0;
    while (!f.contains_variable(main)) ++main;

    Univariate uf = to_univariate(f, main);
    Univariate ug = to_univariate(g, main);
    Polynomial cf = content_of(uf);
    Polynomial cg = content_of(ug);
    for (auto& c : uf) c = divide_or_throw(c, cf);
    for (auto& c : ug) c = divide_or_throw(c, cg);
    Polynomial c = gcd(cf, cg);
    Univariate prim = subresultant_gcd(std::move(uf), std::move(ug));
    return make_monic(c * from_univariate(prim, main, n));
}

Polynomial gcd(std::span<const Polynomial> fs) {
    if (fs.empty()) throw std::invalid_argument("gcd of an empty list");
    Polynomial acc(fs.front().nvars());
    for (const auto& f : fs) {
        acc = gcd(acc, f);
        if (acc.is_constant() && !acc.is_zero()) break;
    }
    return acc;
}

bool are_associates(const Polynomial& a, const Polynomial& b) {
    return make_monic(a) == make_monic(b);
}

}  // namespace logder
