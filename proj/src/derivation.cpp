#include "logder/derivation.hpp"

#include "text_lines.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace logder {

Derivation::Derivation(std::size_t nvars) : components_(nvars, Polynomial(nvars)) {}

Derivation::Derivation(std::vector<Polynomial> components) : components_(std::move(components)) {
    for (const auto& c : components_)
        if (c.nvars() != components_.size())
            throw std::invalid_argument("derivation component has wrong variable count");
}

bool Derivation::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool Derivation::is_homogeneous() const {
    int d = -1;
    for (const auto& c : components_) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) return false;
        if (d >= 0 && c.degree() != d) return false;
        d = c.degree();
    }
    return true;
}

int Derivation::degree() const {
    int d = -1;
    for (const auto& c : components_) d = std::max(d, c.degree());
    return d;
}

Derivation& Derivation::operator+=(const Derivation& other) {
    if (other.nvars() != nvars()) throw std::invalid_argument("variable-count mismatch");
    for (std::size_t j = 0; j < components_.size(); ++j) components_[j] += other.components_[j];
    return *this;
}

Derivation operator*(const Polynomial& f, const Derivation& d) {
    if (f.nvars() != d.nvars()) throw std::invalid_argument("variable-count mismatch");
    Derivation out = d;
    for (auto& c : out.components_) c = f * c;
    return out;
}

Derivation operator*(const Rational& c, const Derivation& d) {
    Derivation out = d;
    for (auto& comp : out.components_) comp *= c;
    return out;
}

Polynomial apply(const Derivation& theta, const Polynomial& f) {
    if (f.nvars() != theta.nvars()) throw std::invalid_argument("variable-count mismatch");
    Polynomial out(f.nvars());
    for (std::size_t j = 0; j < theta.nvars(); ++j) {
        if (theta[j].is_zero()) continue;
        out += partial_derivative(f, j) * theta[j];
    }
    return out;
}

LogarithmicCheck is_logarithmic(const Derivation& theta, const Arrangement& a) {
    if (theta.nvars() != a.nvars()) throw std::invalid_argument("variable-count mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Polynomial alpha = a[i].to_polynomial();
        if (!exact_divide(apply(theta, alpha), alpha)) return {false, i};
    }
    return {};
}

Derivation euler(std::size_t nvars) {
    std::vector<Polynomial> comps;
    for (std::size_t j = 0; j < nvars; ++j) comps.push_back(Polynomial::variable(nvars, j));
    return Derivation(std::move(comps));
}

Derivation coordinate(std::size_t nvars, std::size_t j, const Polynomial& f) {
    if (j >= nvars) throw std::invalid_argument("coordinate index out of range");
    std::vector<Polynomial> comps(nvars, Polynomial(nvars));
    comps[j] = f;
    return Derivation(std::move(comps));
}

Derivation combine(std::span<const Polynomial> coeffs, std::span<const Derivation> thetas) {
    if (coeffs.size() != thetas.size()) throw std::invalid_argument("combine: length mismatch");
    if (thetas.empty()) throw std::invalid_argument("combine: empty input");
    Derivation out(thetas.front().nvars());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (coeffs[i].is_zero()) {
            if (coeffs[i].nvars() != out.nvars() || thetas[i].nvars() != out.nvars())
                throw std::invalid_argument("combine: variable-count mismatch");
            continue;
        }
        out += coeffs[i] * thetas[i];
    }
    return out;
}

std::vector<Derivation> parse_derivations(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t idx = 0;
    const std::size_t n = detail::parse_vars_header(lines, idx);
    std::vector<Derivation> out;
    std::map<std::size_t, Polynomial> block;
    std::size_t block_start = 0;

    auto flush = [&]() {
        if (block.empty()) return;
        if (block.size() != n)
            throw FormatError("derivation block has " + std::to_string(block.size()) + " of " +
                                  std::to_string(n) + " components",
                              block_start);
        std::vector<Polynomial> comps;
        for (auto& [k, p] : block) comps.push_back(std::move(p));
        out.emplace_back(std::move(comps));
        block.clear();
    };

    for (; idx < lines.size(); ++idx) {
        const auto& line = lines[idx];
        if (line.text.empty()) {
            flush();
            continue;
        }
        const auto colon = line.text.find(':');
        if (colon == std::string::npos || line.text[0] != 'd')
            throw FormatError("expected 'dK: <polynomial>'", line.number);
        const std::string key = detail::trim(std::string_view(line.text).substr(1, colon - 1));
        std::size_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoul(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FormatError("malformed component label 'd" + key + "'", line.number);
        }
        if (k < 1 || k > n) throw FormatError("component index d" + key + " out of range", line.number);
        if (block.empty()) block_start = line.number;
        if (block.count(k - 1)) throw FormatError("duplicate component d" + key, line.number);
        try {
            block.emplace(k - 1, parse_polynomial(std::string_view(line.text).substr(colon + 1), n));
        } catch (const ParseError& e) {
            throw FormatError(e.what(), line.number);
        }
    }
    flush();
    return out;
}

std::string format_derivations(std::span<const Derivation> thetas) {
    if (thetas.empty()) throw std::invalid_argument("no derivations to format");
    std::string out = "vars: " + std::to_string(thetas.front().nvars()) + "\n";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        out += "\n";
        for (std::size_t j = 0; j < thetas[i].nvars(); ++j)
            out += "d" + std::to_string(j + 1) + ": " + format(thetas[i][j]) + "\n";
    }
    return out;
}

std::vector<Derivation> read_derivations_file(const std::string& path) {
    return parse_derivations(detail::read_file(path));
}

}  // namespace logder
