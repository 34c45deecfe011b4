#include "logder/arrangement.hpp"

#include "logder/linalg.hpp"
#include "text_lines.hpp"

namespace logder {

void Arrangement::validate() const {
    using Kind = ValidationError::Kind;
    if (nvars_ < 2) throw ValidationError(Kind::TooFewVariables, 0, 0, "arrangement needs at least 2 variables");
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        if (hyperplanes_[i].nvars() != nvars_)
            throw ValidationError(Kind::WrongVariableCount, i + 1, 0,
                                  "hyperplane " + std::to_string(i + 1) + " has wrong variable count");
        if (hyperplanes_[i].is_zero())
            throw ValidationError(Kind::ZeroForm, i + 1, 0, "hyperplane " + std::to_string(i + 1) + " is the zero form");
    }
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j) {
            const auto& a = hyperplanes_[i].coeffs;
            const auto& b = hyperplanes_[j].coeffs;
            bool proportional = true;
            for (std::size_t r = 0; r < nvars_ && proportional; ++r)
                for (std::size_t s = r + 1; s < nvars_; ++s)
                    if (a[r] * b[s] != a[s] * b[r]) {
                        proportional = false;
                        break;
                    }
            if (proportional)
                throw ValidationError(Kind::ProportionalPair, i + 1, j + 1,
                                      "hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                          " are proportional");
        }
    }
}

Polynomial Arrangement::defining_polynomial() const {
    validate();
    Polynomial q = Polynomial::constant(nvars_, 1);
    for (const auto& h : hyperplanes_) q = q * h.to_polynomial();
    return q;
}

bool Arrangement::is_essential() const {
    RationalMatrix m(hyperplanes_.size(), nvars_);
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
        for (std::size_t j = 0; j < nvars_; ++j) m(i, j) = hyperplanes_[i].coeffs[j];
    return rank(std::move(m)) == nvars_;
}

Arrangement parse_arrangement(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::size_t idx = 0;
    const std::size_t n = detail::parse_vars_header(lines, idx);
    std::vector<LinearForm> forms;
    for (; idx < lines.size(); ++idx) {
        const auto& line = lines[idx];
        if (line.text.empty()) continue;
        Polynomial p(n);
        try {
            p = parse_polynomial(line.text, n);
        } catch (const ParseError& e) {
            throw FormatError(e.what(), line.number);
        }
        if (!p.is_zero() && (p.degree() != 1 || !p.is_homogeneous()))
            throw FormatError("not a linear form: " + line.text, line.number);
        forms.push_back(LinearForm::from_polynomial(p));
    }
    return Arrangement(n, std::move(forms));
}

std::string format_arrangement(const Arrangement& a) {
    std::string out = "vars: " + std::to_string(a.nvars()) + "\n";
    for (const auto& h : a.hyperplanes()) out += format(h.to_polynomial()) + "\n";
    return out;
}

Arrangement read_arrangement_file(const std::string& path) { return parse_arrangement(detail::read_file(path)); }

}  // namespace logder
