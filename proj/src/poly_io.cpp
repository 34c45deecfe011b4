#include "logder/poly.hpp"

#include <cctype>

namespace logder {

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    const std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) throw std::invalid_argument("malformed rational '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("malformed rational '" + text + "'");
        const std::size_t den_start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational q(body, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

    Polynomial parse() {
        Polynomial out(n_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        add(out, term(), negate);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            add(out, term(), op == '-');
        }
        return out;
    }

private:
    struct Term {
        Rational coeff;
        Monomial mono;
    };

    static void add(Polynomial& out, const Term& t, bool negate) {
        out.add_term(t.mono, negate ? Rational(-t.coeff) : t.coeff);
    }

    Term term() {
        skip_ws();
        Term t{Rational(1), Monomial(n_)};
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') t.coeff = -1;
            ++pos_;
            skip_ws();
        }
        if (at_end()) fail("expected term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff *= number();
            skip_ws();
            // "2x" is read as "2*x"
            const bool juxtaposed = !at_end() && std::isalpha(static_cast<unsigned char>(peek()));
            if (!juxtaposed) {
                if (at_end() || peek() != '*') return t;
                ++pos_;
                skip_ws();
            }
        }
        power(t.mono);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
            power(t.mono);
        }
        return t;
    }

    Rational number() {
        Integer num = digits();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t at = pos_;
            Integer den = digits();
            if (den == 0) fail_at("zero denominator", at);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    void power(Monomial& mono) {
        const std::size_t at = pos_;
        if (at_end()) fail("expected variable");
        const char c = peek();
        std::size_t var = 0;
        if (c == 'x' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            const Integer k = digits();
            if (k < 1 || k > static_cast<unsigned long>(n_))
                fail_at("unknown variable x" + k.get_str(), at);
            var = k.get_ui() - 1;
        } else if (c == 'x' || c == 'y' || c == 'z') {
            const std::size_t alias = static_cast<std::size_t>(c - 'x');
            if (n_ > 3 || alias >= n_) fail_at(std::string("unknown variable ") + c, at);
            ++pos_;
            var = alias;
        } else {
            fail("expected variable");
        }
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t eat = pos_;
            const Integer ev = digits();
            if (ev < 1 || ev > 100000) fail_at("exponent must be a positive integer", eat);
            e = static_cast<unsigned>(ev.get_ui());
        }
        mono.exps[var] += e;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] static void fail_at(const std::string& what, std::size_t at) { throw ParseError(what, at); }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m) {
    std::string out;
    for (std::size_t j = 0; j < m.nvars(); ++j) {
        if (m.exps[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(j + 1);
        if (m.exps[j] > 1) out += '^' + std::to_string(m.exps[j]);
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
    if (nvars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
    return PolyParser(text, nvars).parse();
}

std::string format(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        const std::string vars = format_monomial(m);
        if (vars.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += vars;
        } else {
            out += mag.get_str() + '*' + vars;
        }
    }
    return out;
}

}  // namespace logder
