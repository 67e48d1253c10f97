#include "lgkit/parse.hpp"

#include <algorithm>
#include <cctype>

#include "lgkit/errors.hpp"

namespace lgkit {

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

    ExpPoly parse() {
        if (names_.empty()) throw ParseError("expression needs at least one variable", 1, 1);
        ExpPoly e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::size_t nvars() const { return names_.size(); }

    ExpPoly expr() {
        skip_ws();
        ExpPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    ExpPoly term() {
        ExpPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                ExpPoly d = unary();
                if (!d.is_constant()) {
                    pos_ = at;
                    fail("division by a non-constant expression");
                }
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                if (auto c = exact(d)) {
                    acc = acc * ExpPoly::constant(nvars(), c->inverse());
                } else {
                    acc = acc * ExpPoly::constant(nvars(), Complex{1.0, 0.0} / d.constant_value());
                }
            } else {
                return acc;
            }
        }
    }

    static std::optional<GaussianRational> exact(const ExpPoly& c) {
        // Constants built from literals are exact; recover them via to_poly.
        try {
            const Poly p = c.to_poly();
            return p.is_zero() ? GaussianRational{} : p.terms().begin()->second;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }

    ExpPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    ExpPoly power() {
        ExpPoly base = primary();
        if (accept('^')) {
            skip_ws();
            bool braced = accept('{');
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            const unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (k > 4096) fail("exponent too large");
            if (braced && !accept('}')) fail("expected '}'");
            return ExpPoly::power(base, static_cast<unsigned>(k));
        }
        return base;
    }

    ExpPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExpPoly e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExpPoly number() {
        const std::size_t start = pos_;
        std::string digits;
        std::size_t frac_digits = 0;
        bool seen_point = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                digits += c;
                if (seen_point) ++frac_digits;
            } else if (c == '.' && !seen_point) {
                seen_point = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (digits.empty()) {
            pos_ = start;
            fail("malformed number");
        }
        mpq_class q(mpz_class(digits, 10), mpz_class(1));
        if (frac_digits) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
            q = mpq_class(mpz_class(digits, 10), den);
            q.canonicalize();
        }
        return ExpPoly::constant(nvars(), GaussianRational(q));
    }

    ExpPoly identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (auto it = std::find(names_.begin(), names_.end(), name); it != names_.end()) {
            return ExpPoly::variable(nvars(), static_cast<std::size_t>(it - names_.begin()));
        }
        if (name == "i") return ExpPoly::constant(nvars(), GaussianRational::i());
        if (name == "exp") {
            if (!accept('(')) fail("expected '(' after exp");
            ExpPoly arg = expr();
            if (!accept(')')) fail("expected ')'");
            return ExpPoly::exp(arg);
        }
        pos_ = start;
        fail("unknown identifier '" + name + "'");
    }

    std::string_view text_;
    const VariableNames& names_;
    std::size_t pos_ = 0;
};

}  // namespace

std::size_t infer_variable_count(std::string_view text) {
    std::size_t best = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] != 'x') continue;
        if (p > 0 && (std::isalnum(static_cast<unsigned char>(text[p - 1])) || text[p - 1] == '_')) continue;
        std::size_t q = p + 1;
        while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
        if (q == p + 1) continue;
        if (q < text.size() && (std::isalpha(static_cast<unsigned char>(text[q])) || text[q] == '_')) continue;
        best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(p + 1, q - p - 1))));
    }
    return best;
}

VariableNames infer_variables(std::span<const std::string> texts, std::size_t min_nvars) {
    VariableNames named;
    std::size_t indexed = min_nvars;
    bool only_indexed = true;
    for (const auto& text : texts) {
        indexed = std::max(indexed, infer_variable_count(text));
        for (std::size_t p = 0; p < text.size();) {
            const unsigned char c = static_cast<unsigned char>(text[p]);
            if (std::isdigit(c) || c == '.') {
                while (p < text.size() && (std::isdigit(static_cast<unsigned char>(text[p])) || text[p] == '.')) ++p;
                continue;
            }
            if (!(std::isalpha(c) || c == '_')) {
                ++p;
                continue;
            }
            const std::size_t start = p;
            while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_')) ++p;
            const std::string name = text.substr(start, p - start);
            if (name == "i" || name == "exp") continue;
            const bool is_indexed = name.size() > 1 && name[0] == 'x' &&
                                    std::all_of(name.begin() + 1, name.end(), [](char ch) {
                                        return std::isdigit(static_cast<unsigned char>(ch)) != 0;
                                    });
            if (!is_indexed) only_indexed = false;
            if (std::find(named.begin(), named.end(), name) == named.end()) named.push_back(name);
        }
    }
    if (only_indexed) return default_variables(std::max<std::size_t>(indexed, 1));
    return named;
}

ExpPoly parse_expression(std::string_view text, const VariableNames& names) {
    return ExpressionParser(text, names).parse();
}

ExpPoly parse_expression(std::string_view text, std::size_t min_nvars) {
    return parse_expression(text, default_variables(std::max(min_nvars, infer_variable_count(text))));
}

Poly parse_poly(std::string_view text, const VariableNames& names) {
    const ExpPoly e = parse_expression(text, names);
    if (e.contains_exp()) throw ParseError("exp() is not allowed in a polynomial");
    return e.to_poly();
}

Poly parse_poly(std::string_view text, std::size_t min_nvars) {
    return parse_poly(text, default_variables(std::max(min_nvars, infer_variable_count(text))));
}

}  // namespace lgkit
