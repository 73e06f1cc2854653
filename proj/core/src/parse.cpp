#include <cctype>
#include <map>
#include <sstream>
#include <string>

#include "apolar/forms.hpp"

namespace apolar {

namespace {

// Recursive-descent parser for the form grammar:
//   form   := ['+'|'-'] term (('+'|'-') term)*
//   term   := [coef '*'] factor ('*' factor)*
//   factor := 'x' index ['^' exp]
//   coef   := integer ['/' integer]
// Whitespace is insignificant. Canonical output never emits a leading sign.
class FormParser {
public:
    explicit FormParser(std::string_view text) : s_(text) {}

    // exponent map per term -> accumulated monomial coefficient
    std::map<std::vector<int>, Rat> run(int& max_index) {
        std::map<std::vector<int>, Rat> terms;
        max_index = -1;
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
        parse_term(terms, sign, max_index);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = take();
            if (c != '+' && c != '-') fail("expected '+' or '-'", pos_ - 1);
            parse_term(terms, c == '-' ? -1 : 1, max_index);
            skip_ws();
        }
        return terms;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        std::ostringstream os;
        os << what << " at position " << at;
        fail_user("SyntaxError", os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char take() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
        return s_[pos_++];
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer", start);
        return Int(std::string(s_.substr(start, pos_ - start)));
    }

    long parse_plain_number(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what, start);
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    void parse_term(std::map<std::vector<int>, Rat>& terms, int sign, int& max_index) {
        Rat coef = 1;
        skip_ws();
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
            Int num = parse_integer();
            Int den = 1;
            if (peek() == '/') {
                take();
                den = parse_integer();
                if (den == 0) fail("zero denominator", pos_);
            }
            coef = make_rat(num, den);
            if (peek() != '*') fail("expected '*' after coefficient", pos_);
            take();
        }
        std::vector<int> exps(kMaxVariables, 0);
        parse_factor(exps, max_index);
        while (peek() == '*') {
            take();
            parse_factor(exps, max_index);
        }
        Rat& slot = terms[exps];
        slot += coef * sign;
    }

    void parse_factor(std::vector<int>& exps, int& max_index) {
        skip_ws();
        std::size_t at = pos_;
        char c = take();
        if (c != 'x') fail("expected variable 'x<index>'", at);
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected variable index", pos_);
        long idx = parse_plain_number("variable index");
        if (idx >= kMaxVariables)
            fail_user("TooManyVariables", "variable index " + std::to_string(idx) +
                                              " exceeds the 10-variable limit");
        long exp = 1;
        if (peek() == '^') {
            take();
            exp = parse_plain_number("exponent");
        }
        exps[static_cast<std::size_t>(idx)] += static_cast<int>(exp);
        max_index = std::max(max_index, static_cast<int>(idx));
    }
};

}  // namespace

Form parse_form(std::string_view text, std::optional<int> nvars) {
    int max_index = -1;
    FormParser parser(text);
    auto terms = parser.run(max_index);

    int n = nvars.value_or(max_index + 1);
    require_user(n >= 1 && n <= kMaxVariables, "TooManyVariables",
                 "forms support 1 to 10 variables");
    require_user(max_index < n, "TooManyVariables",
                 "variable index exceeds the requested variable count");

    long d = -1;
    for (const auto& [exps, coef] : terms) {
        long deg = 0;
        for (int i = 0; i < n; ++i) deg += exps[static_cast<std::size_t>(i)];
        if (d == -1)
            d = deg;
        else
            require_user(deg == d, "InhomogeneousInput",
                         "terms of degree " + std::to_string(d) + " and " + std::to_string(deg) +
                             " mixed");
    }
    require_user(d >= 1, "DegreeOutOfRange", "constant input is not a form");

    Form f(n, d);
    for (const auto& [exps, coef] : terms) {
        if (coef == 0) continue;
        std::vector<int> e(exps.begin(), exps.begin() + n);
        f.add_monomial_coeff(Monomial(std::move(e)), coef);
    }
    return f;
}

std::string format_form(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, b] : f.terms()) {
        Rat c = b * Rat(multinomial(m.exponents()));
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool has_vars = m.degree() > 0;
        if (c != 1 || !has_vars) {
            os << rat_to_string(c);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace apolar
