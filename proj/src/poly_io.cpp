#include "polydiff/poly_io.hpp"

#include <cctype>
#include <stdexcept>

namespace polydiff {

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int v = 0; v < nvars; ++v) names.push_back("x" + std::to_string(v));
    return names;
}

std::string print_poly(const Poly& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.nvars())
        throw std::invalid_argument("print_poly: name count mismatch");
    if (p.is_zero()) return "0";

    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string mon;
        for (int v = 0; v < p.nvars(); ++v) {
            if (e[v] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += names[v];
            if (e[v] > 1) mon += "^" + std::to_string(e[v]);
        }

        GaussRat k = c;
        std::string sign = first ? "" : " + ";
        if (c.is_real() && c.re < 0) {
            sign = first ? "-" : " - ";
            k = -k;
        }
        std::string coef;
        if (k.is_real()) {
            if (!(k.re == 1) || mon.empty()) coef = to_string(k.re);
        } else {
            coef = to_string(k);  // parenthesized complex
        }

        out += sign;
        if (!coef.empty()) out += coef;
        if (!mon.empty()) {
            if (!coef.empty()) out += "*";
            out += mon;
        }
        first = false;
    }
    return out;
}

std::string print_poly(const Poly& p) { return print_poly(p, default_var_names(p.nvars())); }

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& names)
        : s_(s), names_(names), nvars_(static_cast<int>(names.size())) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    Poly expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Poly t = term();
            if (c == '-') acc -= t; else acc += t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            acc *= factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            unsigned k = read_uint();
            Poly acc = Poly::constant(nvars_, GaussRat(1));
            for (unsigned j = 0; j < k; ++j) acc *= base;
            return acc;
        }
        return base;
    }

    Poly primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Poly p = expr();
            skip_ws();
            if (get() != ')') fail("expected )");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat num(Int(read_digits()), 1);
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                Int den(read_digits());
                if (den == 0) fail("zero denominator");
                num = Rat(numerator(num), den);
            }
            return Poly::constant(nvars_, GaussRat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = read_ident();
            if (id == "i") return Poly::constant(nvars_, GaussRat::i());
            for (int v = 0; v < nvars_; ++v)
                if (names_[v] == id) return Poly::variable(nvars_, v);
            fail("unknown variable '" + id + "'");
        }
        fail("unexpected character");
        return Poly(nvars_);  // unreachable
    }

    std::string read_digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected number");
        return s_.substr(start, pos_ - start);
    }

    unsigned read_uint() { return static_cast<unsigned>(std::stoul(read_digits())); }

    std::string read_ident() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) +
                                    " in \"" + s_ + "\"");
    }

    const std::string& s_;
    const std::vector<std::string>& names_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).run();
}

}  // namespace polydiff
