#include "desing/parse.hpp"

#include <cctype>
#include <sstream>

namespace desing {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
  public:
    Lexer(const std::string& s, std::size_t line0, std::size_t col0) : s_(s), line_(line0), col_(col0) {}

    Token next() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) advance();
        if (pos_ >= s_.size()) return {Tok::End, "", line_, col_};
        std::size_t line = line_, col = col_;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_];
                advance();
            }
            return {Tok::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '@' ||
                    s_[pos_] == '.')) {
                name += s_[pos_];
                advance();
            }
            return {Tok::Name, name, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Tok::Plus, "+", line, col};
            case '-': return {Tok::Minus, "-", line, col};
            case '*': return {Tok::Star, "*", line, col};
            case '^': return {Tok::Caret, "^", line, col};
            case '/': return {Tok::Slash, "/", line, col};
            case '(': return {Tok::LParen, "(", line, col};
            case ')': return {Tok::RParen, ")", line, col};
            default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_;
};

class PolyParser {
  public:
    PolyParser(const std::string& text, RingPtr ring, std::size_t line0, std::size_t col0)
        : lexer_(text, line0, col0), ring_(std::move(ring)) {
        cur_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (cur_.kind != Tok::End) throw ParseError(cur_.line, cur_.col, "trailing input '" + cur_.text + "'");
        return p;
    }

  private:
    void bump() { cur_ = lexer_.next(); }

    Polynomial expr() {
        Polynomial p(ring_);
        bool negate = false;
        if (cur_.kind == Tok::Minus) {
            negate = true;
            bump();
        } else if (cur_.kind == Tok::Plus) {
            bump();
        }
        Polynomial t = term();
        p = negate ? -t : t;
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            bump();
            Polynomial u = term();
            p = minus ? p - u : p + u;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (cur_.kind == Tok::Star) {
            bump();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (cur_.kind == Tok::Caret) {
            bump();
            bool neg = false;
            if (cur_.kind == Tok::Minus) {
                neg = true;
                bump();
            }
            if (cur_.kind != Tok::Number)
                throw ParseError(cur_.line, cur_.col, "expected an integer exponent");
            long e = std::stol(cur_.text);
            bump();
            if (neg) {
                if (!base.single_term())
                    throw ParseError(cur_.line, cur_.col, "negative exponent of a non-monomial");
                const auto& [ex, c] = *base.terms().begin();
                Exp inv(ex);
                for (long& v : inv) v = -v;
                base = Polynomial::monomial(ring_, inv, c.inverse()).pow(static_cast<unsigned long>(e));
            } else {
                base = base.pow(static_cast<unsigned long>(e));
            }
        }
        return base;
    }

    Polynomial atom() {
        if (cur_.kind == Tok::Number) {
            mpz_class num(cur_.text);
            bump();
            if (cur_.kind == Tok::Slash) {
                bump();
                if (cur_.kind != Tok::Number)
                    throw ParseError(cur_.line, cur_.col, "expected a denominator");
                mpz_class den(cur_.text);
                bump();
                if (den == 0) throw ParseError(cur_.line, cur_.col, "zero denominator");
                return Polynomial::constant(ring_, Scalar(ring_->field, mpq_class(num, den)));
            }
            return Polynomial::constant(ring_, Scalar(ring_->field, num));
        }
        if (cur_.kind == Tok::Name) {
            long idx = ring_->index_of(cur_.text);
            if (idx < 0) throw ParseError(cur_.line, cur_.col, "unknown variable '" + cur_.text + "'");
            bump();
            return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
        }
        if (cur_.kind == Tok::LParen) {
            bump();
            Polynomial p = expr();
            if (cur_.kind != Tok::RParen) throw ParseError(cur_.line, cur_.col, "expected ')'");
            bump();
            return p;
        }
        if (cur_.kind == Tok::Minus) {
            bump();
            return -factor();
        }
        throw ParseError(cur_.line, cur_.col,
                         cur_.kind == Tok::End ? "unexpected end of expression"
                                               : "unexpected token '" + cur_.text + "'");
    }

    Lexer lexer_;
    RingPtr ring_;
    Token cur_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, std::size_t line0,
                            std::size_t col0) {
    return PolyParser(text, ring, line0, col0).parse();
}

ProblemSpec parse_problem(const std::string& text) {
    ProblemSpec spec;
    bool have_char = false, have_vars = false, have_b = false;
    std::string b_text;
    std::size_t b_line = 0, b_col = 1;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, start + 1, "expected 'key: value'");
        std::string key = line.substr(start, colon - start);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value.back() == '\r') value.pop_back();
        std::size_t vstart = value.find_first_not_of(" \t");
        value = vstart == std::string::npos ? "" : value.substr(vstart);

        if (key == "char") {
            long p;
            try {
                p = std::stol(value);
            } catch (...) {
                throw ParseError(lineno, colon + 2, "characteristic must be an integer");
            }
            if (p < 0) throw ParseError(lineno, colon + 2, "characteristic must be non-negative");
            try {
                spec.field = FieldSpec(static_cast<unsigned long>(p));
            } catch (const error& e) {
                throw ParseError(lineno, colon + 2, e.what());
            }
            have_char = true;
        } else if (key == "vars") {
            std::istringstream vs(value);
            std::string name;
            while (vs >> name) spec.var_names.push_back(name);
            if (spec.var_names.empty()) throw ParseError(lineno, colon + 2, "no variables declared");
            have_vars = true;
        } else if (key == "b") {
            b_text = value;
            b_line = lineno;
            b_col = colon + 2 + (vstart == std::string::npos ? 0 : vstart);
            have_b = true;
        } else if (key == "maxdepth") {
            spec.max_depth = std::stol(value);
        } else if (key == "seriesorder") {
            spec.series_order = std::stol(value);
        } else {
            throw ParseError(lineno, start + 1, "unknown key '" + key + "'");
        }
    }
    if (!have_char) throw ParseError(lineno + 1, 1, "missing 'char:' line");
    if (!have_vars) throw ParseError(lineno + 1, 1, "missing 'vars:' line");
    if (!have_b) throw ParseError(lineno + 1, 1, "missing 'b:' line");

    RingPtr ring = make_ring(spec.field, {}, spec.var_names);
    spec.b_text = b_text;
    spec.b = parse_polynomial(b_text, ring, b_line, b_col);
    if (spec.b.is_zero()) throw ParseError(b_line, 1, "b must be a nonzero polynomial");
    return spec;
}

}  // namespace desing
