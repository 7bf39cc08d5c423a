#include "hsurf/parse.hpp"

#include <cctype>

namespace hsurf {

namespace {

enum class Tok { Integer, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;  // integer digits or variable name
    size_t var_index = 0;
    int line = 1, column = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, size_t nvars) : text_(text), nvars_(nvars) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg, int line, int col) const { throw ParseError(msg, line, col); }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_.line = line_;
        current_.column = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            current_.text.clear();
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Tok::Plus; break;
            case '-': current_.kind = Tok::Minus; break;
            case '*': current_.kind = Tok::Star; break;
            case '/': current_.kind = Tok::Slash; break;
            case '^': current_.kind = Tok::Caret; break;
            case '(': current_.kind = Tok::LParen; break;
            case ')': current_.kind = Tok::RParen; break;
            default:
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    size_t start = pos_;
                    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                        ++pos_;
                        ++col_;
                    }
                    current_.kind = Tok::Integer;
                    current_.text = text_.substr(start, pos_ - start);
                    return;
                }
                if (std::isalpha(static_cast<unsigned char>(c))) {
                    size_t start = pos_;
                    while (pos_ < text_.size() &&
                           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                        ++pos_;
                        ++col_;
                    }
                    lex_variable(text_.substr(start, pos_ - start));
                    return;
                }
                fail(std::string("unexpected character '") + c + "'", line_, col_);
        }
        current_.text = c;
        ++pos_;
        ++col_;
    }

    void lex_variable(const std::string& name) {
        size_t idx;
        if (name == "x") {
            idx = 0;
        } else if (name == "y") {
            idx = 1;
        } else if (name == "z") {
            idx = 2;
        } else if (name == "w") {
            idx = 3;
        } else if (name.size() >= 2 && name[0] == 'x') {
            idx = 0;
            for (size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i])))
                    throw ParseError("unknown identifier '" + name + "'", current_.line, current_.column);
                idx = idx * 10 + static_cast<size_t>(name[i] - '0');
            }
        } else {
            throw ParseError("unknown identifier '" + name + "'", current_.line, current_.column);
        }
        if (idx >= nvars_)
            throw ParseError("variable '" + name + "' exceeds the declared " + std::to_string(nvars_) +
                                 " variables",
                             current_.line, current_.column);
        current_.kind = Tok::Variable;
        current_.text = name;
        current_.var_index = idx;
    }

    const std::string& text_;
    size_t nvars_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

// Value domain of the parser: unreduced polynomial fractions.
struct Frac {
    Polynomial num, den;
};

class Parser {
public:
    Parser(const std::string& text, size_t nvars, FieldSpec field)
        : lex_(text, nvars), nvars_(nvars), field_(field) {}

    Frac run() {
        Frac v = expression(0);
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.line, t.column);
        return v;
    }

private:
    static int precedence(Tok k) {
        switch (k) {
            case Tok::Plus:
            case Tok::Minus: return 10;
            case Tok::Star:
            case Tok::Slash: return 20;
            default: return -1;
        }
    }
    static constexpr int kUnaryPrec = 25;

    Frac expression(int min_prec) {
        Frac lhs = unary();
        for (;;) {
            Tok k = lex_.peek().kind;
            int prec = precedence(k);
            if (prec < min_prec) return lhs;
            Token op = lex_.take();
            Frac rhs = expression(prec + 1);  // left associative
            switch (k) {
                case Tok::Plus:
                    lhs = {lhs.num * rhs.den + rhs.num * lhs.den, lhs.den * rhs.den};
                    break;
                case Tok::Minus:
                    lhs = {lhs.num * rhs.den - rhs.num * lhs.den, lhs.den * rhs.den};
                    break;
                case Tok::Star:
                    lhs = {lhs.num * rhs.num, lhs.den * rhs.den};
                    break;
                case Tok::Slash:
                    if (rhs.num.is_zero())
                        throw ParseError("division by zero", op.line, op.column);
                    lhs = {lhs.num * rhs.den, lhs.den * rhs.num};
                    break;
                default: return lhs;
            }
        }
    }

    Frac unary() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::Minus) {
            lex_.take();
            Frac v = expression(kUnaryPrec);
            return {-v.num, v.den};
        }
        if (t.kind == Tok::Plus) {
            Token op = lex_.take();
            // a leading '+' is noise the grammar rejects: "x0^2 + + x1"
            throw ParseError("unexpected '+'", op.line, op.column);
        }
        return power();
    }

    Frac power() {
        Frac base = primary();
        while (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token e = lex_.peek();
            if (e.kind != Tok::Integer)
                throw ParseError("exponent must be a non-negative integer literal", e.line, e.column);
            lex_.take();
            unsigned long exp = 0;
            try {
                exp = std::stoul(e.text);
            } catch (const std::out_of_range&) {
                throw ParseError("exponent out of range", e.line, e.column);
            }
            if (exp > 100000) throw ParseError("exponent out of range", e.line, e.column);
            base = {base.num.pow(static_cast<uint32_t>(exp)), base.den.pow(static_cast<uint32_t>(exp))};
        }
        return base;
    }

    Frac primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Integer:
                return {Polynomial::constant(field_, nvars_, FieldElement(field_, mpz_class(t.text))),
                        Polynomial::constant(field_, nvars_, 1)};
            case Tok::Variable:
                return {Polynomial::variable(field_, nvars_, t.var_index),
                        Polynomial::constant(field_, nvars_, 1)};
            case Tok::LParen: {
                Frac v = expression(0);
                Token close = lex_.take();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.line, close.column);
                return v;
            }
            default:
                throw ParseError("unexpected '" + (t.kind == Tok::End ? std::string("end of input") : t.text) +
                                     "'",
                                 t.line, t.column);
        }
    }

    Lexer lex_;
    size_t nvars_;
    FieldSpec field_;
};

} // namespace

std::pair<Polynomial, Polynomial> parse_fraction(const std::string& text, size_t nvars, FieldSpec field) {
    Parser p(text, nvars, field);
    Frac v = p.run();
    return {std::move(v.num), std::move(v.den)};
}

Polynomial parse_polynomial(const std::string& text, size_t nvars, FieldSpec field) {
    auto [num, den] = parse_fraction(text, nvars, field);
    if (!den.is_constant() || den.is_zero())
        throw ParseError("expression is not a polynomial: non-constant denominator", 1, 1);
    return num.scaled(den.leading_coefficient().inverse());
}

} // namespace hsurf
