#include "hilbert10/parse.hpp"

#include <cctype>
#include <limits>

namespace h10 {

namespace {

enum class Tok : unsigned char { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    BigInt number;     // Int
    VarIndex var = 0;  // Var
    std::size_t line = 1;
    std::size_t column = 1;
    char lexeme = '\0';
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        const char c = text_[pos_];
        t.lexeme = c;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Int;
            t.number = BigInt(take_digits(), 10);
            return t;
        }
        if (c == 'a') {
            bump();
            t.kind = Tok::Var;
            t.var = 0;
            return t;
        }
        if (c == 'z' || c == 'x') {
            bump();
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(std::string("expected digits after '") + c + "'", t.line,
                                 t.column);
            const std::string digits = take_digits();
            const BigInt idx(digits, 10);
            if (idx > std::numeric_limits<VarIndex>::max())
                throw ParseError("variable index out of range", t.line, t.column);
            t.kind = Tok::Var;
            t.var = static_cast<VarIndex>(idx.get_ui());
            return t;
        }
        switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '^': t.kind = Tok::Caret; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", t.line,
                                 t.column);
        }
        bump();
        return t;
    }

  private:
    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
    }

    std::string take_digits() {
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            bump();
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    Expr run() {
        Expr p = poly();
        if (cur_.kind != Tok::End) fail("expected end of input");
        return p;
    }

  private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& msg) const {
        std::string got;
        switch (cur_.kind) {
            case Tok::End: got = "end of input"; break;
            case Tok::Int: got = "number"; break;
            case Tok::Var: got = "variable"; break;
            default: got = std::string("'") + cur_.lexeme + "'"; break;
        }
        throw ParseError(msg + ", got " + got, cur_.line, cur_.column);
    }

    Expr poly() {
        std::vector<Expr> parts;
        parts.push_back(term());
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const bool minus = cur_.kind == Tok::Minus;
            advance();
            Expr t = term();
            parts.push_back(minus ? negate(std::move(t)) : std::move(t));
        }
        return Expr::add(std::move(parts));
    }

    Expr term() {
        std::vector<Expr> parts;
        parts.push_back(factor());
        while (cur_.kind == Tok::Star) {
            advance();
            parts.push_back(factor());
        }
        return Expr::mul(std::move(parts));
    }

    Expr factor() {
        bool minus = false;
        if (cur_.kind == Tok::Minus) {
            minus = true;
            advance();
        }
        Expr b = base();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Int) fail("expected exponent");
            BigInt e = cur_.number;
            advance();
            b = Expr::pow(std::move(b), std::move(e));
        }
        return minus ? negate(std::move(b)) : b;
    }

    Expr base() {
        switch (cur_.kind) {
            case Tok::Int: {
                Expr e = Expr::constant(cur_.number);
                advance();
                return e;
            }
            case Tok::Var: {
                Expr e = Expr::variable(cur_.var);
                advance();
                return e;
            }
            case Tok::LParen: {
                advance();
                Expr inner = poly();
                if (cur_.kind != Tok::RParen) fail("expected ')'");
                advance();
                return inner;
            }
            default:
                fail("expected number, variable or '('");
        }
    }

    static Expr negate(Expr e) {
        if (e.kind() == Expr::Kind::Const) return Expr::constant(-e.value());
        return Expr::mul({Expr::constant(-1), std::move(e)});
    }

    Lexer lexer_;
    Token cur_;
};

std::string var_name(VarIndex v) {
    return v == 0 ? std::string("a") : "z" + std::to_string(v);
}

}  // namespace

Expr parse_poly(std::string_view text) { return Parser(text).run(); }

std::string print_poly(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const BigInt mag = abs(c);
        bool need_star = false;
        if (mag != 1 || m.is_unit()) {
            out += to_string(mag);
            need_star = true;
        }
        for (const auto& [v, e] : m.pairs()) {
            if (need_star) out += '*';
            out += var_name(v);
            if (e != 1) {
                out += '^';
                out += std::to_string(e);
            }
            need_star = true;
        }
    }
    return out;
}

}  // namespace h10
