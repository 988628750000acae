#include "malp/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace malp {

Tokenizer::Tokenizer(const std::string& src) : src_(src) {
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            tokens_.push_back({Token::Number, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            tokens_.push_back({Token::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*^():/").find(c) != std::string::npos) {
            tokens_.push_back({Token::Op, std::string(1, c), i});
            ++i;
            continue;
        }
        throw std::runtime_error("unexpected character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i));
    }
    tokens_.push_back({Token::End, "", src.size()});
}

bool Tokenizer::accept_op(const std::string& op) {
    if (peek().kind == Token::Op && peek().text == op) {
        next();
        return true;
    }
    return false;
}

void Tokenizer::expect_op(const std::string& op) {
    if (!accept_op(op)) fail("expected '" + op + "'");
}

void Tokenizer::fail(const std::string& msg) const {
    throw std::runtime_error("parse error at position " + std::to_string(peek().pos) + ": " + msg +
                             " (near '" + (peek().kind == Token::End ? "<end>" : peek().text) + "')");
}

ScalarParser::ScalarParser(Tokenizer& t, std::vector<std::string> vars,
                           std::function<bool(const std::string&)> stop_at_ident)
    : t_(t), vars_(std::move(vars)), stop_(std::move(stop_at_ident)) {}

bool ScalarParser::at_stop_ident() const {
    return stop_ && t_.peek().kind == Token::Ident && stop_(t_.peek().text);
}

RationalFunction ScalarParser::parse_input() {
    RationalFunction n = parse_expr();
    if (t_.accept_op(":")) {
        RationalFunction d = parse_expr();
        if (d.is_zero()) t_.fail("division by zero expression");
        return n / d;
    }
    return n;
}

RationalFunction ScalarParser::parse_expr() {
    bool neg = t_.accept_op("-");
    RationalFunction acc = parse_term();
    if (neg) acc = -acc;
    while (true) {
        if (t_.accept_op("+")) acc += parse_term();
        else if (t_.peek().kind == Token::Op && t_.peek().text == "-" && !at_stop_ident()) {
            t_.next();
            acc -= parse_term();
        } else {
            break;
        }
    }
    return acc;
}

RationalFunction ScalarParser::parse_term() {
    RationalFunction acc = parse_factor();
    while (t_.accept_op("*")) acc *= parse_factor();
    return acc;
}

RationalFunction ScalarParser::parse_factor() {
    const Token& tk = t_.peek();
    if (tk.kind == Token::Number) {
        t_.next();
        mpz_class num(tk.text), den(1);
        if (t_.peek().kind == Token::Op && t_.peek().text == "/" &&
            t_.peek2().kind == Token::Number) {
            t_.next();
            den = mpz_class(t_.next().text);
            if (den == 0) t_.fail("zero denominator in rational literal");
        }
        return RationalFunction::constant(vars_, Rational(num, den));
    }
    if (tk.kind == Token::Ident) {
        if (at_stop_ident()) t_.fail("generator not allowed inside a scalar expression");
        t_.next();
        for (const auto& v : vars_)
            if (v == tk.text) {
                RationalFunction x = RationalFunction::variable(vars_, tk.text);
                if (t_.peek().kind == Token::Op && t_.peek().text == "^" &&
                    t_.peek2().kind == Token::Number) {
                    t_.next();
                    unsigned long e = std::stoul(t_.next().text);
                    return x.pow(static_cast<long>(e));
                }
                return x;
            }
        t_.fail("unknown variable '" + tk.text + "'");
    }
    if (t_.accept_op("(")) {
        RationalFunction e = parse_input();
        t_.expect_op(")");
        if (t_.peek().kind == Token::Op && t_.peek().text == "^" &&
            t_.peek2().kind == Token::Number) {
            t_.next();
            unsigned long ex = std::stoul(t_.next().text);
            return e.pow(static_cast<long>(ex));
        }
        return e;
    }
    t_.fail("expected a factor");
    return RationalFunction();  // unreachable
}

RationalFunction parse_scalar(const std::vector<std::string>& vars, const std::string& src) {
    Tokenizer t(src);
    ScalarParser p(t, vars);
    RationalFunction r = p.parse_input();
    if (t.peek().kind != Token::End) t.fail("trailing input");
    return r;
}

Polynomial parse_poly(const std::vector<std::string>& vars, const std::string& src) {
    RationalFunction r = parse_scalar(vars, src);
    if (!r.den().is_constant())
        throw std::runtime_error("expected a polynomial, got a non-constant denominator: " + src);
    Rational d = r.den().constant_value();
    return r.num() * d.inverse();
}

}  // namespace malp
