#pragma once

/*
 * Recursive-descent parser for the scalar expression grammar
 *
 *   input    := expr [':' expr]            top-level division
 *   expr     := ['-'] term (('+'|'-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := name ('^' uint)? | '(' input ')' ('^' uint)? | rational
 *   rational := uint ('/' uint)?
 *
 * Parenthesized subexpressions may themselves carry a ':' division, which is
 * how non-constant denominators are written inside larger expressions. The
 * same tokenizer drives the differential-form grammar in io.cpp; a generator
 * predicate makes expression parsing stop in front of d<coordinate> tokens.
 */

#include <functional>
#include <string>
#include <vector>

#include "malp/ratfunc.hpp"

namespace malp {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

class Tokenizer {
public:
    explicit Tokenizer(const std::string& src);
    const Token& peek() const { return tokens_[i_]; }
    const Token& peek2() const { return tokens_[std::min(i_ + 1, tokens_.size() - 1)]; }
    Token next() { return tokens_[std::min(i_++, tokens_.size() - 1)]; }
    bool accept_op(const std::string& op);
    void expect_op(const std::string& op);
    [[noreturn]] void fail(const std::string& msg) const;

private:
    std::vector<Token> tokens_;
    std::size_t i_ = 0;
    std::string src_;
};

class ScalarParser {
public:
    /* stop_at_ident: tokens satisfying it terminate expression context
     * (used for d<coord> generators in form expressions) */
    ScalarParser(Tokenizer& t, std::vector<std::string> vars,
                 std::function<bool(const std::string&)> stop_at_ident = nullptr);

    RationalFunction parse_input();
    RationalFunction parse_expr();
    RationalFunction parse_term();

private:
    RationalFunction parse_factor();
    bool at_stop_ident() const;

    Tokenizer& t_;
    std::vector<std::string> vars_;
    std::function<bool(const std::string&)> stop_;
};

RationalFunction parse_scalar(const std::vector<std::string>& vars, const std::string& src);
Polynomial parse_poly(const std::vector<std::string>& vars, const std::string& src);

}  // namespace malp
