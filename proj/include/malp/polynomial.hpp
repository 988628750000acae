#pragma once

/*
 * Sparse multivariate polynomials over Rational. A polynomial is tied to an
 * ordered variable list; arithmetic between polynomials on different lists is
 * an error. Terms live in a std::map keyed by exponent vector, so the term
 * order (lex, ascending) is canonical and equality is structural.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "malp/rational.hpp"

namespace malp {

using Monomial = std::vector<std::uint32_t>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const std::vector<std::string>& vars, const Rational& c);
    static Polynomial variable(const std::vector<std::string>& vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* constant term; the whole value when is_constant() */
    Rational constant_value() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial diff(const std::string& var) const;
    Rational eval(const std::vector<Rational>& point) const;

    /* gcd of coefficient numerators over lcm of denominators, sign of the
     * lex-leading coefficient; zero polynomial has content 0 */
    Rational content() const;
    Rational leading_coefficient() const;
    unsigned total_degree() const;
    unsigned degree_in(const std::string& var) const;
    bool depends_on(const std::string& var) const;

    std::string str() const;

    void require_same_vars(const Polynomial& o) const;
    std::size_t var_index(const std::string& name) const;

private:
    std::vector<std::string> vars_;
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/* exact quotient num/den under the lex term order, or nullopt when den does
 * not divide num; throws on a zero divisor */
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

}  // namespace malp
