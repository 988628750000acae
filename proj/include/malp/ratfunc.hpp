#pragma once

/*
 * Rational functions P/Q over a shared variable list. Reduction is by content
 * only: Q is kept primitive with positive leading coefficient and never
 * polynomial-gcd'd against P, so structural equality of two values is not a
 * complete equality test. is_zero() is exact (P == 0); use equivalent() for
 * general equality, which cross-multiplies.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "malp/polynomial.hpp"

namespace malp {

class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(const std::vector<std::string>& vars, const Rational& c) {
        return RationalFunction(Polynomial::constant(vars, c));
    }
    static RationalFunction variable(const std::vector<std::string>& vars, const std::string& name) {
        return RationalFunction(Polynomial::variable(vars, name));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction operator*(const Rational& c) const;
    RationalFunction pow(long e) const;

    /* structural; see equivalent() for mathematical equality */
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction diff(const std::string& var) const;
    /* exact partial-derivative test, immune to unreduced common factors */
    bool depends_on(const std::string& var) const;
    std::optional<Rational> eval(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    void normalize();

    Polynomial num_, den_;
};

/* a/b == c/d by cross multiplication */
bool equivalent(const RationalFunction& a, const RationalFunction& b);

/* full substitution: every variable of p is replaced by the rational function
 * subs[i] over the target list; used by pullbacks and chart changes */
RationalFunction substitute(const Polynomial& p, const std::vector<std::string>& target_vars,
                            const std::map<std::string, RationalFunction>& subs);
RationalFunction substitute(const RationalFunction& f, const std::vector<std::string>& target_vars,
                            const std::map<std::string, RationalFunction>& subs);

inline RationalFunction ring_zero(const RationalFunction& like) {
    return RationalFunction::constant(like.vars(), Rational(0));
}
inline RationalFunction ring_one(const RationalFunction& like) {
    return RationalFunction::constant(like.vars(), Rational(1));
}

}  // namespace malp
