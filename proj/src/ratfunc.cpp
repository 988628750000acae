#include "malp/ratfunc.hpp"

#include <stdexcept>

namespace malp {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rational(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    num_.require_same_vars(den_);
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars(), Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        /* cancel when one side exactly divides the other; no full gcd */
        if (auto q = divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = Polynomial::constant(num_.vars(), Rational(1));
        } else if (auto p = divide_exact(den_, num_)) {
            den_ = std::move(*p);
            num_ = Polynomial::constant(den_.vars(), Rational(1));
        }
    }
    Rational c = den_.content();
    if (!c.is_one()) {
        Rational inv = c.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero())
        return RationalFunction::constant(a.vars(), Rational(0));
    /* cancel structurally equal cross factors; no polynomial gcd beyond this */
    if (a.num_ == b.den_) return RationalFunction(b.num_, a.den_);
    if (b.num_ == a.den_) return RationalFunction(a.num_, b.den_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
    RationalFunction r = *this;
    r.num_ = r.num_ * c;
    if (c.is_zero()) r.den_ = Polynomial::constant(vars(), Rational(1));
    return r;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("zero to a negative power");
        return RationalFunction(den_, num_).pow(-e);
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::diff(const std::string& var) const {
    Polynomial dn = num_.diff(var) * den_ - num_ * den_.diff(var);
    return RationalFunction(std::move(dn), den_ * den_);
}

bool RationalFunction::depends_on(const std::string& var) const {
    if (!num_.depends_on(var) && !den_.depends_on(var)) return false;
    return !(num_.diff(var) * den_ - num_ * den_.diff(var)).is_zero();
}

std::optional<Rational> RationalFunction::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) / d;
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::constant(vars(), Rational(1))) return num_.str();
    return "(" + num_.str() + ") : (" + den_.str() + ")";
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

RationalFunction substitute(const Polynomial& p, const std::vector<std::string>& target_vars,
                            const std::map<std::string, RationalFunction>& subs) {
    std::vector<RationalFunction> images;
    images.reserve(p.vars().size());
    for (const auto& v : p.vars()) {
        auto it = subs.find(v);
        if (it == subs.end())
            throw std::invalid_argument("substitution misses variable: " + v);
        if (it->second.vars() != target_vars)
            throw std::invalid_argument("substitution image on wrong variable list for: " + v);
        images.push_back(it->second);
    }
    RationalFunction acc = RationalFunction::constant(target_vars, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        RationalFunction t = RationalFunction::constant(target_vars, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t *= images[i].pow(static_cast<long>(m[i]));
        acc += t;
    }
    return acc;
}

RationalFunction substitute(const RationalFunction& f, const std::vector<std::string>& target_vars,
                            const std::map<std::string, RationalFunction>& subs) {
    RationalFunction n = substitute(f.num(), target_vars, subs);
    RationalFunction d = substitute(f.den(), target_vars, subs);
    if (d.is_zero())
        throw std::domain_error("substitution hits a pole: denominator vanishes identically");
    return n / d;
}

}  // namespace malp
