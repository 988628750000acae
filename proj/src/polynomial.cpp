#include "malp/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace malp {

void Polynomial::require_same_vars(const Polynomial& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("polynomial arithmetic across different variable lists");
}

std::size_t Polynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw std::invalid_argument("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

Polynomial Polynomial::constant(const std::vector<std::string>& vars, const Rational& c) {
    Polynomial p(vars);
    p.add_term(Monomial(vars.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, const std::string& name) {
    Polynomial p(vars);
    Monomial m(vars.size(), 0);
    m[p.var_index(name)] = 1;
    p.add_term(m, Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_vars(b);
    Polynomial r(a.vars_);
    Monomial m(a.vars_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(vars_, Rational(1));
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Polynomial Polynomial::diff(const std::string& var) const {
    std::size_t i = var_index(var);
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(m[i])));
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t *= point[i].pow(static_cast<long>(m[i]));
        acc += t;
    }
    return acc;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g(0), l(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    Rational r{g, l};
    return leading_coefficient().sign() < 0 ? -r : r;
}

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (auto e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

unsigned Polynomial::degree_in(const std::string& var) const {
    std::size_t i = var_index(var);
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

bool Polynomial::depends_on(const std::string& var) const {
    std::size_t i = var_index(var);
    for (const auto& [m, c] : terms_) if (m[i] > 0) return true;
    return false;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    /* descending lex, leading term first; format re-parses under the scalar grammar */
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
    num.require_same_vars(den);
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.is_zero()) return Polynomial::constant(num.vars(), Rational(0));
    const auto& [dm, dc] = *den.terms().rbegin();
    Polynomial q(num.vars());
    Polynomial r = num;
    /* num is a multiple of den iff every intermediate difference is, and the
     * lex-leading monomial of a multiple is divisible by the divisor's */
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().rbegin();
        Monomial t(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            t[i] = rm[i] - dm[i];
        }
        Polynomial mono(num.vars());
        mono.add_term(t, rc / dc);
        q += mono;
        r -= mono * den;
    }
    return q;
}

}  // namespace malp
