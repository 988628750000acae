#pragma once

/*
 * Symbolic differential forms, vector fields, and point maps on named
 * coordinate charts, with rational-function coefficients. A chart fixes an
 * ordered list of distinct coordinate names; every scalar attached to the
 * chart is a RationalFunction over exactly that variable list, so arithmetic
 * between objects on different charts is rejected. Form terms reuse the
 * alternating-form machinery of forms_core.hpp with 1-based coordinate
 * indices.
 */

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "malp/forms_core.hpp"
#include "malp/ratfunc.hpp"

namespace malp {

class Chart {
public:
    Chart() = default;
    /* names must be nonempty and pairwise distinct */
    explicit Chart(std::vector<std::string> names);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    bool has(const std::string& n) const { return index_.count(n) != 0; }
    /* 0-based position; throws std::out_of_range for foreign names */
    std::size_t index_of(const std::string& n) const;

    RationalFunction coordinate(const std::string& n) const;
    RationalFunction constant(const Rational& c) const {
        return RationalFunction::constant(names_, c);
    }
    RationalFunction zero() const { return constant(Rational(0)); }
    RationalFunction one() const { return constant(Rational(1)); }

    friend bool operator==(const Chart& a, const Chart& b) { return a.names_ == b.names_; }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

/* degree-k form; degree 0 is a plain function stored at the empty tuple */
class DiffForm {
public:
    DiffForm() = default;
    DiffForm(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {}
    static DiffForm function(const Chart& chart, const RationalFunction& f);

    const Chart& chart() const { return chart_; }
    std::size_t degree() const { return degree_; }
    const TermMap<RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /* idx must be strictly increasing 1-based positions of size degree */
    void set_term(const IndexTuple& idx, const RationalFunction& c);
    /* idx may be any permutation; the alternating sign is applied */
    void add_term(const IndexTuple& idx, const RationalFunction& c);
    RationalFunction coefficient(const IndexTuple& idx) const;

    DiffForm operator-() const;
    friend DiffForm operator+(const DiffForm& a, const DiffForm& b);
    friend DiffForm operator-(const DiffForm& a, const DiffForm& b);
    DiffForm operator*(const RationalFunction& s) const;
    DiffForm operator*(const Rational& s) const;

    friend bool operator==(const DiffForm& a, const DiffForm& b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

    std::string str() const;

private:
    void check_tuple(const IndexTuple& idx) const;

    Chart chart_;
    std::size_t degree_ = 0;
    TermMap<RationalFunction> terms_;
};

class VecField {
public:
    VecField() = default;
    VecField(Chart chart, std::vector<RationalFunction> components);
    static VecField zero(const Chart& chart);

    const Chart& chart() const { return chart_; }
    const std::vector<RationalFunction>& components() const { return comps_; }
    const RationalFunction& component(const std::string& name) const;
    void set_component(const std::string& name, const RationalFunction& c);

    /* directional derivative sum_i v_i df/dx_i */
    RationalFunction apply(const RationalFunction& f) const;

    VecField operator-() const;
    friend VecField operator+(const VecField& a, const VecField& b);
    friend VecField operator-(const VecField& a, const VecField& b);
    VecField operator*(const RationalFunction& s) const;
    bool is_zero() const;

    friend bool operator==(const VecField& a, const VecField& b) {
        return a.chart_ == b.chart_ && a.comps_ == b.comps_;
    }

    std::string str() const;

private:
    Chart chart_;
    std::vector<RationalFunction> comps_;
};

/* map between charts, one source-variable expression per target coordinate */
class PointMap {
public:
    PointMap() = default;
    PointMap(Chart source, Chart target, std::vector<RationalFunction> components);
    PointMap(Chart source, Chart target, const std::map<std::string, RationalFunction>& components);
    static PointMap identity(const Chart& chart);

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const std::vector<RationalFunction>& components() const { return comps_; }
    const RationalFunction& component(const std::string& target_name) const;

    /* image of a rational point; throws on a coefficient pole */
    std::vector<Rational> apply(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    Chart source_, target_;
    std::vector<RationalFunction> comps_;
};

/* symplectic frame adapted to a base contact form: theta0(X_i) = theta0(P_i) = 0,
 * dtheta0(X_i, P_j) = delta_ij, R the Reeb field of theta0 */
struct ContactFrame {
    std::vector<VecField> X, P;
    VecField R;
    DiffForm theta0;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_d(const DiffForm& w);
DiffForm interior_field(const VecField& v, const DiffForm& w);
/* scalar i_v(theta) for a 1-form */
RationalFunction pair_field(const VecField& v, const DiffForm& theta);
DiffForm pullback(const PointMap& phi, const DiffForm& w);
/* g after f: inner maps A -> B, outer maps B -> C, result maps A -> C */
PointMap compose(const PointMap& outer, const PointMap& inner);

/* unique solution of i_R theta = 1, i_R dtheta = 0 over the rational-function
 * field; requires an odd-dimensional chart and theta with theta^(dtheta)^n
 * nonzero, else throws invalid_argument("not a contact form"). When a frame is
 * supplied and theta == rho * frame.theta0, the solver output is cross-checked
 * against the closed formula
 *   (1/rho^2) [ sum_i (P_i rho) X_i - sum_i (X_i rho) P_i + rho R ]
 * and a mismatch throws logic_error. */
VecField reeb_field(const DiffForm& theta, const ContactFrame* frame = nullptr);

/* replace the differential of one coordinate by a 1-form everywhere it occurs */
DiffForm substitute_differential(const DiffForm& w, const std::string& var,
                                 const DiffForm& replacement);

/* rewrite w modulo the ideal of theta, for theta solved in one coordinate:
 * the first coordinate whose dv-coefficient is a nonzero constant s gives the
 * rule dv -> -(1/s) * (theta - s dv); the result never mentions dv */
DiffForm reduce_mod_theta(const DiffForm& w, const DiffForm& theta);

/* chart (x1..xn, z, p1..pn) */
Chart standard_contact_chart(std::size_t n);
/* dz - sum p_i dx_i */
DiffForm standard_theta(const Chart& chart);
/* X_i = d/dx_i + p_i d/dz, P_i = d/dp_i, R = d/dz */
ContactFrame standard_contact_frame(const Chart& chart);

/* replace every even power var^(2k) by square^k; square must not involve var */
Polynomial substitute_square(const Polynomial& p, const std::string& var,
                             const Polynomial& square);
RationalFunction substitute_square(const RationalFunction& f, const std::string& var,
                                   const Polynomial& square);
/* write f as E + var * O modulo var^2 = square, with E, O free of var;
 * rationalizes by the conjugate and throws when the conjugate norm vanishes */
std::pair<RationalFunction, RationalFunction> split_square_root(const RationalFunction& f,
                                                                const std::string& var,
                                                                const Polynomial& square);

}  // namespace malp
