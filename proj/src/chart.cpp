#include "malp/chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace malp {

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("chart needs at least one coordinate");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("chart coordinate name is empty");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("chart coordinate repeated: " + names_[i]);
    }
}

std::size_t Chart::index_of(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::out_of_range("chart has no coordinate " + n);
    return it->second;
}

RationalFunction Chart::coordinate(const std::string& n) const {
    index_of(n);
    return RationalFunction::variable(names_, n);
}

std::string Chart::str() const {
    std::string s = "chart";
    for (const auto& n : names_) s += " " + n;
    return s;
}

DiffForm DiffForm::function(const Chart& chart, const RationalFunction& f) {
    DiffForm w(chart, 0);
    if (!f.is_zero()) w.terms_.emplace(IndexTuple{}, f);
    return w;
}

void DiffForm::check_tuple(const IndexTuple& idx) const {
    if (idx.size() != degree_) throw std::invalid_argument("index tuple size differs from degree");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 1 || static_cast<std::size_t>(idx[i]) > chart_.dim())
            throw std::invalid_argument("index tuple leaves the chart");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw std::invalid_argument("index tuple is not strictly increasing");
    }
}

void DiffForm::set_term(const IndexTuple& idx, const RationalFunction& c) {
    check_tuple(idx);
    if (c.is_zero())
        terms_.erase(idx);
    else
        terms_[idx] = c;
}

void DiffForm::add_term(const IndexTuple& idx, const RationalFunction& c) {
    if (idx.size() != degree_) throw std::invalid_argument("index tuple size differs from degree");
    auto sorted = sort_indices(idx);
    if (!sorted) return;
    check_tuple(sorted->first);
    malp::add_term(terms_, sorted->first, sorted->second < 0 ? -c : c);
}

RationalFunction DiffForm::coefficient(const IndexTuple& idx) const {
    check_tuple(idx);
    auto it = terms_.find(idx);
    return it != terms_.end() ? it->second : chart_.zero();
}

DiffForm DiffForm::operator-() const {
    DiffForm r(chart_, degree_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
    return r;
}

static void require_compatible(const DiffForm& a, const DiffForm& b) {
    if (a.chart() != b.chart()) throw std::invalid_argument("forms live on different charts");
    if (a.degree() != b.degree()) throw std::invalid_argument("forms have different degrees");
}

DiffForm operator+(const DiffForm& a, const DiffForm& b) {
    require_compatible(a, b);
    DiffForm r = a;
    for (const auto& [idx, c] : b.terms_) add_term(r.terms_, idx, c);
    return r;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b) {
    require_compatible(a, b);
    DiffForm r = a;
    for (const auto& [idx, c] : b.terms_) add_term(r.terms_, idx, -c);
    return r;
}

DiffForm DiffForm::operator*(const RationalFunction& s) const {
    DiffForm r(chart_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [idx, c] : terms_) {
        RationalFunction sc = c * s;
        if (!sc.is_zero()) r.terms_.emplace(idx, sc);
    }
    return r;
}

DiffForm DiffForm::operator*(const Rational& s) const {
    return *this * chart_.constant(s);
}

std::string DiffForm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            s += (i == 0 ? " " : "^");
            s += "d" + chart_.name(static_cast<std::size_t>(idx[i]) - 1);
        }
    }
    return s;
}

VecField::VecField(Chart chart, std::vector<RationalFunction> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
    if (comps_.size() != chart_.dim())
        throw std::invalid_argument("vector field component count differs from chart dimension");
}

VecField VecField::zero(const Chart& chart) {
    return VecField(chart, std::vector<RationalFunction>(chart.dim(), chart.zero()));
}

const RationalFunction& VecField::component(const std::string& name) const {
    return comps_[chart_.index_of(name)];
}

void VecField::set_component(const std::string& name, const RationalFunction& c) {
    comps_[chart_.index_of(name)] = c;
}

RationalFunction VecField::apply(const RationalFunction& f) const {
    RationalFunction r = chart_.zero();
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        RationalFunction df = f.diff(chart_.name(i));
        if (!df.is_zero()) r += comps_[i] * df;
    }
    return r;
}

VecField VecField::operator-() const {
    VecField r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

VecField operator+(const VecField& a, const VecField& b) {
    if (a.chart_ != b.chart_) throw std::invalid_argument("vector fields on different charts");
    VecField r = a;
    for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
    return r;
}

VecField operator-(const VecField& a, const VecField& b) {
    return a + (-b);
}

VecField VecField::operator*(const RationalFunction& s) const {
    VecField r = *this;
    for (auto& c : r.comps_) c *= s;
    return r;
}

bool VecField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const RationalFunction& c) { return c.is_zero(); });
}

std::string VecField::str() const {
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + comps_[i].str() + ") d/d" + chart_.name(i);
    }
    return s.empty() ? "0" : s;
}

PointMap::PointMap(Chart source, Chart target, std::vector<RationalFunction> components)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
    if (comps_.size() != target_.dim())
        throw std::invalid_argument("point map must assign every target coordinate");
    for (const auto& c : comps_)
        if (c.vars() != source_.names())
            throw std::invalid_argument("point map component is not over the source chart");
}

PointMap::PointMap(Chart source, Chart target, const std::map<std::string, RationalFunction>& components)
    : PointMap(std::move(source), Chart(target), [&] {
          std::vector<RationalFunction> v;
          v.reserve(target.dim());
          for (const auto& n : target.names()) {
              auto it = components.find(n);
              if (it == components.end())
                  throw std::invalid_argument("point map misses target coordinate " + n);
              v.push_back(it->second);
          }
          return v;
      }()) {}

PointMap PointMap::identity(const Chart& chart) {
    std::vector<RationalFunction> comps;
    comps.reserve(chart.dim());
    for (const auto& n : chart.names()) comps.push_back(chart.coordinate(n));
    return PointMap(chart, chart, std::move(comps));
}

const RationalFunction& PointMap::component(const std::string& target_name) const {
    return comps_[target_.index_of(target_name)];
}

std::vector<Rational> PointMap::apply(const std::vector<Rational>& point) const {
    if (point.size() != source_.dim())
        throw std::invalid_argument("point dimension differs from source chart");
    std::vector<Rational> image;
    image.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        auto v = comps_[i].eval(point);
        if (!v) throw std::invalid_argument("pole on chart at coordinate " + target_.name(i));
        image.push_back(*v);
    }
    return image;
}

std::string PointMap::str() const {
    std::string s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (!s.empty()) s += "; ";
        s += target_.name(i) + " <- " + comps_[i].str();
    }
    return s;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    if (a.chart() != b.chart()) throw std::invalid_argument("forms live on different charts");
    DiffForm r(a.chart(), a.degree() + b.degree());
    TermMap<RationalFunction> t = wedge_terms(a.terms(), b.terms());
    for (const auto& [idx, c] : t) r.set_term(idx, c);
    return r;
}

DiffForm exterior_d(const DiffForm& w) {
    const Chart& chart = w.chart();
    DiffForm r(chart, w.degree() + 1);
    for (const auto& [idx, c] : w.terms()) {
        for (std::size_t t = 0; t < chart.dim(); ++t) {
            RationalFunction dc = c.diff(chart.name(t));
            if (dc.is_zero()) continue;
            IndexTuple ext;
            ext.reserve(idx.size() + 1);
            ext.push_back(static_cast<int>(t) + 1);
            ext.insert(ext.end(), idx.begin(), idx.end());
            r.add_term(ext, dc);
        }
    }
    return r;
}

DiffForm interior_field(const VecField& v, const DiffForm& w) {
    if (v.chart() != w.chart()) throw std::invalid_argument("field and form on different charts");
    if (w.degree() == 0) throw std::invalid_argument("interior product needs degree >= 1");
    DiffForm r(w.chart(), w.degree() - 1);
    TermMap<RationalFunction> t = interior_terms(v.components(), w.terms());
    for (const auto& [idx, c] : t) r.set_term(idx, c);
    return r;
}

RationalFunction pair_field(const VecField& v, const DiffForm& theta) {
    if (theta.degree() != 1) throw std::invalid_argument("pairing needs a 1-form");
    DiffForm s = interior_field(v, theta);
    auto it = s.terms().find(IndexTuple{});
    return it == s.terms().end() ? theta.chart().zero() : it->second;
}

DiffForm pullback(const PointMap& phi, const DiffForm& w) {
    if (w.chart() != phi.target()) throw std::invalid_argument("pullback chart mismatch");
    const Chart& src = phi.source();
    const Chart& dst = phi.target();
    std::map<std::string, RationalFunction> subs;
    for (std::size_t i = 0; i < dst.dim(); ++i) subs.emplace(dst.name(i), phi.components()[i]);

    RationalFunction zero = src.zero();
    Matrix<RationalFunction> jac(dst.dim(), src.dim(), zero);
    for (std::size_t i = 0; i < dst.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            jac.at(i, j) = phi.components()[i].diff(src.name(j));

    TermMap<RationalFunction> moved;
    for (const auto& [idx, c] : w.terms())
        moved.emplace(idx, substitute(c, src.names(), subs));

    DiffForm r(src, w.degree());
    TermMap<RationalFunction> t = pullback_terms(jac, moved, zero);
    for (const auto& [idx, c] : t) r.set_term(idx, c);
    return r;
}

PointMap compose(const PointMap& outer, const PointMap& inner) {
    if (inner.target() != outer.source())
        throw std::invalid_argument("composition chart mismatch");
    std::map<std::string, RationalFunction> subs;
    for (std::size_t i = 0; i < outer.source().dim(); ++i)
        subs.emplace(outer.source().name(i), inner.components()[i]);
    std::vector<RationalFunction> comps;
    comps.reserve(outer.components().size());
    for (const auto& c : outer.components())
        comps.push_back(substitute(c, inner.source().names(), subs));
    return PointMap(inner.source(), outer.target(), std::move(comps));
}

VecField reeb_field(const DiffForm& theta, const ContactFrame* frame) {
    if (theta.degree() != 1) throw std::invalid_argument("not a contact form");
    const Chart& chart = theta.chart();
    std::size_t m = chart.dim();
    if (m % 2 == 0) throw std::invalid_argument("not a contact form");
    std::size_t n = (m - 1) / 2;

    DiffForm dtheta = exterior_d(theta);
    DiffForm vol = theta;
    for (std::size_t i = 0; i < n; ++i) vol = wedge(vol, dtheta);
    if (vol.is_zero()) throw std::invalid_argument("not a contact form");

    RationalFunction zero = chart.zero();
    Matrix<RationalFunction> a(m + 1, m, zero);
    std::vector<RationalFunction> rhs(m + 1, zero);
    for (std::size_t i = 0; i < m; ++i) {
        auto it = theta.terms().find(IndexTuple{static_cast<int>(i) + 1});
        if (it != theta.terms().end()) a.at(0, i) = it->second;
    }
    rhs[0] = chart.one();
    for (const auto& [idx, c] : dtheta.terms()) {
        std::size_t i = static_cast<std::size_t>(idx[0]) - 1;
        std::size_t j = static_cast<std::size_t>(idx[1]) - 1;
        /* equation row j+1 is dtheta(R, d/dx_j) = 0 */
        a.at(j + 1, i) += c;
        a.at(i + 1, j) -= c;
    }

    auto sol = a.solve(rhs);
    if (!sol) throw std::invalid_argument("not a contact form");
    VecField r(chart, *sol);

    /* defining equations must hold exactly */
    if (!(pair_field(r, theta) - chart.one()).is_zero() || !interior_field(r, dtheta).is_zero())
        throw std::logic_error("reeb solve failed its defining equations");

    if (frame) {
        RationalFunction rho = pair_field(frame->R, theta);
        if (rho.is_zero() || !(theta - frame->theta0 * rho).is_zero())
            throw std::invalid_argument("frame base form does not scale to theta");
        VecField formula = frame->R * rho;
        for (std::size_t i = 0; i < frame->X.size(); ++i) {
            formula = formula + frame->X[i] * frame->P[i].apply(rho);
            formula = formula - frame->P[i] * frame->X[i].apply(rho);
        }
        formula = formula * (chart.one() / (rho * rho));
        if (!(formula - r).is_zero())
            throw std::logic_error("reeb solve disagrees with the frame formula");
    }
    return r;
}

DiffForm substitute_differential(const DiffForm& w, const std::string& var,
                                 const DiffForm& replacement) {
    const Chart& chart = w.chart();
    if (replacement.chart() != chart) throw std::invalid_argument("replacement chart mismatch");
    if (replacement.degree() != 1) throw std::invalid_argument("replacement must be a 1-form");
    int v = static_cast<int>(chart.index_of(var)) + 1;

    DiffForm r(chart, w.degree());
    for (const auto& [idx, c] : w.terms()) {
        auto pos = std::find(idx.begin(), idx.end(), v);
        if (pos == idx.end()) {
            r.add_term(idx, c);
            continue;
        }
        IndexTuple rest;
        rest.reserve(idx.size() - 1);
        for (int i : idx)
            if (i != v) rest.push_back(i);
        RationalFunction coef = (pos - idx.begin()) % 2 == 1 ? -c : c;
        for (const auto& [ridx, rc] : replacement.terms()) {
            IndexTuple ext;
            ext.reserve(rest.size() + 1);
            ext.push_back(ridx[0]);
            ext.insert(ext.end(), rest.begin(), rest.end());
            auto sorted = sort_indices(ext);
            if (!sorted) continue;
            r.add_term(sorted->first, sorted->second < 0 ? -(coef * rc) : coef * rc);
        }
    }
    return r;
}

DiffForm reduce_mod_theta(const DiffForm& w, const DiffForm& theta) {
    const Chart& chart = w.chart();
    if (theta.chart() != chart) throw std::invalid_argument("theta chart mismatch");
    if (theta.degree() != 1) throw std::invalid_argument("theta must be a 1-form");
    for (std::size_t t = 0; t < chart.dim(); ++t) {
        auto it = theta.terms().find(IndexTuple{static_cast<int>(t) + 1});
        if (it == theta.terms().end() || !it->second.is_constant()) continue;
        Rational s = it->second.constant_value();
        if (s == Rational(0)) continue;
        /* dv = -(1/s)(theta - s dv) modulo theta */
        DiffForm solved(chart, 1);
        solved.set_term(IndexTuple{static_cast<int>(t) + 1}, it->second);
        DiffForm repl = (theta - solved) * chart.constant(-s.inverse());
        return substitute_differential(w, chart.name(t), repl);
    }
    throw std::invalid_argument("theta is not solved in any coordinate differential");
}

Chart standard_contact_chart(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(2 * n + 1);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("z");
    for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    return Chart(std::move(names));
}

DiffForm standard_theta(const Chart& chart) {
    std::size_t n = (chart.dim() - 1) / 2;
    if (chart.dim() != 2 * n + 1) throw std::invalid_argument("chart dimension must be odd");
    DiffForm theta(chart, 1);
    theta.set_term(IndexTuple{static_cast<int>(n) + 1}, chart.one());
    for (std::size_t i = 1; i <= n; ++i)
        theta.set_term(IndexTuple{static_cast<int>(i)},
                       -chart.coordinate("p" + std::to_string(i)));
    return theta;
}

ContactFrame standard_contact_frame(const Chart& chart) {
    std::size_t n = (chart.dim() - 1) / 2;
    ContactFrame f;
    f.theta0 = standard_theta(chart);
    f.R = VecField::zero(chart);
    f.R.set_component("z", chart.one());
    for (std::size_t i = 1; i <= n; ++i) {
        VecField x = VecField::zero(chart);
        x.set_component("x" + std::to_string(i), chart.one());
        x.set_component("z", chart.coordinate("p" + std::to_string(i)));
        f.X.push_back(std::move(x));
        VecField p = VecField::zero(chart);
        p.set_component("p" + std::to_string(i), chart.one());
        f.P.push_back(std::move(p));
    }
    return f;
}

Polynomial substitute_square(const Polynomial& p, const std::string& var,
                             const Polynomial& square) {
    if (square.depends_on(var))
        throw std::invalid_argument("square replacement involves the variable itself");
    std::size_t t = p.var_index(var);
    Polynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m[t];
        Monomial reduced = m;
        reduced[t] = e % 2;
        Polynomial part(p.vars());
        part.add_term(reduced, c);
        if (e >= 2) part *= square.pow(e / 2);
        r += part;
    }
    return r;
}

RationalFunction substitute_square(const RationalFunction& f, const std::string& var,
                                   const Polynomial& square) {
    Polynomial num = substitute_square(f.num(), var, square);
    Polynomial den = substitute_square(f.den(), var, square);
    if (den.is_zero()) throw std::invalid_argument("square substitution collapses a denominator");
    return RationalFunction(num, den);
}

std::pair<RationalFunction, RationalFunction> split_square_root(const RationalFunction& f,
                                                                const std::string& var,
                                                                const Polynomial& square) {
    auto split_poly = [&](const Polynomial& p) {
        Polynomial reduced = substitute_square(p, var, square);
        std::size_t t = reduced.var_index(var);
        Polynomial even(p.vars()), odd(p.vars());
        for (const auto& [m, c] : reduced.terms()) {
            if (m[t] == 0) {
                even.add_term(m, c);
            } else {
                Monomial stripped = m;
                stripped[t] = 0;
                odd.add_term(stripped, c);
            }
        }
        return std::make_pair(even, odd);
    };
    auto [an, bn] = split_poly(f.num());
    auto [ad, bd] = split_poly(f.den());
    /* (an + r bn)/(ad + r bd) with r^2 = square; multiply by the conjugate */
    Polynomial norm = ad * ad - square * bd * bd;
    if (norm.is_zero()) throw std::invalid_argument("conjugate norm vanishes; cannot split");
    RationalFunction even(an * ad - square * bn * bd, norm);
    RationalFunction odd(bn * ad - an * bd, norm);
    return {even, odd};
}

}  // namespace malp
