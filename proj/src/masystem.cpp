#include "malp/masystem.hpp"

#include <stdexcept>
#include <string>

namespace malp {

static IndexTuple block_tuple(std::size_t first, std::size_t count, std::size_t omit1 = 0,
                              std::size_t omit2 = 0) {
    /* 1-based positions first..first+count-1, skipping omitted positions */
    IndexTuple t;
    t.reserve(count);
    for (std::size_t i = first; i < first + count; ++i)
        if (i != omit1 && i != omit2) t.push_back(static_cast<int>(i));
    return t;
}

MASystem construct_ma(const DiffForm& omega1, const DiffForm& omega2, const DiffForm& theta,
                      const PointMap& pi1, const PointMap& pi2) {
    const Chart& chart = theta.chart();
    if (pi1.source() != chart || pi2.source() != chart)
        throw std::invalid_argument("fibration source differs from the contact chart");
    if (omega1.chart() != pi1.target() || omega2.chart() != pi2.target())
        throw std::invalid_argument("volume form chart differs from its fibration target");
    std::size_t m = chart.dim();
    if (m % 2 == 0) throw std::invalid_argument("not a contact form");
    std::size_t n = (m - 1) / 2;
    if (omega1.chart().dim() != n + 1 || omega2.chart().dim() != n + 1)
        throw std::invalid_argument("fibration targets must have dimension n + 1");
    if (omega1.degree() != n + 1 || omega1.is_zero())
        throw std::invalid_argument("omega1 is not a nonzero top form");
    if (omega2.degree() != n + 1 || omega2.is_zero())
        throw std::invalid_argument("omega2 is not a nonzero top form");

    VecField reeb = reeb_field(theta);
    MASystem sys;
    sys.chart = chart;
    sys.theta = theta;
    sys.omega = interior_field(reeb, pullback(pi1, omega1) - pullback(pi2, omega2));
    return sys;
}

bool check_theta_independence(const DiffForm& omega1, const DiffForm& omega2,
                              const DiffForm& theta, const PointMap& pi1, const PointMap& pi2,
                              const RationalFunction& rho) {
    if (rho.is_zero()) throw std::invalid_argument("rho must be nonzero");
    MASystem base = construct_ma(omega1, omega2, theta, pi1, pi2);
    MASystem scaled = construct_ma(omega1, omega2, theta * rho, pi1, pi2);
    /* omega' == (1/rho) omega modulo theta */
    return reduce_mod_theta(scaled.omega * rho - base.omega, theta).is_zero();
}

Classification classify_hesse(const MASystem& sys) {
    Classification out;
    std::size_t m = sys.chart.dim();
    if (m % 2 == 0 || m < 3) return out;
    std::size_t n = (m - 1) / 2;
    Chart chart = standard_contact_chart(n);
    if (sys.chart != chart) return out;
    DiffForm theta = standard_theta(chart);
    if (!(sys.theta - theta).is_zero()) return out;
    if (sys.omega.degree() != n) return out;

    IndexTuple dx_block = block_tuple(1, n);
    IndexTuple dp_block = block_tuple(n + 2, n);
    RationalFunction f = chart.zero(), g = chart.zero();
    for (const auto& [idx, c] : sys.omega.terms()) {
        if (idx == dx_block)
            f = c;
        else if (idx == dp_block)
            g = -c;
        else
            return out;
    }
    if (g.is_zero()) throw std::invalid_argument("the dp-block coefficient vanishes identically");
    out.F = f / g;

    /* first criterion: f free of p, g free of x after z = sum x_i p_i - zt */
    bool f_free = true, g_free = true;
    std::vector<std::string> dual_names;
    dual_names.reserve(m);
    for (std::size_t i = 1; i <= n; ++i) dual_names.push_back("x" + std::to_string(i));
    dual_names.push_back("zt");
    for (std::size_t i = 1; i <= n; ++i) dual_names.push_back("p" + std::to_string(i));
    Chart dual(dual_names);
    std::map<std::string, RationalFunction> subs;
    RationalFunction zimage = -dual.coordinate("zt");
    for (std::size_t i = 1; i <= n; ++i) {
        std::string xi = "x" + std::to_string(i), pi = "p" + std::to_string(i);
        subs.emplace(xi, dual.coordinate(xi));
        subs.emplace(pi, dual.coordinate(pi));
        zimage += dual.coordinate(xi) * dual.coordinate(pi);
        if (f.depends_on(pi)) f_free = false;
    }
    subs.emplace("z", zimage);
    RationalFunction gt = substitute(g, dual_names, subs);
    for (std::size_t i = 1; i <= n; ++i)
        if (gt.depends_on("x" + std::to_string(i))) g_free = false;

    /* second criterion: the block differentials vanish modulo theta */
    DiffForm w1(chart, n), w2(chart, n);
    w1.set_term(dx_block, f);
    w2.set_term(dp_block, g);
    bool f_closed = reduce_mod_theta(exterior_d(w1), theta).is_zero();
    bool g_closed = reduce_mod_theta(exterior_d(w2), theta).is_zero();
    if (f_free != f_closed || g_free != g_closed)
        throw std::logic_error("divergence-free criteria disagree");

    /* constancy of F through cross multiplication; reduction is content-only */
    const Polynomial& num = out.F.num();
    const Polynomial& den = out.F.den();
    bool flat = false;
    Rational cval;
    if (!num.is_zero() && num * den.leading_coefficient() == den * num.leading_coefficient()) {
        cval = num.leading_coefficient() / den.leading_coefficient();
        flat = cval != Rational(0);
    }

    if (flat) {
        out.kind = MAClass::Flat;
        out.c = cval;
    } else if (f_free && g_free) {
        out.kind = MAClass::EulerLagrange;
        out.F1 = f;
        out.F2 = dual.one() / gt;
        out.dual_chart = dual;
    } else {
        out.kind = MAClass::Hesse;
    }
    return out;
}

PointMap legendre_map(const Chart& chart) {
    std::size_t m = chart.dim();
    if (m % 2 == 0) throw std::invalid_argument("chart dimension must be odd");
    std::size_t n = (m - 1) / 2;
    if (chart != standard_contact_chart(n))
        throw std::invalid_argument("legendre map needs the standard chart");
    std::vector<RationalFunction> comps(m, chart.zero());
    RationalFunction zimage = -chart.coordinate("z");
    for (std::size_t i = 1; i <= n; ++i) {
        std::string xi = "x" + std::to_string(i), pi = "p" + std::to_string(i);
        comps[i - 1] = chart.coordinate(pi);
        comps[n + i] = chart.coordinate(xi);
        zimage += chart.coordinate(xi) * chart.coordinate(pi);
    }
    comps[n] = zimage;
    return PointMap(chart, chart, std::move(comps));
}

MASystem legendre_dual(const MASystem& sys) {
    PointMap phi = legendre_map(sys.chart);
    MASystem dual;
    dual.chart = sys.chart;
    dual.theta = -pullback(phi, sys.theta);
    dual.omega = pullback(phi, sys.omega);
    return dual;
}

PointMap legendrian_lift(const Polynomial& f) {
    std::size_t n = f.vars().size();
    Chart source(f.vars());
    Chart target = standard_contact_chart(n);
    std::vector<RationalFunction> comps;
    comps.reserve(2 * n + 1);
    for (const auto& v : f.vars()) comps.push_back(source.coordinate(v));
    comps.push_back(RationalFunction(f));
    for (const auto& v : f.vars()) comps.push_back(RationalFunction(f.diff(v)));
    PointMap lift(source, target, std::move(comps));
    if (!pullback(lift, standard_theta(target)).is_zero())
        throw std::logic_error("graph lift failed to annihilate the contact form");
    return lift;
}

DiffForm verify_solution(const MASystem& sys, const PointMap& lift) {
    if (lift.target() != sys.chart)
        throw std::invalid_argument("lift target differs from the system chart");
    DiffForm tp = pullback(lift, sys.theta);
    if (!tp.is_zero())
        throw std::invalid_argument("map is not Legendrian: theta pullback is " + tp.str());
    return pullback(lift, sys.omega);
}

std::pair<bool, bool> transversality_check(const MASystem& sys, const PointMap& lift,
                                           const std::vector<Rational>& point) {
    if (sys.frame1.empty() || sys.frame2.empty())
        throw std::invalid_argument("system carries no Lagrangian pair frames");
    if (lift.target() != sys.chart)
        throw std::invalid_argument("lift target differs from the system chart");
    std::size_t m = sys.chart.dim();
    std::size_t s = lift.source().dim();
    std::vector<Rational> image = lift.apply(point);

    auto value = [](const RationalFunction& c, const std::vector<Rational>& at) {
        auto v = c.eval(at);
        if (!v) throw std::invalid_argument("pole on chart at the sample point");
        return *v;
    };

    auto transversal = [&](const std::vector<VecField>& frame) {
        Matrix<Rational> mat(m, frame.size() + s, Rational(0));
        for (std::size_t j = 0; j < frame.size(); ++j) {
            if (frame[j].chart() != sys.chart)
                throw std::invalid_argument("frame field lives on a different chart");
            for (std::size_t i = 0; i < m; ++i)
                mat.at(i, j) = value(frame[j].components()[i], image);
        }
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t i = 0; i < m; ++i)
                mat.at(i, frame.size() + j) =
                    value(lift.components()[i].diff(lift.source().name(j)), point);
        return mat.rank() == frame.size() + s;
    };
    return {transversal(sys.frame1), transversal(sys.frame2)};
}

static MASystem flat_model(const Rational& c, std::size_t n) {
    Chart chart = standard_contact_chart(n);
    MASystem sys;
    sys.chart = chart;
    sys.theta = standard_theta(chart);
    sys.omega = DiffForm(chart, n);
    sys.omega.set_term(block_tuple(1, n), chart.constant(c));
    sys.omega.set_term(block_tuple(n + 2, n), chart.constant(Rational(-1)));
    ContactFrame frame = standard_contact_frame(chart);
    sys.frame1 = frame.X;
    sys.frame2 = frame.P;
    return sys;
}

static MASystem euclidean_model(const Rational& c, std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n + 1; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n + 1; ++i) names.push_back("y" + std::to_string(i));
    Chart chart{names};

    MASystem sys;
    sys.chart = chart;
    sys.theta = DiffForm(chart, 1);
    sys.omega = DiffForm(chart, n);
    Polynomial ylen2(names);
    for (std::size_t i = 1; i <= n + 1; ++i) {
        RationalFunction yi = chart.coordinate("y" + std::to_string(i));
        sys.theta.set_term(IndexTuple{static_cast<int>(i)}, yi);
        Rational sign = i % 2 == 1 ? Rational(1) : Rational(-1);
        sys.omega.set_term(block_tuple(1, n + 1, i), yi * (sign * c));
        sys.omega.set_term(block_tuple(n + 2, n + 1, n + 1 + i), yi * (-sign));
        ylen2 += Polynomial::variable(names, "y" + std::to_string(i)).pow(2);
    }
    sys.constraints.push_back(ylen2 - Polynomial::constant(names, Rational(1)));
    return sys;
}

/* metric signs: eps0 = -1 turns the 0-th coordinate timelike in both the
 * constraints and theta; the omitted-pair coefficients change shape for pairs
 * containing 0 exactly as the hyperboloid displays do */
static MASystem quadric_model(const Rational& c, std::size_t n, bool hyperbolic) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= n + 1; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i <= n + 1; ++i) names.push_back("y" + std::to_string(i));
    Chart chart{names};
    std::size_t width = n + 2;

    auto x = [&](std::size_t i) { return chart.coordinate("x" + std::to_string(i)); };
    auto y = [&](std::size_t i) { return chart.coordinate("y" + std::to_string(i)); };

    MASystem sys;
    sys.chart = chart;
    sys.theta = DiffForm(chart, 1);
    for (std::size_t i = 0; i <= n + 1; ++i) {
        RationalFunction coef = y(i);
        if (hyperbolic && i == 0) coef = -coef;
        sys.theta.set_term(IndexTuple{static_cast<int>(i) + 1}, coef);
    }

    sys.omega = DiffForm(chart, n);
    for (std::size_t s = 0; s <= n; ++s)
        for (std::size_t t = s + 1; t <= n + 1; ++t) {
            Rational sign = (s + t) % 2 == 0 ? Rational(1) : Rational(-1);
            RationalFunction xcoef, ycoef;
            if (hyperbolic && s == 0) {
                /* pairs through the timelike index add instead of subtract */
                xcoef = x(0) * y(t) + x(t) * y(0);
                ycoef = y(0) * x(t) + y(t) * x(0);
            } else {
                xcoef = x(t) * y(s) - x(s) * y(t);
                ycoef = y(t) * x(s) - y(s) * x(t);
            }
            sys.omega.set_term(block_tuple(1, width, 1 + s, 1 + t), xcoef * (sign * c));
            sys.omega.set_term(block_tuple(width + 1, width, width + 1 + s, width + 1 + t),
                               ycoef * sign);
        }

    auto dot = [&](char a, char b) {
        Polynomial r(names);
        for (std::size_t i = 0; i <= n + 1; ++i) {
            Polynomial term = Polynomial::variable(names, std::string(1, a) + std::to_string(i)) *
                              Polynomial::variable(names, std::string(1, b) + std::to_string(i));
            if (hyperbolic && i == 0)
                r -= term;
            else
                r += term;
        }
        return r;
    };
    Polynomial one = Polynomial::constant(names, Rational(1));
    sys.constraints.push_back(hyperbolic ? dot('x', 'x') + one : dot('x', 'x') - one);
    sys.constraints.push_back(dot('y', 'y') - one);
    sys.constraints.push_back(dot('x', 'y'));
    return sys;
}

MASystem model_system(ModelKind kind, const Rational& c, std::size_t n) {
    if (c == Rational(0)) throw std::invalid_argument("c must be a nonzero constant");
    if (n < 2) throw std::invalid_argument("the model systems need n >= 2");
    switch (kind) {
        case ModelKind::Flat: return flat_model(c, n);
        case ModelKind::Euclidean: return euclidean_model(c, n);
        case ModelKind::Spherical: return quadric_model(c, n, false);
        case ModelKind::Hyperbolic: return quadric_model(c, n, true);
    }
    throw std::invalid_argument("unknown model kind");
}

MASystem euclidean_chart_reduce(std::size_t n, const Rational& c) {
    if (c == Rational(0)) throw std::invalid_argument("c must be a nonzero constant");
    if (n < 2) throw std::invalid_argument("the model systems need n >= 2");
    Chart chart = standard_contact_chart(n);
    Polynomial q = Polynomial::constant(chart.names(), Rational(1));
    for (std::size_t i = 1; i <= n; ++i)
        q += Polynomial::variable(chart.names(), "p" + std::to_string(i)).pow(2);

    MASystem sys;
    sys.chart = chart;
    sys.theta = standard_theta(chart);
    sys.omega = DiffForm(chart, n);
    sys.omega.set_term(block_tuple(1, n), chart.constant(c));
    Polynomial one = Polynomial::constant(chart.names(), Rational(1));
    if (n % 2 == 0) {
        sys.omega.set_term(block_tuple(n + 2, n),
                           -RationalFunction(one, q.pow(static_cast<unsigned>(n + 2) / 2)));
    } else {
        /* the exact coefficient is the square root of this magnitude; the
         * stored value is its square and the true sign for odd n is plus */
        sys.omega.set_term(block_tuple(n + 2, n),
                           -RationalFunction(one, q.pow(static_cast<unsigned>(n + 2))));
        sys.squared_coefficient = true;
    }
    ContactFrame frame = standard_contact_frame(chart);
    sys.frame1 = frame.X;
    sys.frame2 = frame.P;
    return sys;
}

std::pair<MASystem, std::pair<Rational, Rational>> apply_flat_symmetry(const FlatSymmetry& g,
                                                                       const MASystem& sys) {
    std::size_t m = sys.chart.dim();
    if (m % 2 == 0 || m < 3) throw std::invalid_argument("system is not on a standard chart");
    std::size_t n = (m - 1) / 2;
    Chart chart = standard_contact_chart(n);
    if (sys.chart != chart) throw std::invalid_argument("system is not on the standard chart");
    if (!(sys.theta - standard_theta(chart)).is_zero())
        throw std::invalid_argument("system does not carry the standard contact form");
    /* the scalar claims need constant block coefficients */
    IndexTuple dx_block = block_tuple(1, n), dp_block = block_tuple(n + 2, n);
    for (const auto& [idx, coef] : sys.omega.terms())
        if ((idx != dx_block && idx != dp_block) || !coef.is_constant())
            throw std::invalid_argument("omega is not a constant-coefficient split form");

    if (g.l == Rational(0) || g.k == Rational(0))
        throw std::invalid_argument("l and k must be nonzero");
    if (g.A.rows() != n || g.A.cols() != n || g.a.size() != n || g.b.size() != n)
        throw std::invalid_argument("group element dimension mismatch");
    Rational det = g.A.det();
    Rational residual = det * det - (g.k * g.l).pow(static_cast<long>(n));
    if (residual != Rational(0))
        throw std::invalid_argument("determinant constraint fails; residual " + residual.str());
    auto ainv = g.A.inverse();
    if (!ainv) throw std::invalid_argument("A is singular");

    std::vector<RationalFunction> comps(m, chart.zero());
    RationalFunction linv = chart.constant(g.l.inverse());
    for (std::size_t i = 0; i < n; ++i) {
        RationalFunction e = chart.constant(g.b[i]);
        for (std::size_t j = 0; j < n; ++j)
            e += chart.coordinate("x" + std::to_string(j + 1)) * chart.constant(g.A.at(i, j));
        comps[i] = e * linv;
    }
    RationalFunction ez = chart.coordinate("z") * chart.constant(g.k) - chart.constant(g.cp);
    for (std::size_t j = 0; j < n; ++j)
        ez -= chart.coordinate("x" + std::to_string(j + 1)) * chart.constant(g.a[j]);
    comps[n] = ez * linv;
    for (std::size_t i = 0; i < n; ++i) {
        RationalFunction e = chart.zero();
        for (std::size_t j = 0; j < n; ++j)
            e += (chart.coordinate("p" + std::to_string(j + 1)) * chart.constant(g.k) -
                  chart.constant(g.a[j])) *
                 chart.constant(ainv->at(j, i));
        comps[n + 1 + i] = e;
    }
    PointMap phi(chart, chart, std::move(comps));

    DiffForm theta2 = pullback(phi, sys.theta);
    DiffForm omega2 = pullback(phi, sys.omega);
    Rational theta_scale = g.k / g.l;
    Rational omega_scale = det / g.l.pow(static_cast<long>(n));
    if (!(theta2 - sys.theta * theta_scale).is_zero())
        throw std::logic_error("theta scalar disagrees with the predicted k/l");
    if (!(omega2 - sys.omega * omega_scale).is_zero())
        throw std::logic_error("omega scalar disagrees with the predicted det A / l^n");

    MASystem out;
    out.chart = chart;
    out.theta = theta2;
    out.omega = omega2;
    return {out, {theta_scale, omega_scale}};
}

}  // namespace malp
