#pragma once

/*
 * Monge-Ampere systems on contact charts: construction from a pair of volume
 * forms through a double fibration, classification of bi-decomposed systems
 * on the standard chart, Legendre duality, solution checking for graph
 * Legendrian lifts, the flat/Euclidean/spherical/hyperbolic model systems,
 * and the flat symmetry group action.
 *
 * A system is the triple (theta, d theta, omega). For the ambient models the
 * chart is even-dimensional and the sphere/hyperboloid relations are carried
 * as constraint polynomials; forms are exact transcriptions in the ambient
 * coordinates and are only contact after restriction, which is not verified
 * symbolically here.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "malp/chart.hpp"
#include "malp/matrix.hpp"

namespace malp {

struct MASystem {
    Chart chart;
    DiffForm theta;
    DiffForm omega;
    /* Lagrangian pair frames, when the model carries a global one */
    std::vector<VecField> frame1, frame2;
    /* ambient models: defining equations of the configuration space */
    std::vector<Polynomial> constraints;
    /* odd-dimensional chart reduction: the dp-block coefficient stores the
     * square of the true magnitude (the true value lives outside the field) */
    bool squared_coefficient = false;
};

enum class MAClass { General, Hesse, EulerLagrange, Flat };

struct Classification {
    MAClass kind = MAClass::General;
    /* Hesse / EulerLagrange / Flat: the right-hand side f/g on the chart */
    RationalFunction F;
    /* EulerLagrange: F == F1 * F2 with F1 = F1(x, z) on the source chart and
     * F2 = F2(zt, p) on the dual-variable chart (x1..xn, zt, p1..pn) */
    RationalFunction F1, F2;
    Chart dual_chart;
    /* Flat: the constant value of F */
    Rational c;
};

/* group element of the flat symmetry: l, k nonzero scalars, A an invertible
 * n x n matrix with (det A)^2 == (k l)^n, a, b translation n-vectors, cp a
 * scalar offset */
struct FlatSymmetry {
    Rational l, k;
    Matrix<Rational> A;
    std::vector<Rational> a, b;
    Rational cp;
    FlatSymmetry(std::size_t n)
        : l(1), k(1), A(Matrix<Rational>::identity(n, Rational(0))),
          a(n, Rational(0)), b(n, Rational(0)), cp(0) {}
};

enum class ModelKind { Flat, Euclidean, Spherical, Hyperbolic };

/* omega = i_R(pi1^* omega1 - pi2^* omega2) with R the Reeb field of theta;
 * omega1, omega2 must be nonzero top forms on the fibration targets */
MASystem construct_ma(const DiffForm& omega1, const DiffForm& omega2, const DiffForm& theta,
                      const PointMap& pi1, const PointMap& pi2);

/* the generated ideal does not depend on the contact form: rebuilding with
 * rho * theta multiplies the generator by 1/rho modulo theta */
bool check_theta_independence(const DiffForm& omega1, const DiffForm& omega2,
                              const DiffForm& theta, const PointMap& pi1, const PointMap& pi2,
                              const RationalFunction& rho);

/* classify omega = f dx_1..dx_n - g dp_1..dp_n on the standard chart with the
 * standard contact form; anything else is General. The right-hand side is
 * F = f/g. The two equivalent divergence-free criteria (f free of p and g
 * free of x after the dual substitution; both block differentials vanishing
 * modulo theta) are each computed and must agree. */
Classification classify_hesse(const MASystem& sys);

/* (x, z, p) -> (p, sum x_i p_i - z, x) on the standard chart */
PointMap legendre_map(const Chart& chart);

/* push the system through legendre_map; theta maps to minus itself, so the
 * returned generator set is (theta, pullback omega) with the sign absorbed */
MASystem legendre_dual(const MASystem& sys);

/* graph lift x -> (x, f(x), df/dx_1, .., df/dx_n) into the standard chart */
PointMap legendrian_lift(const Polynomial& f);

/* pullback of omega along a Legendrian map; throws when the theta-pullback is
 * nonzero, quoting it. Zero residual means a geometric solution. */
DiffForm verify_solution(const MASystem& sys, const PointMap& lift);

/* at the image of the given source point, whether the lifted tangent space is
 * transversal to each half of the Lagrangian pair */
std::pair<bool, bool> transversality_check(const MASystem& sys, const PointMap& lift,
                                           const std::vector<Rational>& point);

/* the four model systems; ambient kinds attach their constraint polynomials */
MASystem model_system(ModelKind kind, const Rational& c, std::size_t n);

/* the Euclidean model written on the standard chart patch: omega has the
 * dx-block coefficient c and dp-block coefficient (1+|p|^2)^-(n+2)/2. For odd
 * n that power is irrational, so the dp coefficient stores its square and the
 * system is flagged squared_coefficient. */
MASystem euclidean_chart_reduce(std::size_t n, const Rational& c);

/* point action of a flat symmetry element; returns the transformed system and
 * the verified scalars (k/l on theta, det A / l^n on omega) */
std::pair<MASystem, std::pair<Rational, Rational>> apply_flat_symmetry(const FlatSymmetry& g,
                                                                       const MASystem& sys);

}  // namespace malp
