#pragma once

/*
 * Graded Lie algebras m = g_{-2} + g_{-1} with a chosen matrix algebra g_0,
 * and their Tanaka prolongation by exact linear algebra.
 *
 * Everything is realized inside gl(n+2): gamma spans g_{-2}, e_1..e_n and
 * f_1..f_n span g_{-1}, and every structure constant is read off a matrix
 * commutator, never entered by hand. A prolongation element of level k >= 1
 * is a pair (alpha: g_{-1} -> g_{k-1}, beta: g_{-2} -> g_{k-2}) subject to
 *   (i)  beta([x, y]) = [alpha(x), y] - [alpha(y), x]
 *   (ii) [alpha(y), z] = [beta(z), y]
 * for x, y in g_{-1} and z in g_{-2}; the solution space is an exact kernel.
 */

#include <cstddef>
#include <vector>

#include "malp/matrix.hpp"
#include "malp/rational.hpp"

namespace malp {

enum class ProlongVariant { LagrangianContact, BiDecomposableMA };

struct GradedLA {
    std::size_t n = 0;
    /* gamma, e_1..e_n, f_1..f_n as (n+2) x (n+2) matrices */
    std::vector<Matrix<Rational>> m_basis;
    std::vector<Matrix<Rational>> g0_basis;
    /* [x, y] = -pairing(x, y) gamma on g_{-1}, basis order e_1..e_n, f_1..f_n */
    Matrix<Rational> pairing{0, 0, Rational(0)};
    /* per g0 basis element: its action on g_{-1} (2n x 2n, column = argument)
     * and on gamma (a scalar) */
    std::vector<Matrix<Rational>> act_g1;
    std::vector<Rational> act_g2;
};

struct ProlongSpace {
    std::size_t level = 0;
    /* basis pairs: alpha[i] is d_{k-1} x 2n (columns indexed by the g_{-1}
     * basis), beta[i] has d_{k-2} coordinates */
    std::vector<Matrix<Rational>> alpha;
    std::vector<std::vector<Rational>> beta;
    std::size_t dim() const { return alpha.size(); }
};

/* n >= 2; the variant picks g_0: the full block algebra
 * {diag(a, A, b) : a + b + tr A = 0} or the smaller span of
 * eps = -E_00 + E_{n+1,n+1} together with sl(n) in the middle block */
GradedLA build_mg0(std::size_t n, ProlongVariant variant);

/* exact Jacobi / representation identities on all stored constants */
bool jacobi_check(const GradedLA& g);

/* solution space at level k given all previous levels (previous[j] must hold
 * level j + 1); levels are independent of any basis choice */
ProlongSpace prolong_step(const GradedLA& g, std::size_t k,
                          const std::vector<ProlongSpace>& previous);

/* levels 1, 2, .. until two consecutive zero dimensions; throws runtime_error
 * when the bound is hit first (growth is reported, never truncated) */
std::vector<ProlongSpace> prolong_all(const GradedLA& g, std::size_t max_level = 8);

/* dim g_{-2} + dim g_{-1} + dim g_0 + sum of prolongation dimensions */
std::size_t symmetry_dimension(const GradedLA& g, std::size_t max_level = 8);

}  // namespace malp
