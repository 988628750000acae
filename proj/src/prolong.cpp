#include "malp/prolong.hpp"

#include <stdexcept>
#include <string>

namespace malp {

namespace {

Matrix<Rational> unit(std::size_t dim, std::size_t i, std::size_t j) {
    Matrix<Rational> m(dim, dim, Rational(0));
    m.at(i, j) = Rational(1);
    return m;
}

Matrix<Rational> commutator(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    return a * b - b * a;
}

/* coordinates of c in the span of gamma, e_1..e_n, f_1..f_n; the entry slots
 * are disjoint, so the expansion is an entry read plus an exactness check */
struct MExpansion {
    Rational gamma;
    std::vector<Rational> ef;  // e_1..e_n, f_1..f_n
};

MExpansion expand_in_m(const GradedLA& g, const Matrix<Rational>& c) {
    std::size_t n = g.n;
    MExpansion out;
    out.gamma = c.at(n + 1, 0);
    out.ef.assign(2 * n, Rational(0));
    Matrix<Rational> rebuilt = g.m_basis[0] * out.gamma;
    for (std::size_t i = 1; i <= n; ++i) {
        out.ef[i - 1] = c.at(i, 0);
        out.ef[n + i - 1] = c.at(n + 1, i);
        rebuilt = rebuilt + g.m_basis[i] * out.ef[i - 1];
        rebuilt = rebuilt + g.m_basis[n + i] * out.ef[n + i - 1];
    }
    if (!(rebuilt == c))
        throw std::logic_error("bracket leaves the graded algebra");
    return out;
}

/* action data of one level: act1[u] maps the g_{-1} basis into the next level
 * down (rows = coordinates there), act2[u] is the image of gamma two levels
 * down */
struct LevelData {
    std::size_t dim = 0;
    std::vector<Matrix<Rational>> act1;
    std::vector<std::vector<Rational>> act2;
};

LevelData level_data(const GradedLA& g, const std::vector<ProlongSpace>& previous, long level) {
    LevelData out;
    std::size_t n2 = 2 * g.n;
    if (level == -1) {
        /* [m_v, m_a] = -pairing(v, a) gamma */
        out.dim = n2;
        for (std::size_t v = 0; v < n2; ++v) {
            Matrix<Rational> row(1, n2, Rational(0));
            for (std::size_t a = 0; a < n2; ++a) row.at(0, a) = -g.pairing.at(v, a);
            out.act1.push_back(row);
            out.act2.emplace_back();
        }
    } else if (level == 0) {
        out.dim = g.g0_basis.size();
        out.act1 = g.act_g1;
        for (const Rational& c : g.act_g2) out.act2.push_back({c});
    } else {
        const ProlongSpace& p = previous.at(static_cast<std::size_t>(level) - 1);
        out.dim = p.dim();
        out.act1 = p.alpha;
        out.act2 = p.beta;
    }
    return out;
}

}  // namespace

GradedLA build_mg0(std::size_t n, ProlongVariant variant) {
    if (n < 2) throw std::invalid_argument("the graded algebras need n >= 2");
    std::size_t dim = n + 2;
    GradedLA g;
    g.n = n;

    /* gamma = E_{n+1,0}, e_i = E_{i,0}, f_j = E_{n+1,j} */
    g.m_basis.push_back(unit(dim, n + 1, 0));
    for (std::size_t i = 1; i <= n; ++i) g.m_basis.push_back(unit(dim, i, 0));
    for (std::size_t j = 1; j <= n; ++j) g.m_basis.push_back(unit(dim, n + 1, j));

    if (variant == ProlongVariant::LagrangianContact) {
        /* block diag(a, A, b) with a + b + tr A = 0 */
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                g.g0_basis.push_back(unit(dim, i, j));
            }
        for (std::size_t i = 1; i <= n; ++i)
            g.g0_basis.push_back(unit(dim, i, i) - unit(dim, 0, 0));
        g.g0_basis.push_back(unit(dim, 0, 0) - unit(dim, n + 1, n + 1));
    } else {
        /* eps plus sl(n) in the middle block */
        g.g0_basis.push_back(unit(dim, n + 1, n + 1) - unit(dim, 0, 0));
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                g.g0_basis.push_back(unit(dim, i, j));
            }
        for (std::size_t i = 1; i < n; ++i)
            g.g0_basis.push_back(unit(dim, i, i) - unit(dim, i + 1, i + 1));
    }

    /* every structure constant comes from a commutator in gl(n+2) */
    std::size_t n2 = 2 * n;
    g.pairing = Matrix<Rational>(n2, n2, Rational(0));
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < n2; ++b) {
            MExpansion x = expand_in_m(g, commutator(g.m_basis[a + 1], g.m_basis[b + 1]));
            for (const Rational& c : x.ef)
                if (!c.is_zero()) throw std::logic_error("g_{-1} bracket leaves g_{-2}");
            g.pairing.at(a, b) = -x.gamma;
        }
    for (const Matrix<Rational>& u : g.g0_basis) {
        Matrix<Rational> act(n2, n2, Rational(0));
        for (std::size_t a = 0; a < n2; ++a) {
            MExpansion x = expand_in_m(g, commutator(u, g.m_basis[a + 1]));
            if (!x.gamma.is_zero()) throw std::logic_error("g_0 action violates the grading");
            for (std::size_t r = 0; r < n2; ++r) act.at(r, a) = x.ef[r];
        }
        g.act_g1.push_back(act);
        MExpansion xg = expand_in_m(g, commutator(u, g.m_basis[0]));
        for (const Rational& c : xg.ef)
            if (!c.is_zero()) throw std::logic_error("g_0 action violates the grading");
        g.act_g2.push_back(xg.gamma);
    }
    return g;
}

bool jacobi_check(const GradedLA& g) {
    std::size_t n2 = 2 * g.n;
    std::size_t d0 = g.g0_basis.size();

    /* [u, [x, y]] = [[u, x], y] + [x, [u, y]] on g_{-1} pairs: the g_0 action
     * is infinitesimally symplectic for the pairing, weighted by the gamma
     * scalar */
    for (std::size_t u = 0; u < d0; ++u)
        for (std::size_t a = 0; a < n2; ++a)
            for (std::size_t b = 0; b < n2; ++b) {
                Rational lhs = g.act_g2[u] * g.pairing.at(a, b);
                Rational rhs(0);
                for (std::size_t r = 0; r < n2; ++r) {
                    rhs += g.act_g1[u].at(r, a) * g.pairing.at(r, b);
                    rhs += g.pairing.at(a, r) * g.act_g1[u].at(r, b);
                }
                if (lhs != rhs) return false;
            }

    /* [[u, v], w] = [u, [v, w]] - [v, [u, w]] for u, v in g_0 and w in m:
     * the stored action must represent the commutator's own action */
    for (std::size_t u = 0; u < d0; ++u)
        for (std::size_t v = 0; v < d0; ++v) {
            Matrix<Rational> uv = commutator(g.g0_basis[u], g.g0_basis[v]);
            for (std::size_t a = 0; a < n2; ++a) {
                MExpansion direct = expand_in_m(g, commutator(uv, g.m_basis[a + 1]));
                if (!direct.gamma.is_zero()) return false;
                for (std::size_t r = 0; r < n2; ++r) {
                    Rational composed(0);
                    for (std::size_t s = 0; s < n2; ++s)
                        composed += g.act_g1[u].at(r, s) * g.act_g1[v].at(s, a) -
                                    g.act_g1[v].at(r, s) * g.act_g1[u].at(s, a);
                    if (composed != direct.ef[r]) return false;
                }
            }
            MExpansion dg = expand_in_m(g, commutator(uv, g.m_basis[0]));
            if (dg.gamma != g.act_g2[u] * g.act_g2[v] - g.act_g2[v] * g.act_g2[u]) return false;
        }

    /* triples inside m: both nested brackets land in g_{-2} or vanish, and
     * [g_{-1}, g_{-2}] = 0, so the stored pairing must pair gamma to zero */
    for (std::size_t a = 0; a < n2; ++a) {
        MExpansion x = expand_in_m(g, commutator(g.m_basis[a + 1], g.m_basis[0]));
        if (!x.gamma.is_zero()) return false;
        for (const Rational& c : x.ef)
            if (!c.is_zero()) return false;
    }
    /* antisymmetry of the derived pairing */
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            if (g.pairing.at(a, b) != -g.pairing.at(b, a)) return false;
    return true;
}

ProlongSpace prolong_step(const GradedLA& g, std::size_t k,
                          const std::vector<ProlongSpace>& previous) {
    if (k < 1) throw std::invalid_argument("prolongation levels start at 1");
    if (previous.size() + 1 < k)
        throw std::invalid_argument("previous levels are missing");
    std::size_t n2 = 2 * g.n;

    LevelData up = level_data(g, previous, static_cast<long>(k) - 1);   // alpha lands here
    LevelData down = level_data(g, previous, static_cast<long>(k) - 2); // beta lands here
    /* coordinates of g_{k-3}, where both sides of condition (ii) live */
    std::size_t d3 = up.dim > 0 ? up.act2[0].size()
                                : (down.dim > 0 ? down.act1[0].rows() : 0);

    ProlongSpace out;
    out.level = k;
    std::size_t cols = n2 * up.dim + down.dim;
    if (cols == 0) return out;

    std::size_t rows = n2 * (n2 - 1) / 2 * down.dim + n2 * d3;
    Matrix<Rational> sys(rows, cols, Rational(0));
    std::size_t row = 0;

    /* (i) beta([m_a, m_b]) = [alpha(m_a), m_b] - [alpha(m_b), m_a] */
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = a + 1; b < n2; ++b)
            for (std::size_t r = 0; r < down.dim; ++r, ++row) {
                for (std::size_t u = 0; u < up.dim; ++u) {
                    sys.at(row, u * n2 + a) += up.act1[u].at(r, b);
                    sys.at(row, u * n2 + b) -= up.act1[u].at(r, a);
                }
                sys.at(row, n2 * up.dim + r) += g.pairing.at(a, b);
            }

    /* (ii) [alpha(m_a), gamma] = [beta(gamma), m_a] */
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t r = 0; r < d3; ++r, ++row) {
            for (std::size_t u = 0; u < up.dim; ++u)
                sys.at(row, u * n2 + a) += up.act2[u][r];
            for (std::size_t v = 0; v < down.dim; ++v)
                sys.at(row, n2 * up.dim + v) -= down.act1[v].at(r, a);
        }

    std::vector<std::vector<Rational>> kernel =
        rows > 2 * cols ? kernel_via_gram(sys) : sys.kernel_basis();
    for (const std::vector<Rational>& w : kernel) {
        Matrix<Rational> alpha(up.dim, n2, Rational(0));
        for (std::size_t u = 0; u < up.dim; ++u)
            for (std::size_t a = 0; a < n2; ++a) alpha.at(u, a) = w[u * n2 + a];
        std::vector<Rational> beta(w.begin() + static_cast<long>(n2 * up.dim), w.end());
        out.alpha.push_back(std::move(alpha));
        out.beta.push_back(std::move(beta));
    }
    return out;
}

std::vector<ProlongSpace> prolong_all(const GradedLA& g, std::size_t max_level) {
    std::vector<ProlongSpace> levels;
    std::size_t zeros = 0;
    for (std::size_t k = 1; zeros < 2; ++k) {
        if (k > max_level)
            throw std::runtime_error("prolongation did not terminate by level " +
                                     std::to_string(max_level));
        levels.push_back(prolong_step(g, k, levels));
        zeros = levels.back().dim() == 0 ? zeros + 1 : 0;
    }
    return levels;
}

std::size_t symmetry_dimension(const GradedLA& g, std::size_t max_level) {
    std::size_t total = 1 + 2 * g.n + g.g0_basis.size();
    for (const ProlongSpace& p : prolong_all(g, max_level)) total += p.dim();
    return total;
}

}  // namespace malp
