#include "malp/bidecomp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "malp/randgen.hpp"

namespace malp {

DecompositionCheck is_decomposable(const ExteriorForm& w) {
    DecompositionCheck out;
    if (w.is_zero()) return out;
    int m = w.dim(), k = w.degree();
    if (k == 0 || k == m) {
        out.decomposable = true;
        if (k == m) {
            /* single factor chain: c e_1* ^ e_2* ^ ... */
            for (int i = 1; i <= m; ++i) {
                Vec row(static_cast<std::size_t>(m), Rational(0));
                IndexTuple all;
                for (int t = 1; t <= m; ++t) all.push_back(t);
                row[static_cast<std::size_t>(i) - 1] = i == 1 ? w.coefficient(all) : Rational(1);
                out.factors.push_back(std::move(row));
            }
        }
        return out;
    }

    Subspace ann = annihilator(w);
    bool by_annihilator = ann.dim() == m - k;

    /* Pluecker quadrics: for every (k-1)-tuple J and (k+1)-tuple K,
     * sum_l (-1)^l p_{J,K_l} p_{K \ K_l} = 0 */
    bool by_pluecker = true;
    auto js = index_tuples(m, k - 1);
    auto ks = index_tuples(m, k + 1);
    for (const auto& j : js) {
        for (const auto& kk : ks) {
            Rational acc(0);
            for (std::size_t l = 0; l < kk.size(); ++l) {
                IndexTuple left = j;
                left.push_back(kk[l]);
                IndexTuple right;
                for (std::size_t s = 0; s < kk.size(); ++s)
                    if (s != l) right.push_back(kk[s]);
                Rational term = w.coefficient(left) * w.coefficient(right);
                if (l % 2 == 0) term = -term;  /* (-1)^l with l starting at 1 */
                acc += term;
            }
            if (!acc.is_zero()) {
                by_pluecker = false;
                break;
            }
        }
        if (!by_pluecker) break;
    }

    if (by_annihilator != by_pluecker)
        throw std::logic_error("decomposability tests disagree; internal inconsistency");

    out.decomposable = by_annihilator;
    if (!out.decomposable) return out;

    /* factor space: covectors vanishing on the annihilator */
    std::vector<Vec> covs = dual_annihilator(ann);
    if (static_cast<int>(covs.size()) != k)
        throw std::logic_error("factor extraction: unexpected covector count");
    ExteriorForm prod(m, 0);
    prod.add({}, Rational(1));
    for (const auto& cv : covs) {
        ExteriorForm one(m, 1);
        for (int i = 1; i <= m; ++i) one.add({i}, cv[static_cast<std::size_t>(i) - 1]);
        prod = wedge(prod, one);
    }
    Rational scale;
    for (const auto& [idx, c] : prod.terms()) {
        scale = w.coefficient(idx) / c;
        break;
    }
    for (auto& x : covs.front()) x *= scale;
    /* re-verify the factorization exactly */
    ExteriorForm check(m, 0);
    check.add({}, Rational(1));
    for (const auto& cv : covs) {
        ExteriorForm one(m, 1);
        for (int i = 1; i <= m; ++i) one.add({i}, cv[static_cast<std::size_t>(i) - 1]);
        check = wedge(check, one);
    }
    if (!(check == w)) throw std::logic_error("factor extraction failed to reproduce the form");
    out.factors = std::move(covs);
    return out;
}

static std::vector<Vec> dual_basis(const std::vector<Vec>& basis) {
    std::size_t m = basis.front().size();
    Matrix<Rational> p(m, m, Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < m; ++i) p.at(i, j) = basis[j][i];
    auto inv = p.inverse();
    if (!inv) throw std::invalid_argument("dual basis of a dependent family");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i) {
        Vec r(m, Rational(0));
        for (std::size_t j = 0; j < m; ++j) r[j] = inv->at(i, j);
        rows.push_back(std::move(r));
    }
    return rows;
}

static ExteriorForm covector_wedge(int m, const std::vector<Vec>& covs, std::size_t from,
                                   std::size_t count) {
    ExteriorForm prod(m, 0);
    prod.add({}, Rational(1));
    for (std::size_t t = 0; t < count; ++t) {
        ExteriorForm one(m, 1);
        for (int i = 1; i <= m; ++i) one.add({i}, covs[from + t][static_cast<std::size_t>(i) - 1]);
        prod = wedge(prod, one);
    }
    return prod;
}

NormalizedPair normalize_symplectic(const ExteriorForm& w1, const ExteriorForm& w2,
                                    const ExteriorForm& theta) {
    int m = w1.dim(), n = w1.degree();
    if (m != 2 * n) throw std::invalid_argument("normalize_symplectic needs an n-form on dim 2n");
    if (w2.dim() != m || w2.degree() != n)
        throw std::invalid_argument("pair degrees or dimensions differ");
    if (w1.is_zero() || w2.is_zero())
        throw std::invalid_argument("pair pieces must be nonzero");
    if (!is_decomposable(w1).decomposable || !is_decomposable(w2).decomposable)
        throw std::invalid_argument("pair pieces must be decomposable");

    Subspace V2 = annihilator(w1), V1 = annihilator(w2);
    if (V1.dim() != n || V2.dim() != n)
        throw std::invalid_argument("pair annihilators do not have dimension n");
    if (!is_lagrangian(V1, theta) || !is_lagrangian(V2, theta))
        throw std::invalid_argument("pair annihilators are not Lagrangian");
    if (!subspaces_transversal(V1, V2))
        throw std::invalid_argument("pair annihilators are not transversal");

    std::vector<Vec> a = span_rref(m, V1.basis).basis;

    /* b_j in V2 with theta(a_i, b_j) = delta_ij */
    Matrix<Rational> g(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < n; ++t)
            g.at(static_cast<std::size_t>(i), static_cast<std::size_t>(t)) =
                pairing(theta, a[static_cast<std::size_t>(i)], V2.basis[static_cast<std::size_t>(t)]);
    auto ginv = g.inverse();
    if (!ginv) throw std::invalid_argument("pairing between the halves is degenerate");
    std::vector<Vec> b;
    for (int j = 0; j < n; ++j) {
        Vec bj(static_cast<std::size_t>(m), Rational(0));
        for (int t = 0; t < n; ++t) {
            Rational cjt = ginv->at(static_cast<std::size_t>(t), static_cast<std::size_t>(j));
            for (int s = 0; s < m; ++s)
                bj[static_cast<std::size_t>(s)] +=
                    cjt * V2.basis[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
        }
        b.push_back(std::move(bj));
    }

    Rational vol1 = w1.eval(a);
    Rational vol2 = w2.eval(b);
    if (vol1.is_zero()) throw std::invalid_argument("w1 is degenerate on its carrier");
    if (vol2.is_zero()) throw std::invalid_argument("w2 is degenerate on its carrier");

    /* scale a_1 by vol2 and b_1 by 1/vol2: w2 becomes exactly the b-block
     * volume and w1 picks up c = vol1 * vol2 */
    for (auto& x : a.front()) x *= vol2;
    for (auto& x : b.front()) x /= vol2;
    Rational c = vol1 * vol2;

    /* exact re-verification of the normal form */
    std::vector<Vec> full = a;
    full.insert(full.end(), b.begin(), b.end());
    std::vector<Vec> duals = dual_basis(full);
    ExteriorForm astar = covector_wedge(m, duals, 0, static_cast<std::size_t>(n));
    ExteriorForm bstar = covector_wedge(m, duals, static_cast<std::size_t>(n),
                                        static_cast<std::size_t>(n));
    if (!(w1 == astar * c)) throw std::logic_error("normal form failed: w1 != c a*");
    if (!(w2 == bstar)) throw std::logic_error("normal form failed: w2 != b*");
    ExteriorForm theta_check(m, 2);
    for (int i = 0; i < n; ++i) {
        ExteriorForm ai(m, 1), bi(m, 1);
        for (int s = 1; s <= m; ++s) {
            ai.add({s}, duals[static_cast<std::size_t>(i)][static_cast<std::size_t>(s) - 1]);
            bi.add({s}, duals[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(s) - 1]);
        }
        theta_check += wedge(ai, bi);
    }
    if (!(theta_check == theta)) throw std::logic_error("normal form failed: theta mismatch");

    return NormalizedPair{std::move(a), std::move(b), c};
}

ExteriorForm epsilon_from_theta(const ExteriorForm& theta) {
    int m = theta.dim();
    int n = m / 2;
    ExteriorForm eps = wedge_power(theta, n);
    Rational fact(1);
    for (int i = 2; i <= n; ++i) fact *= Rational(i);
    Rational sign = (n * (n - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
    return eps * (sign / fact);
}

HitchinData hitchin_operator(const ExteriorForm& psi, const ExteriorForm& eps) {
    int m = psi.dim();
    if (eps.dim() != m || eps.degree() != m)
        throw std::invalid_argument("eps must be a top form on the same space");
    if (eps.is_zero()) throw std::invalid_argument("eps must be nonzero");

    auto tuples = index_tuples(m, m - 1);
    Matrix<Rational> d(tuples.size(), static_cast<std::size_t>(m), Rational(0));
    for (int t = 0; t < m; ++t) {
        Vec e(static_cast<std::size_t>(m), Rational(0));
        e[static_cast<std::size_t>(t)] = Rational(1);
        auto col = form_coordinates(interior_vector(e, eps), tuples);
        for (std::size_t r = 0; r < tuples.size(); ++r) d.at(r, static_cast<std::size_t>(t)) = col[r];
    }
    auto dinv = d.inverse();
    if (!dinv) throw std::logic_error("contraction with a nonzero top form must be invertible");

    HitchinData hd{Matrix<Rational>(static_cast<std::size_t>(m), static_cast<std::size_t>(m),
                                    Rational(0)),
                   Rational(0), eps, psi.degree() % 2 == 0};
    for (int u = 0; u < m; ++u) {
        Vec e(static_cast<std::size_t>(m), Rational(0));
        e[static_cast<std::size_t>(u)] = Rational(1);
        ExteriorForm eta = wedge(interior_vector(e, psi), psi);
        auto rhs = form_coordinates(eta, tuples);
        auto v = dinv->apply(rhs);
        for (std::size_t i = 0; i < v.size(); ++i) hd.K.at(i, static_cast<std::size_t>(u)) = v[i];
    }
    Matrix<Rational> k2 = hd.K * hd.K;
    Rational tr(0);
    for (std::size_t i = 0; i < k2.rows(); ++i) tr += k2.at(i, i);
    hd.lambda = tr / Rational(m);
    return hd;
}

static std::optional<BiDecomposition> try_pair(const ExteriorForm& w, const ExteriorForm& w1,
                                               const ExteriorForm& theta) {
    int n = w.degree();
    ExteriorForm w2 = w1 - w;
    if (w1.is_zero() || w2.is_zero()) return std::nullopt;
    if (!is_decomposable(w1).decomposable) return std::nullopt;
    if (!is_decomposable(w2).decomposable) return std::nullopt;
    Subspace V2 = annihilator(w1), V1 = annihilator(w2);
    if (V1.dim() != n || V2.dim() != n) return std::nullopt;
    if (!is_lagrangian(V1, theta) || !is_lagrangian(V2, theta)) return std::nullopt;
    if (!subspaces_transversal(V1, V2)) return std::nullopt;
    if (w1.eval(V1.basis).is_zero() || w2.eval(V2.basis).is_zero()) return std::nullopt;
    return BiDecomposition{w1, w2, V1, V2};
}

/* total deterministic preference between the two valid branches: positive
 * coefficient on the first stored term wins; ties fall back to term-map order */
static bool prefer_first(const BiDecomposition& x, const BiDecomposition& y) {
    int px = x.w1.terms().begin()->second.sign() > 0 ? 0 : 1;
    int py = y.w1.terms().begin()->second.sign() > 0 ? 0 : 1;
    if (px != py) return px < py;
    return x.w1.terms() < y.w1.terms();
}

BiDecomposition bidecompose_odd(const ExteriorForm& w, const ExteriorForm& theta) {
    int m = w.dim(), n = w.degree();
    if (m != 2 * n) throw std::invalid_argument("bidecompose needs an n-form on dim 2n");
    if (n % 2 == 0)
        throw std::invalid_argument(
            "recovery formula applies to odd degree only; supply the pair explicitly for even n");
    if (n < 3) throw std::invalid_argument("recovery needs degree >= 3");
    if (w.is_zero()) throw std::invalid_argument("zero form");

    ExteriorForm eps = epsilon_from_theta(theta);
    HitchinData hd = hitchin_operator(w, eps);
    auto s = hd.lambda.sqrt();
    if (!s || s->is_zero())
        throw std::domain_error(
            "trace invariant is not a positive rational square; no rational bi-decomposition");
    Rational factor = s->pow(-static_cast<long>(n));
    ExteriorForm kw = pullback_linear(hd.K, w);
    Rational half(1, 2);
    ExteriorForm u_plus = (w - kw * factor) * half;
    ExteriorForm u_minus = (w + kw * factor) * half;

    auto c_plus = try_pair(w, u_plus, theta);
    auto c_minus = try_pair(w, u_minus, theta);
    if (c_plus && c_minus)
        return prefer_first(*c_plus, *c_minus) ? *c_plus : *c_minus;
    if (c_plus) return *c_plus;
    if (c_minus) return *c_minus;
    throw std::domain_error("no branch validates: the form is not bi-decomposable");
}

VerifyResult verify_bidecomposition(const ExteriorForm& w, const Subspace& V1, const Subspace& V2,
                                    const ExteriorForm& theta) {
    VerifyResult out;
    int m = w.dim(), n = w.degree();
    auto fail = [&](const std::string& r) {
        out.ok = false;
        out.reason = r;
        return out;
    };
    if (V1.ambient != m || V2.ambient != m) return fail("subspace ambient dimension mismatch");
    if (V1.dim() != n || V2.dim() != n) return fail("halves must have dimension n");
    if (!subspaces_transversal(V1, V2)) return fail("halves are not transversal");
    if (!is_lagrangian(V1, theta)) return fail("V1 is not Lagrangian");
    if (!is_lagrangian(V2, theta)) return fail("V2 is not Lagrangian");

    std::size_t mm = static_cast<std::size_t>(m), nn = static_cast<std::size_t>(n);
    Matrix<Rational> p(mm, mm, Rational(0));
    for (std::size_t j = 0; j < nn; ++j)
        for (std::size_t i = 0; i < mm; ++i) {
            p.at(i, j) = V1.basis[j][i];
            p.at(i, nn + j) = V2.basis[j][i];
        }
    auto pinv = p.inverse();
    if (!pinv) return fail("halves do not span");

    Matrix<Rational> pi1(mm, mm, Rational(0)), pi2(mm, mm, Rational(0));
    for (std::size_t i = 0; i < mm; ++i)
        for (std::size_t j = 0; j < mm; ++j) {
            Rational s1(0), s2(0);
            for (std::size_t t = 0; t < nn; ++t) {
                s1 += p.at(i, t) * pinv->at(t, j);
                s2 += p.at(i, nn + t) * pinv->at(nn + t, j);
            }
            pi1.at(i, j) = s1;
            pi2.at(i, j) = s2;
        }

    ExteriorForm w1 = pullback_linear(pi1, w);
    ExteriorForm w2 = -pullback_linear(pi2, w);
    if (!(w1 - w2 == w)) return fail("w does not split along the pair");
    if (w1.eval(V1.basis).is_zero()) return fail("w1 is not a volume on V1");
    if (w2.eval(V2.basis).is_zero()) return fail("w2 is not a volume on V2");

    out.ok = true;
    out.value = BiDecomposition{std::move(w1), std::move(w2), V1, V2};
    return out;
}

static std::string vecs_key(const std::vector<Vec>& rows) {
    std::string s;
    for (const auto& r : rows) {
        for (const auto& x : r) {
            s += x.str();
            s += ",";
        }
        s += ";";
    }
    return s;
}

std::string pair_key(const Subspace& V1, const Subspace& V2) {
    std::string k1 = vecs_key(span_rref(V1.ambient, V1.basis).basis);
    std::string k2 = vecs_key(span_rref(V2.ambient, V2.basis).basis);
    return k1 < k2 ? k1 + "|" + k2 : k2 + "|" + k1;
}

UniquenessReport uniqueness_oracle(const ExteriorForm& w, const ExteriorForm& theta, int trials,
                                   std::uint64_t seed,
                                   const std::vector<std::pair<Subspace, Subspace>>& extra_pairs) {
    UniquenessReport rep;
    std::set<std::string> seen;
    auto consider = [&](const Subspace& a, const Subspace& b) {
        VerifyResult v = verify_bidecomposition(w, a, b, theta);
        if (!v.ok) return;
        ++rep.accepted_count;
        std::string key = pair_key(a, b);
        if (seen.insert(key).second) {
            rep.distinct_pairs.push_back(key);
            rep.accepted.push_back(*v.value);
        }
    };
    for (const auto& [a, b] : extra_pairs) consider(a, b);

    int n = w.dim() / 2;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Matrix<Rational> s = random_symplectic(n, rng);
        Subspace a, b;
        a.ambient = b.ambient = w.dim();
        for (int j = 0; j < n; ++j) {
            Vec va(static_cast<std::size_t>(w.dim())), vb(static_cast<std::size_t>(w.dim()));
            for (int i = 0; i < w.dim(); ++i) {
                va[static_cast<std::size_t>(i)] =
                    s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                vb[static_cast<std::size_t>(i)] =
                    s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(n + j));
            }
            a.basis.push_back(std::move(va));
            b.basis.push_back(std::move(vb));
        }
        ++rep.trials;
        consider(a, b);
    }
    return rep;
}

bool decomposable_equivalence(const ExteriorForm& w, const ExteriorForm& wp,
                              const ExteriorForm& theta) {
    int m = w.dim(), n = w.degree();
    if (wp.dim() != m || wp.degree() != n)
        throw std::invalid_argument("equivalence needs forms of one degree on one space");
    if (!is_decomposable(w).decomposable || !is_decomposable(wp).decomposable)
        throw std::invalid_argument("equivalence test expects decomposable inputs");

    auto tuples = index_tuples(m, n);
    auto taus = n >= 2 ? index_tuples(m, n - 2) : std::vector<IndexTuple>{};
    Matrix<Rational> a(tuples.size(), 1 + taus.size(), Rational(0));
    auto wc = form_coordinates(w, tuples);
    for (std::size_t r = 0; r < tuples.size(); ++r) a.at(r, 0) = wc[r];
    for (std::size_t t = 0; t < taus.size(); ++t) {
        ExteriorForm tau(m, n - 2);
        tau.set(taus[t], Rational(1));
        auto col = form_coordinates(wedge(tau, theta), tuples);
        for (std::size_t r = 0; r < tuples.size(); ++r) a.at(r, 1 + t) = col[r];
    }
    bool by_solve = false;
    if (auto sol = a.solve(form_coordinates(wp, tuples))) {
        if (!(*sol)[0].is_zero()) {
            by_solve = true;
        } else {
            /* lambda can shift away from zero iff w itself lies in the
             * theta-wedge span */
            Matrix<Rational> b(tuples.size(), taus.size(), Rational(0));
            for (std::size_t r = 0; r < tuples.size(); ++r)
                for (std::size_t t = 0; t < taus.size(); ++t) b.at(r, t) = a.at(r, 1 + t);
            by_solve = b.solve(wc).has_value();
        }
    }

    Subspace wa = annihilator(w), wpa = annihilator(wp);
    bool perpendicular = true;
    for (const auto& u : wa.basis)
        for (const auto& v : wpa.basis)
            if (!pairing(theta, u, v).is_zero()) {
                perpendicular = false;
                break;
            }
    bool by_annihilators = subspace_equal(wa, wpa) || perpendicular;

    if (by_solve != by_annihilators)
        throw std::logic_error("equivalence criteria disagree; internal inconsistency");
    return by_solve;
}

ProportionalityReport effective_proportionality_oracle(const ExteriorForm& w,
                                                       const ExteriorForm& wp,
                                                       const ExteriorForm& theta) {
    if (w.dim() > 6)
        throw std::invalid_argument("grid oracle is limited to dim <= 6");
    if (w.is_zero()) throw std::invalid_argument("oracle expects a nonzero reference form");
    ProportionalityReport rep;
    int m = w.dim(), k = w.degree();

    std::vector<Vec> grid;
    for (int i = 0; i < m; ++i) {
        Vec e(static_cast<std::size_t>(m), Rational(0));
        e[static_cast<std::size_t>(i)] = Rational(1);
        grid.push_back(e);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int s : {1, -1}) {
                Vec v(static_cast<std::size_t>(m), Rational(0));
                v[static_cast<std::size_t>(i)] = Rational(1);
                v[static_cast<std::size_t>(j)] = Rational(s);
                grid.push_back(std::move(v));
            }

    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            std::vector<Vec> sub;
            for (auto i : pick) sub.push_back(grid[i]);
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (std::size_t j = i + 1; j < sub.size(); ++j)
                    if (!pairing(theta, sub[i], sub[j]).is_zero()) return;
            if (static_cast<int>(span_rref(m, sub).basis.size()) != k) return;
            ++rep.isotropic_samples;
            if (w.eval(sub).is_zero() && !wp.eval(sub).is_zero() && rep.implication_holds) {
                rep.implication_holds = false;
                rep.counterexample = sub;
            }
            return;
        }
        for (std::size_t i = start; i < grid.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    for (const auto& [idx, c] : w.terms()) {
        Rational mu = wp.coefficient(idx) / c;
        if (w * mu == wp) rep.mu = mu;
        break;
    }
    return rep;
}

}  // namespace malp
