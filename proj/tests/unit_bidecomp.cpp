#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "malp/bidecomp.hpp"
#include "malp/randgen.hpp"

using namespace malp;

namespace {

IndexTuple range_tuple(int from, int to) {
    IndexTuple t;
    for (int i = from; i <= to; ++i) t.push_back(i);
    return t;
}

/* w = c e_1..n* - e_{n+1}..e_{2n}* on dim 2n */
ExteriorForm standard_pair_form(int n, const Rational& c) {
    ExteriorForm w(2 * n, n);
    w.set(range_tuple(1, n), c);
    w.set(range_tuple(n + 1, 2 * n), Rational(-1));
    return w;
}

Vec basis_vec(int dim, int i, long c = 1) {
    Vec v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i) - 1] = Rational(c);
    return v;
}

Subspace coord_span(int dim, std::vector<int> idx) {
    Subspace s;
    s.ambient = dim;
    for (int i : idx) s.basis.push_back(basis_vec(dim, i));
    return s;
}

}  // namespace

TEST_CASE("decomposability: dual routes agree on knowns") {
    ExteriorForm sum(4, 2);
    sum.set({1, 2}, Rational(1));
    sum.set({3, 4}, Rational(1));
    CHECK(!is_decomposable(sum).decomposable);

    ExteriorForm single(4, 2);
    single.set({1, 2}, Rational(3));
    auto d = is_decomposable(single);
    CHECK(d.decomposable);
    REQUIRE(d.factors.size() == 2);

    /* (e1+e2)* ^ e3* is decomposable despite two stored terms */
    ExteriorForm prod(4, 2);
    prod.set({1, 3}, Rational(1));
    prod.set({2, 3}, Rational(1));
    CHECK(is_decomposable(prod).decomposable);

    CHECK(!is_decomposable(ExteriorForm(4, 2)).decomposable);

    ExteriorForm top(4, 4);
    top.set({1, 2, 3, 4}, Rational(-7));
    CHECK(is_decomposable(top).decomposable);

    /* degree-3 on dim 6: sum of the two halves is not decomposable */
    CHECK(!is_decomposable(standard_pair_form(3, Rational(1))).decomposable);
}

TEST_CASE("decomposability factors reproduce the form under random pullback") {
    std::mt19937_64 rng(5);
    ExteriorForm w(6, 3);
    w.set({1, 2, 3}, Rational(1));
    for (int t = 0; t < 5; ++t) {
        Matrix<Rational> g = random_unimodular(6, rng);
        ExteriorForm wg = pullback_linear(g, w);
        auto d = is_decomposable(wg);
        CHECK(d.decomposable);
        /* factor verification happens inside is_decomposable; reaching here
         * with decomposable = true means the wedge matched exactly */
    }
}

TEST_CASE("epsilon normalization equals the standard volume") {
    for (int n : {1, 2, 3}) {
        ExteriorForm eps = epsilon_from_theta(standard_symplectic(n));
        ExteriorForm vol(2 * n, 2 * n);
        vol.set(range_tuple(1, 2 * n), Rational(1));
        CHECK(eps == vol);
    }
}

TEST_CASE("trace operator on the standard pair: eigenvalues split the halves") {
    int n = 3, m = 2 * n;
    Rational c(2);
    ExteriorForm theta = standard_symplectic(n);
    ExteriorForm w = standard_pair_form(n, c);

    HitchinData hd = hitchin_operator(w, epsilon_from_theta(theta));
    CHECK(!hd.even_degree_warning);
    CHECK(hd.lambda == c * c);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rational expect(0);
            if (i == j) expect = i < n ? -c : c;
            CHECK(hd.K.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == expect);
        }
}

TEST_CASE("trace operator for even degree is scalar and carries the flag") {
    int n = 2;
    Rational c(3);
    ExteriorForm theta = standard_symplectic(n);
    ExteriorForm w = standard_pair_form(n, c);

    HitchinData hd = hitchin_operator(w, epsilon_from_theta(theta));
    CHECK(hd.even_degree_warning);
    CHECK(hd.lambda == c * c);
    /* K = -c id: no splitting information at even degree */
    CHECK(hd.K == Matrix<Rational>::identity(4, Rational(0)) * (-c));
}

TEST_CASE("recovery reproduces the standard pair exactly") {
    int n = 3;
    ExteriorForm theta = standard_symplectic(n);
    for (Rational c : {Rational(2), Rational(-3), Rational(1, 2)}) {
        ExteriorForm w = standard_pair_form(n, c);
        BiDecomposition bd = bidecompose_odd(w, theta);

        ExteriorForm w1(2 * n, n), w2(2 * n, n);
        w1.set(range_tuple(1, n), c);
        w2.set(range_tuple(n + 1, 2 * n), Rational(1));
        bool direct = bd.w1 == w1 && bd.w2 == w2;
        bool swapped = bd.w1 == -w2 && bd.w2 == -w1;
        CHECK((direct || swapped));
        CHECK(bd.w1 - bd.w2 == w);
        CHECK(is_lagrangian(bd.V1, theta));
        CHECK(is_lagrangian(bd.V2, theta));
        CHECK(subspaces_transversal(bd.V1, bd.V2));
    }
}

TEST_CASE("recovery rejects non-square trace invariants") {
    int n = 3;
    ExteriorForm theta = standard_symplectic(n);
    /* complex-type form: real part of a product of complex covectors; its
     * halves are complex conjugate, never rational */
    ExteriorForm w(6, 3);
    w.set({1, 2, 3}, Rational(1));
    w.set({1, 5, 6}, Rational(-1));
    w.set({2, 4, 6}, Rational(1));
    w.set({3, 4, 5}, Rational(-1));
    CHECK(hitchin_operator(w, epsilon_from_theta(theta)).lambda == Rational(-4));
    CHECK_THROWS_AS(bidecompose_odd(w, theta), std::domain_error);

    /* scaled halves still recover: 2 a* - 3 b* has lambda = 36 */
    ExteriorForm s(6, 3);
    s.set({1, 2, 3}, Rational(2));
    s.set({4, 5, 6}, Rational(-3));
    CHECK(hitchin_operator(s, epsilon_from_theta(theta)).lambda == Rational(36));
    BiDecomposition bd = bidecompose_odd(s, theta);
    CHECK(bd.w1 - bd.w2 == s);
    ExteriorForm s1(6, 3);
    s1.set({1, 2, 3}, Rational(2));
    CHECK((bd.w1 == s1 || bd.w2 == -s1));
}

TEST_CASE("recovery is equivariant under random symplectic conjugation") {
    int n = 3;
    ExteriorForm theta = standard_symplectic(n);
    std::mt19937_64 rng(17);
    Rational c(5, 2);
    ExteriorForm w0 = standard_pair_form(n, c);
    for (int t = 0; t < 3; ++t) {
        Matrix<Rational> s = random_symplectic(n, rng);
        ExteriorForm w = pullback_linear(s, w0);
        CHECK(pullback_linear(s, theta) == theta);
        BiDecomposition bd = bidecompose_odd(w, theta);
        CHECK(bd.w1 - bd.w2 == w);
        CHECK(is_lagrangian(bd.V1, theta));
        CHECK(is_lagrangian(bd.V2, theta));
        CHECK(subspaces_transversal(bd.V1, bd.V2));
        CHECK(bd.w1.eval(bd.V1.basis) != Rational(0));
        /* the pieces pull back from the constructed halves */
        HitchinData hd = hitchin_operator(w, epsilon_from_theta(theta));
        CHECK(hd.lambda == c * c);
    }
}

TEST_CASE("normalization recovers the pair constant") {
    int n = 3, m = 2 * n;
    ExteriorForm theta = standard_symplectic(n);
    Rational c(5, 3);

    ExteriorForm w1(m, n), w2(m, n);
    w1.set(range_tuple(1, n), c);
    w2.set(range_tuple(n + 1, m), Rational(1));

    NormalizedPair np = normalize_symplectic(w1, w2, theta);
    CHECK(np.c == c);

    /* scrambled by a symplectic map the constant is invariant */
    std::mt19937_64 rng(23);
    for (int t = 0; t < 3; ++t) {
        Matrix<Rational> s = random_symplectic(n, rng);
        NormalizedPair sp =
            normalize_symplectic(pullback_linear(s, w1), pullback_linear(s, w2), theta);
        CHECK(sp.c == c);
    }
}

TEST_CASE("verification accepts the true pair and names the first failure") {
    int n = 3, m = 2 * n;
    ExteriorForm theta = standard_symplectic(n);
    ExteriorForm w = standard_pair_form(n, Rational(2));

    VerifyResult ok = verify_bidecomposition(w, coord_span(m, {1, 2, 3}),
                                             coord_span(m, {4, 5, 6}), theta);
    CHECK(ok.ok);
    REQUIRE(ok.value);
    ExteriorForm w1(m, n);
    w1.set({1, 2, 3}, Rational(2));
    CHECK(ok.value->w1 == w1);

    VerifyResult bad_dim = verify_bidecomposition(w, coord_span(m, {1, 2}),
                                                  coord_span(m, {4, 5, 6}), theta);
    CHECK(!bad_dim.ok);
    CHECK(bad_dim.reason == "halves must have dimension n");

    VerifyResult not_lag = verify_bidecomposition(w, coord_span(m, {1, 2, 4}),
                                                  coord_span(m, {3, 5, 6}), theta);
    CHECK(!not_lag.ok);
    CHECK(not_lag.reason == "V1 is not Lagrangian");

    VerifyResult not_split = verify_bidecomposition(w, coord_span(m, {1, 2, 6}),
                                                    coord_span(m, {4, 5, 3}), theta);
    CHECK(!not_split.ok);
    CHECK(not_split.reason == "w does not split along the pair");

    VerifyResult not_trans = verify_bidecomposition(w, coord_span(m, {1, 2, 3}),
                                                    coord_span(m, {3, 5, 6}), theta);
    CHECK(!not_trans.ok);
    CHECK(not_trans.reason == "halves are not transversal");
}

TEST_CASE("uniqueness oracle: odd degree sees a single pair") {
    int n = 3, m = 2 * n;
    ExteriorForm theta = standard_symplectic(n);
    ExteriorForm w = standard_pair_form(n, Rational(2));

    std::vector<std::pair<Subspace, Subspace>> known{
        {coord_span(m, {1, 2, 3}), coord_span(m, {4, 5, 6})}};
    UniquenessReport rep = uniqueness_oracle(w, theta, 50, 99, known);
    CHECK(rep.trials == 50);
    CHECK(rep.accepted_count >= 1);
    CHECK(rep.distinct_pairs.size() == 1);
}

TEST_CASE("uniqueness fails at degree two: the known second pair is accepted") {
    /* dim 4, theta = e1*^e3* + e2*^e4*, w = e1*^e2* - e3*^e4* */
    int m = 4;
    ExteriorForm theta = standard_symplectic(2);
    ExteriorForm w(m, 2);
    w.set({1, 2}, Rational(1));
    w.set({3, 4}, Rational(-1));

    Subspace e1p{m, {basis_vec(m, 1), {Rational(0), Rational(1), Rational(0), Rational(-1)}}};
    Subspace e2p{m, {{Rational(1), Rational(0), Rational(-1), Rational(0)}, basis_vec(m, 4)}};

    std::vector<std::pair<Subspace, Subspace>> pairs{
        {coord_span(m, {1, 2}), coord_span(m, {3, 4})}, {e1p, e2p}};
    UniquenessReport rep = uniqueness_oracle(w, theta, 0, 1, pairs);
    CHECK(rep.accepted_count == 2);
    CHECK(rep.distinct_pairs.size() == 2);
}

TEST_CASE("equivalence of decomposables: equal, perpendicular, unrelated") {
    int n = 3, m = 2 * n;
    ExteriorForm theta = standard_symplectic(n);

    ExteriorForm w(m, 3);
    w.set({1, 2, 4}, Rational(1));
    ExteriorForm wp(m, 3);
    wp.set({2, 3, 6}, Rational(1));
    /* annihilators span(e3,e5,e6) and span(e1,e4,e5) pair to zero */
    CHECK(decomposable_equivalence(w, wp, theta));

    CHECK(decomposable_equivalence(w, w * Rational(2), theta));

    ExteriorForm a(m, 3), b(m, 3);
    a.set({1, 2, 3}, Rational(1));
    b.set({4, 5, 6}, Rational(1));
    CHECK(!decomposable_equivalence(a, b, theta));

    ExteriorForm nd(m, 3);
    nd.set({1, 2, 3}, Rational(1));
    nd.set({4, 5, 6}, Rational(1));
    CHECK_THROWS_AS(decomposable_equivalence(nd, a, theta), std::invalid_argument);
}

TEST_CASE("proportionality oracle: effective forms sharing zeros are proportional") {
    int m = 4;
    ExteriorForm theta = standard_symplectic(2);
    ExteriorForm w(m, 2);
    w.set({1, 2}, Rational(1));
    w.set({3, 4}, Rational(-1));

    ProportionalityReport same = effective_proportionality_oracle(w, w * Rational(3), theta);
    CHECK(same.implication_holds);
    CHECK(same.mu == Rational(3));
    CHECK(same.isotropic_samples > 0);

    /* flipping the sign of one piece breaks the implication on a grid plane */
    ExteriorForm bad(m, 2);
    bad.set({1, 2}, Rational(1));
    bad.set({3, 4}, Rational(1));
    ProportionalityReport rep = effective_proportionality_oracle(w, bad, theta);
    CHECK(!rep.implication_holds);
    CHECK(rep.counterexample);
    CHECK(!rep.mu);
}

TEST_CASE("pair keys are unordered and basis independent") {
    int m = 6;
    Subspace v1 = coord_span(m, {1, 2, 3});
    Subspace v2 = coord_span(m, {4, 5, 6});
    CHECK(pair_key(v1, v2) == pair_key(v2, v1));

    Subspace v1alt{m, {basis_vec(m, 1),
                       {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)},
                       basis_vec(m, 3)}};
    CHECK(pair_key(v1alt, v2) == pair_key(v1, v2));
}
