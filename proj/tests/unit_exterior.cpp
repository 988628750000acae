#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "malp/exterior.hpp"
#include "malp/matrix.hpp"
#include "malp/randgen.hpp"

using namespace malp;

namespace {

Matrix<Rational> mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    Matrix<Rational> m(r, c, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(entries[i * c + j]);
    return m;
}

ExteriorForm covector(int dim, const Vec& v) {
    ExteriorForm f(dim, 1);
    for (int i = 1; i <= dim; ++i) f.add({i}, v[static_cast<std::size_t>(i) - 1]);
    return f;
}

Vec basis_vec(int dim, int i, long c = 1) {
    Vec v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i) - 1] = Rational(c);
    return v;
}

}  // namespace

TEST_CASE("matrix rref, rank, kernel against hand-reduced oracles") {
    Matrix<Rational> a = mat(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(a.rank() == 2);
    auto ker = a.kernel_basis();
    REQUIRE(ker.size() == 1);
    /* kernel of [[1,2,3],[4,5,6]] is spanned by (1,-2,1) */
    Rational s = ker[0][0];
    CHECK(ker[0][1] == s * Rational(-2));
    CHECK(ker[0][2] == s * Rational(1));

    Matrix<Rational> b = mat(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 4});
    CHECK(b.rank() == 3);
    CHECK(b.kernel_basis().empty());

    auto gram_ker = kernel_via_gram(a);
    REQUIRE(gram_ker.size() == 1);
    Rational t = gram_ker[0][0];
    CHECK(gram_ker[0][1] == t * Rational(-2));
    CHECK(gram_ker[0][2] == t * Rational(1));
}

TEST_CASE("matrix solve, inverse, determinant") {
    Matrix<Rational> a = mat(2, 2, {2, 1, 1, 1});
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(*inv == mat(2, 2, {1, -1, -1, 2}));
    CHECK((a * *inv) == Matrix<Rational>::identity(2, Rational(0)));
    CHECK(a.det() == Rational(1));

    CHECK(mat(2, 2, {1, 2, 3, 4}).det() == Rational(-2));
    CHECK(mat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}).det() == Rational(-1));
    CHECK(mat(2, 2, {1, 2, 2, 4}).det() == Rational(0));
    CHECK(!mat(2, 2, {1, 2, 2, 4}).inverse());

    auto sol = mat(2, 2, {1, 1, 1, -1}).solve({Rational(3), Rational(1)});
    REQUIRE(sol);
    CHECK((*sol)[0] == Rational(2));
    CHECK((*sol)[1] == Rational(1));

    /* inconsistent system */
    CHECK(!mat(2, 1, {1, 1}).solve({Rational(1), Rational(2)}));

    /* underdetermined: any exact solution is acceptable */
    Matrix<Rational> u = mat(1, 2, {2, 3});
    auto us = u.solve({Rational(6)});
    REQUIRE(us);
    CHECK((*us)[0] * Rational(2) + (*us)[1] * Rational(3) == Rational(6));
}

TEST_CASE("wedge is graded anticommutative and associative") {
    int m = 4;
    ExteriorForm e1 = covector(m, basis_vec(m, 1));
    ExteriorForm e2 = covector(m, basis_vec(m, 2));
    ExteriorForm e3 = covector(m, basis_vec(m, 3));

    CHECK(wedge(e1, e2) == -wedge(e2, e1));
    CHECK(wedge(e1, e1).is_zero());
    CHECK(wedge(wedge(e1, e2), e3) == wedge(e1, wedge(e2, e3)));

    ExteriorForm w12 = wedge(e1, e2);
    /* 2-forms commute */
    ExteriorForm w34 = wedge(e3, covector(m, basis_vec(m, 4)));
    CHECK(wedge(w12, w34) == wedge(w34, w12));

    /* degree above dim collapses to zero */
    ExteriorForm top = wedge(wedge(w12, w34), e1);
    CHECK(top.is_zero());
    CHECK(top.degree() == 5);
}

TEST_CASE("interior product is an antiderivation and squares to zero") {
    int m = 4;
    ExteriorForm e1 = covector(m, basis_vec(m, 1));
    ExteriorForm e2 = covector(m, basis_vec(m, 2));
    ExteriorForm e3 = covector(m, basis_vec(m, 3));
    Vec v{Rational(1), Rational(2), Rational(-1), Rational(3)};

    ExteriorForm a = wedge(e1, e2);
    ExteriorForm b = wedge(a, e3);

    /* i_v(a ^ e3) = i_v(a) ^ e3 + (-1)^2 a ^ i_v(e3) */
    CHECK(interior_vector(v, b) == wedge(interior_vector(v, a), e3) + a * interior_vector(v, e3).coefficient({}));

    /* i_v i_v = 0 */
    CHECK(interior_vector(v, interior_vector(v, b)).is_zero());

    /* i_u i_v = -i_v i_u */
    Vec u{Rational(2), Rational(0), Rational(1), Rational(1)};
    CHECK(interior_vector(u, interior_vector(v, b)) == -interior_vector(v, interior_vector(u, b)));

    /* first-slot convention: i_{e_1}(e1*^e2*) = e2* */
    CHECK(interior_vector(basis_vec(m, 1), a) == e2);
    CHECK(interior_vector(basis_vec(m, 2), a) == -e1);

    /* bivector contraction composes in the fixed order */
    ExteriorForm biv(m, 2);
    biv.set({1, 2}, Rational(1));
    CHECK(interior_bivector(biv, b) == e3);
}

TEST_CASE("evaluation is the determinant of component minors") {
    int m = 4;
    ExteriorForm w(m, 2);
    w.set({1, 2}, Rational(1));
    w.set({3, 4}, Rational(-1));

    CHECK(w.eval({basis_vec(m, 1), basis_vec(m, 2)}) == Rational(1));
    CHECK(w.eval({basis_vec(m, 2), basis_vec(m, 1)}) == Rational(-1));
    CHECK(w.eval({basis_vec(m, 3), basis_vec(m, 4)}) == Rational(-1));
    Vec u{Rational(1), Rational(0), Rational(1), Rational(0)};
    Vec v{Rational(0), Rational(1), Rational(0), Rational(1)};
    /* w(e1+e3, e2+e4) = w12 + w34 = 0 */
    CHECK(w.eval({u, v}) == Rational(0));
}

TEST_CASE("pullback along linear maps is exact and contravariant") {
    int m = 4;
    ExteriorForm w(m, 2);
    w.set({1, 2}, Rational(1));
    w.set({3, 4}, Rational(-1));

    std::mt19937_64 rng(7);
    Matrix<Rational> a = random_unimodular(m, rng);
    Matrix<Rational> b = random_unimodular(m, rng);

    /* (ab)* = b* after a* */
    CHECK(pullback_linear(a * b, w) == pullback_linear(b, pullback_linear(a, w)));

    /* identity pullback */
    CHECK(pullback_linear(Matrix<Rational>::identity(m, Rational(0)), w) == w);

    /* pullback respects wedge */
    ExteriorForm e1 = covector(m, basis_vec(m, 1));
    ExteriorForm e2 = covector(m, basis_vec(m, 2));
    CHECK(pullback_linear(a, wedge(e1, e2)) ==
          wedge(pullback_linear(a, e1), pullback_linear(a, e2)));

    /* evaluation compatibility: (a* w)(u, v) = w(a u, a v) */
    Vec u = basis_vec(m, 2), v = basis_vec(m, 3);
    CHECK(pullback_linear(a, w).eval({u, v}) == w.eval({a.apply(u), a.apply(v)}));
}

TEST_CASE("standard symplectic structure and Darboux extraction") {
    int n = 3, m = 2 * n;
    ExteriorForm theta = standard_symplectic(n);
    CHECK(theta.coefficient({1, 4}) == Rational(1));
    CHECK(theta.coefficient({2, 5}) == Rational(1));
    CHECK(theta.coefficient({3, 6}) == Rational(1));
    CHECK(theta.terms().size() == 3);

    auto [as, bs] = symplectic_basis(theta);
    REQUIRE(as.size() == static_cast<std::size_t>(n));
    REQUIRE(bs.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(pairing(theta, as[i], bs[j]) == (i == j ? Rational(1) : Rational(0)));
            CHECK(pairing(theta, as[i], as[j]) == Rational(0));
            CHECK(pairing(theta, bs[i], bs[j]) == Rational(0));
        }

    /* scrambled symplectic form still yields an exact Darboux basis */
    std::mt19937_64 rng(11);
    Matrix<Rational> g = random_unimodular(m, rng);
    auto ginv = g.inverse();
    REQUIRE(ginv);
    ExteriorForm scr = pullback_linear(*ginv, theta);
    auto [sa, sb] = symplectic_basis(scr);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(pairing(scr, sa[i], sb[j]) == (i == j ? Rational(1) : Rational(0)));
            CHECK(pairing(scr, sa[i], sa[j]) == Rational(0));
            CHECK(pairing(scr, sb[i], sb[j]) == Rational(0));
        }

    /* degenerate 2-form is rejected */
    ExteriorForm deg(4, 2);
    deg.set({1, 2}, Rational(1));
    CHECK_THROWS_AS(symplectic_basis(deg), std::invalid_argument);
}

TEST_CASE("theta bivector contracts theta to n") {
    for (int n : {1, 2, 3}) {
        ExteriorForm theta = standard_symplectic(n);
        ExteriorForm x = theta_bivector(theta);
        ExteriorForm c = interior_bivector(x, theta);
        CHECK(c.degree() == 0);
        CHECK(c.coefficient({}) == Rational(n));
    }
}

TEST_CASE("annihilator and dual annihilator") {
    int m = 4;
    ExteriorForm w(m, 2);
    w.set({1, 2}, Rational(1));

    Subspace ann = annihilator(w);
    CHECK(ann.dim() == 2);
    CHECK(subspace_equal(ann, Subspace{m, {basis_vec(m, 3), basis_vec(m, 4)}}));

    auto covs = dual_annihilator(Subspace{m, {basis_vec(m, 3), basis_vec(m, 4)}});
    REQUIRE(covs.size() == 2);
    for (const auto& cv : covs) {
        CHECK(cv[2] == Rational(0));
        CHECK(cv[3] == Rational(0));
    }

    /* nondegenerate form has trivial annihilator */
    CHECK(annihilator(standard_symplectic(2)).dim() == 0);
    /* zero form is annihilated by everything */
    CHECK(annihilator(ExteriorForm(m, 2)).dim() == m);
}

TEST_CASE("effectiveness: both characterizations agree on middle degree") {
    int n = 2, m = 2 * n;
    ExteriorForm theta = standard_symplectic(n);

    ExteriorForm w(m, 2);
    w.set({1, 2}, Rational(1));
    w.set({3, 4}, Rational(-1));
    CHECK(is_effective(w, theta));

    CHECK(!is_effective(theta, theta));

    ExteriorForm single(m, 2);
    single.set({1, 2}, Rational(1));
    CHECK(is_effective(single, theta));

    /* non-middle degree uses the contraction test alone */
    ExteriorForm one(m, 1);
    one.set({1}, Rational(1));
    CHECK(is_effective(one, theta));
}

TEST_CASE("index tuples and coordinates are lex ordered") {
    auto ts = index_tuples(4, 2);
    REQUIRE(ts.size() == 6);
    CHECK(ts.front() == IndexTuple{1, 2});
    CHECK(ts[1] == IndexTuple{1, 3});
    CHECK(ts.back() == IndexTuple{3, 4});

    ExteriorForm w(4, 2);
    w.set({1, 3}, Rational(5));
    auto coords = form_coordinates(w, ts);
    CHECK(coords[1] == Rational(5));
    CHECK(coords[0] == Rational(0));
}

TEST_CASE("span utilities") {
    int m = 4;
    Subspace s1{m, {basis_vec(m, 1), basis_vec(m, 2)}};
    Vec v12{Rational(1), Rational(1), Rational(0), Rational(0)};
    Subspace s2{m, {basis_vec(m, 1), v12}};
    CHECK(subspace_equal(s1, s2));
    CHECK(span_rref(m, {basis_vec(m, 1), v12, basis_vec(m, 2)}).dim() == 2);

    Subspace s3{m, {basis_vec(m, 3), basis_vec(m, 4)}};
    CHECK(subspaces_transversal(s1, s3));
    CHECK(!subspaces_transversal(s1, s2));
}

TEST_CASE("random symplectic matrices preserve the standard form exactly") {
    for (int n : {1, 2, 3}) {
        ExteriorForm theta = standard_symplectic(n);
        std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
        for (int t = 0; t < 8; ++t) {
            Matrix<Rational> s = random_symplectic(n, rng);
            CHECK(pullback_linear(s, theta) == theta);
        }
    }
}

TEST_CASE("random unimodular matrices have determinant one") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 8; ++t) {
        Matrix<Rational> g = random_unimodular(4, rng);
        CHECK(g.det() == Rational(1));
    }
}
