#pragma once

/*
 * Constant-coefficient exterior algebra on a rational vector space, with the
 * symplectic toolbox used by the bi-decomposition machinery: symplectic bases,
 * Lagrangian tests, annihilators, effectiveness.
 */

#include <optional>
#include <string>
#include <vector>

#include "malp/forms_core.hpp"
#include "malp/rational.hpp"

namespace malp {

using Vec = std::vector<Rational>;

class ExteriorForm {
public:
    ExteriorForm() : dim_(0), degree_(0) {}
    ExteriorForm(int dim, int degree);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const TermMap<Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void set(const IndexTuple& idx, const Rational& c);
    /* accepts any index order, applies the permutation sign */
    void add(IndexTuple idx, Rational c);
    Rational coefficient(const IndexTuple& idx) const;

    ExteriorForm operator-() const;
    ExteriorForm& operator+=(const ExteriorForm& o);
    ExteriorForm& operator-=(const ExteriorForm& o);
    friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
    friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
    ExteriorForm operator*(const Rational& c) const;
    friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExteriorForm& a, const ExteriorForm& b) { return !(a == b); }

    Rational eval(const std::vector<Vec>& vectors) const;

    std::string str() const;

private:
    friend ExteriorForm wedge(const ExteriorForm&, const ExteriorForm&);
    friend ExteriorForm interior_vector(const Vec&, const ExteriorForm&);
    friend ExteriorForm interior_bivector(const ExteriorForm&, const ExteriorForm&);
    friend ExteriorForm pullback_linear(const Matrix<Rational>&, const ExteriorForm&);

    int dim_, degree_;
    TermMap<Rational> terms_;
};

struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm interior_vector(const Vec& v, const ExteriorForm& a);
/* bivector given as a degree-2 element of Lambda^2 V; i_{u^v} = i_v o i_u */
ExteriorForm interior_bivector(const ExteriorForm& b, const ExteriorForm& a);
/* pullback along the linear map source -> target with matrix m (target dim x
 * source dim); the result lives on the source space */
ExteriorForm pullback_linear(const Matrix<Rational>& m, const ExteriorForm& a);
ExteriorForm wedge_power(const ExteriorForm& a, int k);

/* standard symplectic form e_1*^e_{n+1}* + ... + e_n*^e_{2n}* on dim 2n */
ExteriorForm standard_symplectic(int n);

Rational pairing(const ExteriorForm& theta, const Vec& u, const Vec& v);

/* Darboux basis (a_1..a_n, b_1..b_n) with theta(a_i, b_j) = delta_ij and both
 * halves isotropic; deterministic: scans index pairs of the working basis
 * lexicographically for the first nonzero pairing. Throws on degeneracy. */
std::pair<std::vector<Vec>, std::vector<Vec>> symplectic_basis(const ExteriorForm& theta);

/* X_theta = sum a_i ^ b_i, the bivector dual to theta */
ExteriorForm theta_bivector(const ExteriorForm& theta);

bool is_isotropic(const Subspace& s, const ExteriorForm& theta);
bool is_lagrangian(const Subspace& s, const ExteriorForm& theta);

/* kernel of v -> i_v w */
Subspace annihilator(const ExteriorForm& w);

/* primitivity of a degree-n form on dim 2n, tested both as i_{X_theta} w = 0
 * and as w ^ theta = 0; the two must agree or a logic error is thrown */
bool is_effective(const ExteriorForm& w, const ExteriorForm& theta);

/* covectors vanishing on s, returned as rows */
std::vector<Vec> dual_annihilator(const Subspace& s);

std::vector<IndexTuple> index_tuples(int dim, int degree);
std::vector<Rational> form_coordinates(const ExteriorForm& w, const std::vector<IndexTuple>& tuples);

Subspace span_rref(int ambient, std::vector<Vec> vectors);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspaces_transversal(const Subspace& a, const Subspace& b);

}  // namespace malp
