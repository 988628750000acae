#include "malp/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace malp {

ExteriorForm::ExteriorForm(int dim, int degree) : dim_(dim), degree_(degree) {
    /* degree > dim is allowed and forces the zero form */
    if (dim < 0 || degree < 0) throw std::invalid_argument("bad form dimensions");
}

static void check_tuple(const IndexTuple& idx, int dim, int degree) {
    if (static_cast<int>(idx.size()) != degree)
        throw std::invalid_argument("index tuple arity does not match form degree");
    for (int i : idx)
        if (i < 1 || i > dim) throw std::invalid_argument("form index out of range");
}

void ExteriorForm::set(const IndexTuple& idx, const Rational& c) {
    check_tuple(idx, dim_, degree_);
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("set requires a strictly increasing tuple");
    if (c.is_zero())
        terms_.erase(idx);
    else
        terms_[idx] = c;
}

void ExteriorForm::add(IndexTuple idx, Rational c) {
    check_tuple(idx, dim_, degree_);
    auto sorted = sort_indices(std::move(idx));
    if (!sorted) return;
    if (sorted->second < 0) c = -c;
    add_term(terms_, sorted->first, c);
}

Rational ExteriorForm::coefficient(const IndexTuple& idx) const {
    auto sorted = sort_indices(idx);
    if (!sorted) return Rational(0);
    auto it = terms_.find(sorted->first);
    if (it == terms_.end()) return Rational(0);
    return sorted->second < 0 ? -it->second : it->second;
}

ExteriorForm ExteriorForm::operator-() const {
    ExteriorForm r(dim_, degree_);
    for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
    return r;
}

static void require_compatible(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree())
        throw std::invalid_argument("form arithmetic across different spaces or degrees");
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
    require_compatible(*this, o);
    for (const auto& [idx, c] : o.terms_) add_term(terms_, idx, c);
    return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
    require_compatible(*this, o);
    for (const auto& [idx, c] : o.terms_) add_term(terms_, idx, -c);
    return *this;
}

ExteriorForm ExteriorForm::operator*(const Rational& c) const {
    ExteriorForm r(dim_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [idx, k] : terms_) r.terms_.emplace(idx, k * c);
    return r;
}

Rational ExteriorForm::eval(const std::vector<Vec>& vectors) const {
    if (static_cast<int>(vectors.size()) != degree_)
        throw std::invalid_argument("evaluation arity does not match degree");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("evaluation vector dimension mismatch");
    if (degree_ == 0) return terms_.empty() ? Rational(0) : terms_.begin()->second;
    std::vector<std::vector<Rational>> cols(vectors.begin(), vectors.end());
    return eval_terms(terms_, cols, Rational(0));
}

std::string ExteriorForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : terms_) {
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::string gens;
        for (int i : idx) {
            if (!gens.empty()) gens += "^";
            gens += "e" + std::to_string(i);
        }
        if (gens.empty()) out += a.str();
        else if (a.is_one()) out += gens;
        else out += a.str() + " " + gens;
    }
    return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge across different spaces");
    ExteriorForm r(a.dim(), a.degree() + b.degree());
    r.terms_ = wedge_terms(a.terms_, b.terms_);
    return r;
}

ExteriorForm interior_vector(const Vec& v, const ExteriorForm& a) {
    if (static_cast<int>(v.size()) != a.dim())
        throw std::invalid_argument("interior product dimension mismatch");
    if (a.degree() == 0) return ExteriorForm(a.dim(), 0);
    ExteriorForm r(a.dim(), a.degree() - 1);
    r.terms_ = interior_terms(v, a.terms_);
    return r;
}

ExteriorForm interior_bivector(const ExteriorForm& b, const ExteriorForm& a) {
    if (b.degree() != 2) throw std::invalid_argument("interior_bivector takes a degree-2 argument");
    if (b.dim() != a.dim()) throw std::invalid_argument("interior product dimension mismatch");
    if (a.degree() < 2) return ExteriorForm(a.dim(), 0);
    ExteriorForm r(a.dim(), a.degree() - 2);
    for (const auto& [idx, c] : b.terms()) {
        Vec u(a.dim(), Rational(0)), v(a.dim(), Rational(0));
        u[static_cast<std::size_t>(idx[0]) - 1] = c;
        v[static_cast<std::size_t>(idx[1]) - 1] = Rational(1);
        r += interior_vector(v, interior_vector(u, a));
    }
    return r;
}

ExteriorForm pullback_linear(const Matrix<Rational>& m, const ExteriorForm& a) {
    if (m.rows() != static_cast<std::size_t>(a.dim()))
        throw std::invalid_argument("pullback matrix row count must match the form's space");
    int sdim = static_cast<int>(m.cols());
    ExteriorForm r(sdim, a.degree());
    r.terms_ = pullback_terms(m, a.terms_, Rational(0));
    return r;
}

ExteriorForm wedge_power(const ExteriorForm& a, int k) {
    if (k < 0) throw std::invalid_argument("negative wedge power");
    ExteriorForm r(a.dim(), 0);
    r.add({}, Rational(1));
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

ExteriorForm standard_symplectic(int n) {
    ExteriorForm t(2 * n, 2);
    for (int i = 1; i <= n; ++i) t.set({i, n + i}, Rational(1));
    return t;
}

Rational pairing(const ExteriorForm& theta, const Vec& u, const Vec& v) {
    return theta.eval({u, v});
}

std::pair<std::vector<Vec>, std::vector<Vec>> symplectic_basis(const ExteriorForm& theta) {
    if (theta.degree() != 2) throw std::invalid_argument("symplectic_basis takes a 2-form");
    int m = theta.dim();
    if (m % 2 != 0) throw std::invalid_argument("symplectic space must be even-dimensional");
    std::vector<Vec> work;
    for (int i = 0; i < m; ++i) {
        Vec e(m, Rational(0));
        e[static_cast<std::size_t>(i)] = Rational(1);
        work.push_back(std::move(e));
    }
    std::vector<Vec> as, bs;
    while (!work.empty()) {
        std::size_t pi = work.size(), pj = work.size();
        for (std::size_t i = 0; i < work.size() && pi == work.size(); ++i)
            for (std::size_t j = i + 1; j < work.size(); ++j)
                if (!pairing(theta, work[i], work[j]).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == work.size())
            throw std::invalid_argument("degenerate 2-form has no symplectic basis");
        Vec a = work[pi];
        Rational s = pairing(theta, a, work[pj]);
        Vec b = work[pj];
        for (auto& x : b) x /= s;
        std::vector<Vec> rest;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == pi || i == pj) continue;
            Vec w = work[i];
            Rational cb = pairing(theta, w, b), ca = pairing(theta, w, a);
            /* w' = w - theta(w,b) a + theta(w,a) b is theta-orthogonal to both */
            for (int t = 0; t < m; ++t)
                w[static_cast<std::size_t>(t)] +=
                    ca * b[static_cast<std::size_t>(t)] - cb * a[static_cast<std::size_t>(t)];
            rest.push_back(std::move(w));
        }
        as.push_back(std::move(a));
        bs.push_back(std::move(b));
        work = std::move(rest);
    }
    return {as, bs};
}

static ExteriorForm wedge_of_vectors(const Vec& u, const Vec& v) {
    int m = static_cast<int>(u.size());
    ExteriorForm b(m, 2);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Rational c = u[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)] -
                         u[static_cast<std::size_t>(j - 1)] * v[static_cast<std::size_t>(i - 1)];
            if (!c.is_zero()) b.set({i, j}, c);
        }
    return b;
}

ExteriorForm theta_bivector(const ExteriorForm& theta) {
    auto [as, bs] = symplectic_basis(theta);
    ExteriorForm x(theta.dim(), 2);
    for (std::size_t i = 0; i < as.size(); ++i) x += wedge_of_vectors(as[i], bs[i]);
    return x;
}

bool is_isotropic(const Subspace& s, const ExteriorForm& theta) {
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = i + 1; j < s.basis.size(); ++j)
            if (!pairing(theta, s.basis[i], s.basis[j]).is_zero()) return false;
    return true;
}

bool is_lagrangian(const Subspace& s, const ExteriorForm& theta) {
    if (2 * s.dim() != theta.dim()) return false;
    Matrix<Rational> m(s.basis.size(), static_cast<std::size_t>(s.ambient), Rational(0));
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = 0; j < s.basis[i].size(); ++j) m.at(i, j) = s.basis[i][j];
    if (m.rank() != s.basis.size()) return false;
    return is_isotropic(s, theta);
}

std::vector<IndexTuple> index_tuples(int dim, int degree) {
    std::vector<IndexTuple> out;
    IndexTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == degree) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= dim; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Rational> form_coordinates(const ExteriorForm& w, const std::vector<IndexTuple>& tuples) {
    std::vector<Rational> v;
    v.reserve(tuples.size());
    for (const auto& t : tuples) v.push_back(w.coefficient(t));
    return v;
}

Subspace annihilator(const ExteriorForm& w) {
    int m = w.dim();
    auto tuples = index_tuples(m, w.degree() - 1);
    Matrix<Rational> sys(tuples.size(), static_cast<std::size_t>(m), Rational(0));
    for (int j = 0; j < m; ++j) {
        Vec e(static_cast<std::size_t>(m), Rational(0));
        e[static_cast<std::size_t>(j)] = Rational(1);
        ExteriorForm iw = interior_vector(e, w);
        auto coords = form_coordinates(iw, tuples);
        for (std::size_t r = 0; r < tuples.size(); ++r) sys.at(r, static_cast<std::size_t>(j)) = coords[r];
    }
    Subspace s;
    s.ambient = m;
    s.basis = sys.kernel_basis();
    return s;
}

bool is_effective(const ExteriorForm& w, const ExteriorForm& theta) {
    ExteriorForm x = theta_bivector(theta);
    bool by_contraction = interior_bivector(x, w).is_zero();
    if (2 * w.degree() == w.dim()) {
        bool by_wedge = wedge(w, theta).is_zero();
        if (by_wedge != by_contraction)
            throw std::logic_error("effectiveness tests disagree; internal inconsistency");
    }
    return by_contraction;
}

std::vector<Vec> dual_annihilator(const Subspace& s) {
    Matrix<Rational> m(s.basis.size(), static_cast<std::size_t>(s.ambient), Rational(0));
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (std::size_t j = 0; j < s.basis[i].size(); ++j) m.at(i, j) = s.basis[i][j];
    return m.kernel_basis();
}

Subspace span_rref(int ambient, std::vector<Vec> vectors) {
    Matrix<Rational> m(vectors.size(), static_cast<std::size_t>(ambient), Rational(0));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors[i].size(); ++j) m.at(i, j) = vectors[i][j];
    std::vector<std::size_t> pivots = m.rref();
    Subspace s;
    s.ambient = ambient;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Vec v(static_cast<std::size_t>(ambient), Rational(0));
        for (std::size_t j = 0; j < static_cast<std::size_t>(ambient); ++j) v[j] = m.at(r, j);
        s.basis.push_back(std::move(v));
    }
    return s;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) return false;
    Subspace ra = span_rref(a.ambient, a.basis);
    Subspace rb = span_rref(b.ambient, b.basis);
    return ra.basis == rb.basis;
}

bool subspaces_transversal(const Subspace& a, const Subspace& b) {
    std::vector<Vec> all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    return static_cast<int>(span_rref(a.ambient, all).basis.size()) == a.dim() + b.dim();
}

}  // namespace malp
