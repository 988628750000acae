#pragma once

/*
 * Dense exact matrices over any field-like scalar (Rational, RationalFunction).
 * Elimination is plain Gauss-Jordan with exact division; determinism comes from
 * always picking the first nonzero pivot in column order. Scalars provide
 * is_zero(), arithmetic, and ring_zero/ring_one prototypes.
 */

#include <optional>
#include <stdexcept>
#include <vector>

namespace malp {

template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero) {
        Matrix m(n, n, zero);
        T one = ring_one(zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b.at(k, j);
                    if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference shape mismatch");
        Matrix c = a;
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }

    Matrix operator*(const T& s) const {
        Matrix c = *this;
        for (auto& x : c.a_) x = x * s;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
        std::vector<T> r(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    /* in-place reduced row echelon form; returns pivot column per pivot row */
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && at(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            T inv = ring_one(zero_) / at(r, c);
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                T f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    std::vector<std::vector<T>> kernel_basis() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<T>> basis;
        T one = ring_one(zero_);
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<T> v(cols_, zero_);
            v[f] = one;
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /* one solution of A x = b, if consistent */
    std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("solve rhs shape mismatch");
        Matrix aug(rows_, cols_ + 1, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<T> x(cols_, zero_);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
        Matrix aug(rows_, 2 * cols_, zero_);
        T one = ring_one(zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = one;
        }
        std::vector<std::size_t> pivots = aug.rref();
        if (pivots.size() != rows_) return std::nullopt;
        for (std::size_t r = 0; r < rows_; ++r)
            if (pivots[r] != r) return std::nullopt;
        Matrix inv(rows_, cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return inv;
    }

    T det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
        Matrix m = *this;
        T d = ring_one(zero_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && m.at(p, c).is_zero()) ++p;
            if (p == rows_) return zero_;
            if (p != c) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
                d = -d;
            }
            d = d * m.at(c, c);
            T inv = ring_one(zero_) / m.at(c, c);
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m.at(i, c).is_zero()) continue;
                T f = m.at(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
            }
        }
        return d;
    }

private:
    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> a_;
};

/* kernel of a tall sparse-ish system through its Gram matrix: over the
 * rationals ker(AᵗA) = ker(A), since xᵗAᵗAx = |Ax|² = 0 forces each entry of
 * Ax to vanish (a sum of squares in Q is zero only termwise). Cuts the
 * elimination from rows x cols to cols x cols. */
template <class T>
std::vector<std::vector<T>> kernel_via_gram(const Matrix<T>& a) {
    Matrix<T> g = a.transpose() * a;
    return g.kernel_basis();
}

}  // namespace malp
