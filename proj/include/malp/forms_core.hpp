#pragma once

/*
 * Shared combinatorics for sparse alternating forms. A form of degree k on an
 * m-dimensional space is a map from strictly increasing 1-based index tuples
 * to coefficients; zero coefficients are never stored. The same machinery
 * serves constant-coefficient forms (Rational) and differential forms on
 * charts (RationalFunction).
 *
 * Interior product convention: i_v inserts v into the FIRST slot,
 * (i_v w)(u_2,...,u_k) = w(v, u_2, ..., u_k), and for decomposable bivectors
 * i_{u^v} := i_v o i_u.
 */

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "malp/matrix.hpp"

namespace malp {

using IndexTuple = std::vector<int>;

template <class C>
using TermMap = std::map<IndexTuple, C>;

/* sort into strictly increasing order; nullopt when an index repeats */
inline std::optional<std::pair<IndexTuple, int>> sort_indices(IndexTuple idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return std::nullopt;
    return std::make_pair(std::move(idx), sign);
}

template <class C>
void add_term(TermMap<C>& m, const IndexTuple& idx, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

template <class C>
TermMap<C> wedge_terms(const TermMap<C>& a, const TermMap<C>& b) {
    TermMap<C> r;
    IndexTuple idx;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            auto sorted = sort_indices(idx);
            if (!sorted) continue;
            C c = ca * cb;
            if (sorted->second < 0) c = -c;
            add_term(r, sorted->first, c);
        }
    return r;
}

/* components is 1-based: components[i-1] multiplies e_i */
template <class C>
TermMap<C> interior_terms(const std::vector<C>& components, const TermMap<C>& a) {
    TermMap<C> r;
    for (const auto& [idx, c] : a) {
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const C& v = components[static_cast<std::size_t>(idx[t]) - 1];
            if (v.is_zero()) continue;
            IndexTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            C coef = c * v;
            if (t % 2 == 1) coef = -coef;
            add_term(r, rest, coef);
        }
    }
    return r;
}

/* pullback along the linear map with matrix M: source -> target, so a form on
 * the target (indices over M's rows) becomes a form on the source (indices
 * over M's columns); M[i][j] is the i-th target component of the j-th source
 * basis vector. Computed by wedging pulled-back covectors. */
template <class C>
TermMap<C> pullback_terms(const Matrix<C>& m, const TermMap<C>& a, const C& zero) {
    TermMap<C> r;
    TermMap<C> unit;
    unit.emplace(IndexTuple{}, ring_one(zero));
    for (const auto& [idx, c] : a) {
        TermMap<C> acc = unit;
        for (int i : idx) {
            TermMap<C> covector;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const C& mij = m.at(static_cast<std::size_t>(i) - 1, j);
                if (!mij.is_zero()) covector.emplace(IndexTuple{static_cast<int>(j) + 1}, mij);
            }
            acc = wedge_terms(acc, covector);
            if (acc.empty()) break;
        }
        for (const auto& [ridx, rc] : acc) add_term(r, ridx, c * rc);
    }
    return r;
}

/* evaluate on k vectors given as columns: w(u_1,...,u_k) */
template <class C>
C eval_terms(const TermMap<C>& a, const std::vector<std::vector<C>>& vectors, const C& zero) {
    C acc = zero;
    if (a.empty()) return acc;
    std::size_t k = a.begin()->first.size();
    Matrix<C> minor(k, k, zero);
    for (const auto& [idx, c] : a) {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < k; ++j)
                minor.at(r, j) = vectors[j][static_cast<std::size_t>(idx[r]) - 1];
        acc += c * minor.det();
    }
    return acc;
}

template <class C>
bool terms_equal(const TermMap<C>& a, const TermMap<C>& b) {
    return a == b;
}

}  // namespace malp
