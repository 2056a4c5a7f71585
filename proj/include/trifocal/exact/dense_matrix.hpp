#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace trifocal {

template <ExactField F>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const F& zero = F{})
        : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    static DenseMatrix from_rows(const std::vector<std::vector<F>>& rs, const F& zero = F{}) {
        std::size_t c = rs.empty() ? 0 : rs.front().size();
        DenseMatrix m(rs.size(), c, rs.empty() || c == 0 ? zero : scalar_like(0, rs.front().front()));
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].size() != c) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }
    static DenseMatrix from_ints(std::initializer_list<std::initializer_list<long long>> rs,
                                 const F& zero = F{}) {
        std::vector<std::vector<F>> v;
        for (auto& r : rs) {
            v.emplace_back();
            for (long long x : r) v.back().push_back(scalar_like(x, zero));
        }
        return from_rows(v, zero);
    }
    static DenseMatrix identity(std::size_t n, const F& zero = F{}) {
        DenseMatrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_like(1, zero);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& zero() const { return zero_; }
    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    F& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
        return (*this)(i, j);
    }
    const F& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
        return (*this)(i, j);
    }
    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const F& x) { return x.is_zero(); });
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        DenseMatrix r(x.rows_, y.cols_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend std::vector<F> operator*(const DenseMatrix& x, const std::vector<F>& v) {
        if (x.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<F> r(x.rows_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r[i] += x(i, j) * v[j];
        return r;
    }
    friend bool operator==(const DenseMatrix& x, const DenseMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    DenseMatrix scaled(const F& s) const {
        DenseMatrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    DenseMatrix hconcat(const DenseMatrix& o) const {
        if (o.rows_ != rows_) throw std::invalid_argument("hconcat row mismatch");
        DenseMatrix r(rows_, cols_ + o.cols_, zero_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }
    DenseMatrix vconcat(const DenseMatrix& o) const {
        if (o.cols_ != cols_) throw std::invalid_argument("vconcat column mismatch");
        DenseMatrix r(rows_ + o.rows_, cols_, zero_);
        std::copy(a_.begin(), a_.end(), r.a_.begin());
        std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    F zero_{};
    std::vector<F> a_;
};

template <ExactField F>
struct Echelon {
    DenseMatrix<F> reduced;            // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination to reduced row echelon form.
template <ExactField F>
Echelon<F> rref(DenseMatrix<F> m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = scalar_like(1, m(r, c)) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(piv)};
}

// Fraction-free (Bareiss) elimination; returns rank and, for square input, the determinant.
template <ExactField F>
std::pair<std::size_t, F> bareiss(DenseMatrix<F> m) {
    const std::size_t R = m.rows(), C = m.cols();
    F prev = scalar_like(1, m.zero());
    bool neg = false;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && m(p, c).is_zero()) ++p;
        if (p == R) continue;
        if (p != r) {
            for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
            neg = !neg;
        }
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = m.zero();
        }
        prev = m(r, c);
        ++r;
    }
    F d = m.zero();
    if (R == C && r == R) d = neg ? -m(R - 1, C - 1) : m(R - 1, C - 1);
    return {r, d};
}

template <ExactField F>
std::size_t rank(const DenseMatrix<F>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(m).first;
}

template <ExactField F>
F det(const DenseMatrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    if (m.rows() == 0) return scalar_like(1, m.zero());
    return bareiss(m).second;
}

template <ExactField F>
F minor(const DenseMatrix<F>& m, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
    if (rs.size() != cs.size()) throw std::invalid_argument("minor index sets of unequal size");
    DenseMatrix<F> s(rs.size(), cs.size(), m.zero());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            if (rs[i] >= m.rows() || cs[j] >= m.cols()) throw std::invalid_argument("minor index out of range");
            s(i, j) = m(rs[i], cs[j]);
        }
    return det(s);
}

// Basis of the right null space, one vector per free column.
template <ExactField F>
std::vector<std::vector<F>> kernel_basis(const DenseMatrix<F>& m) {
    Echelon<F> e = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : e.pivots) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<F> v(m.cols(), m.zero());
        v[f] = scalar_like(1, m.zero());
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <ExactField F>
DenseMatrix<F> to_field(const DenseMatrix<Rational>& m, const F& like) {
    DenseMatrix<F> r(m.rows(), m.cols(), scalar_like(0, like));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = convert(m(i, j), like);
    return r;
}

}  // namespace trifocal
