#pragma once

#include <liekit/common.hpp>

namespace liekit {

// Dense exact-rational matrix, just enough linear algebra for the library:
// rank, kernel, solving, and a p-local diagonalization for the lattice
// solvability questions in the relation audits.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, Rat(0)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

    static QMat identity(size_t n) {
        QMat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    QMat transposed() const {
        QMat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QMat operator*(const QMat& o) const {
        QMat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    QVec apply(const QVec& v) const {
        QVec r(rows_, Rat(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    std::vector<Rat> d_;
};

namespace linalg {

// Row echelon reduction in place; returns pivot columns.
inline std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        Rat inv = 1 / m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank(QMat m) { return rref(m).size(); }

inline Rat det(QMat m) {
    if (m.rows() != m.cols()) throw invalid_input("det: matrix not square");
    Rat d = 1;
    const size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && m(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(col, j), m(p, j));
            d = -d;
        }
        d *= m(col, col);
        Rat inv = 1 / m(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) * inv;
            for (size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

// Basis of the right kernel {v : Mv = 0}, as rows of the returned matrix.
inline QMat kernel(QMat m) {
    size_t n = m.cols();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    QMat ker(n - pivots.size(), n);
    size_t k = 0;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ker(k, free) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) ker(k, pivots[r]) = -m(r, free);
        ++k;
    }
    return ker;
}

// One solution of Mx = b if consistent.
inline std::optional<QVec> solve(const QMat& m, const QVec& b) {
    QMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    QVec x(m.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

// Solvability of Ax = u over the local ring Z_(p) (rationals with
// nonnegative p-valuation).  Row/column reduction picks the entry of
// minimal valuation as pivot, so all transformations are invertible over
// Z_(p); the diagonal form then decides solvability coordinate-wise.
// Returns a solution x with all val_p(x_i) >= 0 when one exists.
inline std::optional<QVec> solve_local(QMat a, QVec u, unsigned long p) {
    const size_t m = a.rows(), n = a.cols();
    // col_ops accumulates the inverse column transform: x = W * y.
    QMat w = QMat::identity(n);
    size_t k = 0;
    std::vector<long> pivval;
    for (; k < std::min(m, n); ++k) {
        bool found = false;
        size_t bi = k, bj = k;
        long bestv = 0;
        for (size_t i = k; i < m; ++i)
            for (size_t j = k; j < n; ++j) {
                if (a(i, j) == 0) continue;
                long v = padic_val(a(i, j), p);
                if (!found || v < bestv) {
                    found = true;
                    bestv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (!found) break;
        if (bi != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(bi, j));
            std::swap(u[k], u[bi]);
        }
        if (bj != k) {
            for (size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, bj));
            for (size_t i = 0; i < n; ++i) std::swap(w(i, k), w(i, bj));
        }
        for (size_t i = k + 1; i < m; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);  // val(f) >= 0 by pivot minimality
            for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            u[i] -= f * u[k];
        }
        for (size_t j = k + 1; j < n; ++j) {
            if (a(k, j) == 0) continue;
            Rat f = a(k, j) / a(k, k);
            for (size_t i = k; i < m; ++i) a(i, j) -= f * a(i, k);
            for (size_t i = 0; i < n; ++i) w(i, j) -= f * w(i, k);
        }
        pivval.push_back(bestv);
    }
    QVec y(n, Rat(0));
    for (size_t i = 0; i < m; ++i) {
        if (i < k) {
            if (u[i] == 0) continue;
            if (padic_val(u[i], p) < pivval[i]) return std::nullopt;
            y[i] = u[i] / a(i, i);
        } else if (u[i] != 0) {
            return std::nullopt;
        }
    }
    return w.apply(y);
}

}  // namespace linalg
}  // namespace liekit
