#ifndef ASMKIT_LINALG_HPP
#define ASMKIT_LINALG_HPP

#include <asmkit/laurent.hpp>

#include <vector>

namespace asmkit {

template <class R>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<R> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, R(0)) {}

    R& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const R& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool square() const { return rows == cols; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
        return m;
    }
};

/// Fraction-field elimination with pivoting on nonzero entries. Entries must
/// form a field (Rat, Cyc).
template <class R>
R det_field(Matrix<R> m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows;
    R det(1);
    bool negate = false;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(m.at(r, c))) { piv = r; break; }
        if (piv < 0) return R(0);
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
            negate = !negate;
        }
        det = det * m.at(c, c);
        R pinv = inv(m.at(c, c));
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(m.at(r, c))) continue;
            R f = m.at(r, c) * pinv;
            for (int j = c; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        }
    }
    return negate ? -det : det;
}

/// Bareiss fraction-free elimination; stays inside an integral domain with
/// exact division (Int, Laurent over a field). A failed exact division is an
/// implementation bug, not an input error.
template <class R>
R det_bareiss(Matrix<R> m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows;
    R prev(1);
    bool negate = false;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(m.at(r, c))) { piv = r; break; }
        if (piv < 0) return R(0);
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
            negate = !negate;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j) {
                R num = m.at(r, j) * m.at(c, c) - m.at(r, c) * m.at(c, j);
                m.at(r, j) = exact_div(num, prev);
            }
            m.at(r, c) = R(0);
        }
        prev = m.at(c, c);
    }
    R det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

/// Cofactor expansion; exponential, kept as an oracle for small orders.
template <class R>
R det_cofactor(const Matrix<R>& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return R(1);
    if (n == 1) return m.at(0, 0);
    R tot(0);
    for (int k = 0; k < n; ++k) {
        if (is_zero(m.at(0, k))) continue;
        Matrix<R> minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        }
        R t = m.at(0, k) * det_cofactor(minor);
        tot = (k % 2 == 0) ? tot + t : tot - t;
    }
    return tot;
}

/// Triangular-array input convention: only entries a_{i,j} with i < j are
/// supplied, representing the skew-symmetric matrix with zero diagonal.
template <class R>
struct SkewMatrix {
    int order = 0;
    std::vector<R> upper;  // packed (i,j), i<j, lexicographic

    explicit SkewMatrix(int n = 0)
        : order(n), upper(static_cast<size_t>(n) * (n - 1) / 2, R(0)) {
        if (n < 0 || n % 2 != 0) throw std::invalid_argument("skew matrix order must be even");
    }

    size_t index(int i, int j) const {
        // i < j, 0-based
        return static_cast<size_t>(i) * (2 * order - i - 1) / 2 + (j - i - 1);
    }
    R& at(int i, int j) { return upper[index(i, j)]; }
    const R& at(int i, int j) const { return upper[index(i, j)]; }
    R signed_at(int i, int j) const {
        if (i == j) return R(0);
        if (i < j) return at(i, j);
        return R(0) - at(j, i);
    }
    Matrix<R> to_matrix() const {
        Matrix<R> m(order, order);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) m.at(i, j) = signed_at(i, j);
        return m;
    }
};

namespace detail {

template <class R>
R pf_expand(const SkewMatrix<R>& m, std::vector<int>& rows) {
    if (rows.empty()) return R(1);
    const int i0 = rows[0];
    R tot(0);
    for (size_t k = 1; k < rows.size(); ++k) {
        const int jk = rows[k];
        const R& v = m.at(i0, jk);
        if (is_zero(v)) continue;
        std::vector<int> rest;
        rest.reserve(rows.size() - 2);
        for (size_t t = 1; t < rows.size(); ++t)
            if (t != k) rest.push_back(rows[t]);
        R term = v * pf_expand(m, rest);
        if (k % 2 == 1) tot = tot + term;
        else tot = tot - term;
    }
    return tot;
}

template <class R>
R pf_eliminate(Matrix<R> a) {
    const int n = a.rows;
    R result(1);
    for (int k = 0; k + 1 < n; k += 2) {
        int piv = -1;
        for (int r = k + 1; r < n; ++r)
            if (!is_zero(a.at(k, r))) { piv = r; break; }
        if (piv < 0) return R(0);
        if (piv != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(a.at(j, k + 1), a.at(j, piv));
            for (int j = 0; j < n; ++j) std::swap(a.at(k + 1, j), a.at(piv, j));
            result = -result;
        }
        const R p = a.at(k, k + 1);
        result = result * p;
        R pinv = inv(p);
        // Schur complement against the 2x2 pivot block: Pf(A) = p * Pf(A')
        for (int i = k + 2; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                R upd = a.at(i, j) -
                        (a.at(k, i) * a.at(k + 1, j) - a.at(k, j) * a.at(k + 1, i)) * pinv;
                a.at(i, j) = upd;
                a.at(j, i) = -upd;
            }
        }
    }
    return result;
}

}  // namespace detail

/// Signed perfect-matching sum of a skew-symmetric matrix. Recursive
/// first-row expansion up to order 8, skew elimination above.
template <class R>
R pfaffian(const SkewMatrix<R>& m) {
    if (m.order % 2 != 0) throw std::invalid_argument("pfaffian needs even order");
    if (m.order == 0) return R(1);
    if (m.order <= 8) {
        std::vector<int> rows(m.order);
        for (int i = 0; i < m.order; ++i) rows[i] = i;
        return detail::pf_expand(m, rows);
    }
    return detail::pf_eliminate(m.to_matrix());
}

/// Direct matching-sum oracle, kept permanently for cross-checks (15 terms at
/// order 6, 105 at order 8).
template <class R>
R pfaffian_matching_sum(const SkewMatrix<R>& m) {
    std::vector<int> rows(m.order);
    for (int i = 0; i < m.order; ++i) rows[i] = i;
    return detail::pf_expand(m, rows);
}

}  // namespace asmkit

#endif
