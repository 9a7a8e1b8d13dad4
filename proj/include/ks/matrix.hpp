// Dense matrices over an exact ring, plus Gaussian elimination over fields.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ks/scalar.hpp"

namespace ks {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

template <class S>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<S> d;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), d(r * c, S(0)) {}
    Mat(size_t r, size_t c, std::vector<S> data) : rows(r), cols(c), d(std::move(data)) {
        if (d.size() != r * c) throw DimensionMismatch("data size");
    }
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<S>>& rs) {
        if (rs.empty()) return {};
        Mat m(rs.size(), rs[0].size());
        for (size_t i = 0; i < m.rows; ++i) {
            if (rs[i].size() != m.cols) throw DimensionMismatch("ragged rows");
            for (size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }

    S& operator()(size_t i, size_t j) { return d[i * cols + j]; }
    const S& operator()(size_t i, size_t j) const { return d[i * cols + j]; }

    std::vector<S> row(size_t i) const { return {d.begin() + i * cols, d.begin() + (i + 1) * cols}; }
    std::vector<S> col(size_t j) const {
        std::vector<S> v(rows);
        for (size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(size_t j, const std::vector<S>& v) {
        for (size_t i = 0; i < rows; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        for (const auto& x : d)
            if (!ks::detail::zero(x)) return false;
        return true;
    }
    Mat transpose() const {
        Mat t(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const {
        Mat b(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    Mat select(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
        Mat b(rs.size(), cs.size());
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) b(i, j) = (*this)(rs[i], cs[j]);
        return b;
    }

    Mat& operator+=(const Mat& o) {
        check_same(o);
        for (size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same(o);
        for (size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    Mat operator-() const {
        Mat m(rows, cols);
        for (size_t i = 0; i < d.size(); ++i) m.d[i] = -d[i];
        return m;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols != b.rows) throw DimensionMismatch("matrix product");
        Mat c(a.rows, b.cols);
        for (size_t i = 0; i < a.rows; ++i)
            for (size_t k = 0; k < a.cols; ++k) {
                const S& x = a(i, k);
                if (ks::detail::zero(x)) continue;
                for (size_t j = 0; j < b.cols; ++j) {
                    const S& y = b(k, j);
                    if (!ks::detail::zero(y)) c(i, j) += x * y;
                }
            }
        return c;
    }
    friend bool operator==(const Mat& a, const Mat& b) { return a.rows == b.rows && a.cols == b.cols && a.d == b.d; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    template <class F>
    auto map(F f) const -> Mat<decltype(f(std::declval<S>()))> {
        Mat<decltype(f(std::declval<S>()))> m(rows, cols);
        for (size_t i = 0; i < d.size(); ++i) m.d[i] = f(d[i]);
        return m;
    }

  private:
    void check_same(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) throw DimensionMismatch("matrix sum");
    }
};

template <class S>
Mat<S> scale(const S& s, Mat<S> m) {
    for (auto& x : m.d) x = s * x;
    return m;
}

template <class S>
std::vector<S> mat_vec(const Mat<S>& m, const std::vector<S>& v) {
    if (m.cols != v.size()) throw DimensionMismatch("matrix-vector product");
    std::vector<S> r(m.rows, S(0));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            if (!ks::detail::zero(v[j]) && !ks::detail::zero(m(i, j))) r[i] += m(i, j) * v[j];
    return r;
}

// Kronecker product; entries of a are multiplied on the left.
template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> k(a.rows * b.rows, a.cols * b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) {
            if (ks::detail::zero(a(i, j))) continue;
            for (size_t p = 0; p < b.rows; ++p)
                for (size_t q = 0; q < b.cols; ++q) k(i * b.rows + p, j * b.cols + q) = a(i, j) * b(p, q);
        }
    return k;
}

// Conjugate transpose, using the scalar's conj().
template <class S>
Mat<S> adjoint(const Mat<S>& m) {
    Mat<S> t(m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) t(j, i) = conj(m(i, j));
    return t;
}

template <class S>
Mat<S> block_diag(const std::vector<Mat<S>>& blocks) {
    size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows, c += b.cols;
    Mat<S> m(r, c);
    size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (size_t i = 0; i < b.rows; ++i)
            for (size_t j = 0; j < b.cols; ++j) m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows;
        c0 += b.cols;
    }
    return m;
}

// ---- field linear algebra (S must be a field) ----

// In-place reduced row echelon form; returns pivot columns.
template <class S>
std::vector<size_t> rref(Mat<S>& m, size_t ncols_to_reduce = size_t(-1)) {
    size_t nc = std::min(ncols_to_reduce, m.cols);
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && ks::detail::zero(m(p, c))) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        S inv = S(1) / m(r, c);
        for (size_t j = c; j < m.cols; ++j)
            if (!ks::detail::zero(m(r, j))) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || ks::detail::zero(m(i, c))) continue;
            S f = m(i, c);
            for (size_t j = c; j < m.cols; ++j)
                if (!ks::detail::zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class S>
size_t rank(Mat<S> m) {
    return rref(m).size();
}

// Basis of {x : m x = 0} as columns of the result (one column per free variable).
template <class S>
Mat<S> nullspace(Mat<S> m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < m.cols; ++j)
        if (!is_piv[j]) free.push_back(j);
    Mat<S> n(m.cols, free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        n(free[k], k) = S(1);
        for (size_t i = 0; i < piv.size(); ++i) n(piv[i], k) = -m(i, free[k]);
    }
    return n;
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
    if (a.rows != a.cols) throw DimensionMismatch("inverse of non-square matrix");
    size_t n = a.rows;
    Mat<S> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = S(1);
    }
    auto piv = rref(aug, n);
    if (piv.size() != n) throw SingularMatrix("matrix is singular");
    return aug.block(0, n, n, n);
}

template <class S>
S determinant(Mat<S> m) {
    if (m.rows != m.cols) throw DimensionMismatch("determinant of non-square matrix");
    size_t n = m.rows;
    S det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && ks::detail::zero(m(p, c))) ++p;
        if (p == n) return S(0);
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        S inv = S(1) / m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (ks::detail::zero(m(i, c))) continue;
            S f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// Solve a x = b for a single solution; nullopt if inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Mat<S>& a, const std::vector<S>& b) {
    if (b.size() != a.rows) throw DimensionMismatch("solve rhs");
    Mat<S> aug(a.rows, a.cols + 1);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        aug(i, a.cols) = b[i];
    }
    auto piv = rref(aug, a.cols);
    for (size_t i = piv.size(); i < a.rows; ++i)
        if (!ks::detail::zero(aug(i, a.cols))) return std::nullopt;
    std::vector<S> x(a.cols, S(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols);
    return x;
}

// Coordinates with respect to a fixed family of independent column vectors.
// Precomputes a left inverse on pivot rows so repeated queries are cheap.
template <class S>
class Coordinatizer {
  public:
    Coordinatizer() = default;
    explicit Coordinatizer(const Mat<S>& basis_cols) : basis_(basis_cols) {
        Mat<S> t = basis_cols.transpose();
        auto piv = rref(t);
        if (piv.size() != basis_cols.cols) throw SingularMatrix("coordinatizer basis is dependent");
        rows_ = piv;
        linv_ = inverse(basis_cols.select(rows_, iota(basis_cols.cols)));
    }
    size_t dim() const { return basis_.cols; }
    const Mat<S>& basis() const { return basis_; }

    // nullopt when v is not in the span.
    std::optional<std::vector<S>> coords(const std::vector<S>& v) const {
        std::vector<S> sub(rows_.size());
        for (size_t i = 0; i < rows_.size(); ++i) sub[i] = v[rows_[i]];
        std::vector<S> c = mat_vec(linv_, sub);
        if (mat_vec(basis_, c) != v) return std::nullopt;
        return c;
    }
    std::vector<S> coords_or_throw(const std::vector<S>& v, const char* what) const {
        auto c = coords(v);
        if (!c) throw std::domain_error(std::string("vector outside span: ") + what);
        return *c;
    }

  private:
    static std::vector<size_t> iota(size_t n) {
        std::vector<size_t> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = i;
        return v;
    }
    Mat<S> basis_;
    std::vector<size_t> rows_;
    Mat<S> linv_;
};

template <class S>
std::string to_string(const Mat<S>& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.rows; ++i) {
        s += i ? ", [" : "[";
        for (size_t j = 0; j < m.cols; ++j) s += (j ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

}  // namespace ks
