#ifndef JDOMAIN_LINALG_HPP
#define JDOMAIN_LINALG_HPP

#include "jdomain/errors.hpp"
#include "jdomain/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace jdomain {

template <class T>
using Vec = std::vector<T>;
using QVec = Vec<Rational>;
using CVec = Vec<Gaussian>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t nrows) {
        Matrix m(nrows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t ncols) {
        Matrix m(rows.size(), ncols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec<T> column(std::size_t j) const {
        Vec<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec<T> row(std::size_t i) const {
        return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!jdomain::is_zero(x)) return false;
        return true;
    }
    T trace() const {
        T s{};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (jdomain::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Vec<T> operator*(const Matrix& a, const Vec<T>& v) {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix shape mismatch");
        Vec<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!jdomain::is_zero(v[k])) out[i] += a(i, k) * v[k];
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<Gaussian>;

template <class T>
bool is_zero_vec(const Vec<T>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class T>
Vec<T> add(Vec<T> a, const Vec<T>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}
template <class T>
Vec<T> sub(Vec<T> a, const Vec<T>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}
template <class T>
Vec<T> scale(const T& s, Vec<T> a) {
    for (auto& x : a) x = s * x;
    return a;
}
template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
    T s{};
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}
template <class T>
Vec<T> unit(std::size_t n, std::size_t i) {
    Vec<T> v(n);
    v[i] = T(1);
    return v;
}

CVec to_complex(const QVec& v);
CMatrix to_complex(const QMatrix& m);
QVec real_part(const CVec& v);
QVec imag_part(const CVec& v);
bool is_real_vec(const CVec& v);
/// Throws ValidationError unless every entry is real.
QVec require_real(const CVec& v);
QMatrix require_real(const CMatrix& m);

template <class T>
struct Echelon {
    Matrix<T> m;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class T>
Echelon<T> rref(Matrix<T> m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(piv)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

/// Kernel basis in reduced-echelon normalization (one vector per free column).
template <class T>
std::vector<Vec<T>> kernel(const Matrix<T>& a) {
    auto e = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<Vec<T>> out;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec<T> v(a.cols());
        v[f] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m(r, f);
        if (!is_zero_vec(a * v)) throw std::logic_error("kernel back-substitution failed");
        out.push_back(std::move(v));
    }
    return out;
}

template <class T>
struct LinearSolution {
    Vec<T> x;
    std::vector<Vec<T>> kernel;
};

template <class T>
std::optional<Vec<T>> try_solve(const Matrix<T>& a, const Vec<T>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vec<T> x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.m(r, a.cols());
    if (a * x != b) throw std::logic_error("solve back-substitution failed");
    return x;
}

/// Full solution set of a·x = b; throws NoSolution when inconsistent.
template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Vec<T>& b) {
    auto x = try_solve(a, b);
    if (!x) throw NoSolution();
    return {std::move(*x), kernel(a)};
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
    std::size_t n = a.rows();
    if (a.cols() != n) return std::nullopt;
    if (n == 0) return Matrix<T>();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    auto e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
    return inv;
}

template <class T>
T determinant(Matrix<T> m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return T{};
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Leading principal minors d_1..d_n.
template <class T>
std::vector<T> leading_minors(const Matrix<T>& m) {
    std::vector<T> out;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Matrix<T> s(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) s(i, j) = m(i, j);
        out.push_back(determinant(std::move(s)));
    }
    return out;
}

/// Canonical (reduced-echelon) basis of the span of vs inside T^n.
template <class T>
std::vector<Vec<T>> span_basis(const std::vector<Vec<T>>& vs, std::size_t n) {
    if (vs.empty()) return {};
    auto e = rref(Matrix<T>::from_rows(vs, n));
    std::vector<Vec<T>> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.m.row(r));
    return out;
}

/// Coordinates of v in an independent family, or nullopt if v is outside the span.
template <class T>
std::optional<Vec<T>> coords_in(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
    if (basis.empty()) {
        if (is_zero_vec(v)) return Vec<T>{};
        return std::nullopt;
    }
    return try_solve(Matrix<T>::from_columns(basis, v.size()), v);
}

template <class T>
bool in_span(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
    return coords_in(basis, v).has_value();
}

template <class T>
bool independent(const std::vector<Vec<T>>& vs, std::size_t n) {
    return vs.empty() || rank(Matrix<T>::from_rows(vs, n)) == vs.size();
}

template <class T>
bool same_span(const std::vector<Vec<T>>& a, const std::vector<Vec<T>>& b, std::size_t n) {
    return span_basis(a, n) == span_basis(b, n);
}

template <class T>
std::vector<Vec<T>> span_sum(std::vector<Vec<T>> a, const std::vector<Vec<T>>& b, std::size_t n) {
    a.insert(a.end(), b.begin(), b.end());
    return span_basis(a, n);
}

template <class T>
std::vector<Vec<T>> span_intersection(const std::vector<Vec<T>>& a, const std::vector<Vec<T>>& b,
                                      std::size_t n) {
    if (a.empty() || b.empty()) return {};
    std::vector<Vec<T>> cols = a;
    for (const auto& v : b) cols.push_back(scale(T(-1), v));
    auto ker = kernel(Matrix<T>::from_columns(cols, n));
    std::vector<Vec<T>> out;
    for (const auto& k : ker) {
        Vec<T> v(n);
        for (std::size_t i = 0; i < a.size(); ++i) v = add(v, scale(k[i], a[i]));
        out.push_back(std::move(v));
    }
    return span_basis(out, n);
}

}  // namespace jdomain

#endif
