#pragma once

#include "homotopes/concepts.hpp"
#include "homotopes/errors.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace homotopes {

/// Dense row-major matrix over a ring.
template <Ring T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const T &fill)
      : r_(rows), c_(cols), a_(rows * cols, fill) {}
  explicit Matrix(const std::vector<std::vector<T>> &rows) {
    r_ = rows.size();
    c_ = rows.empty() ? 0 : rows[0].size();
    a_.reserve(r_ * c_);
    for (const auto &row : rows) {
      if (row.size() != c_) throw DomainError("ragged matrix rows");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  /// E_ij of size rows x cols.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = T(1);
    return m;
  }
  static Matrix column(const std::vector<T> &v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  static Matrix row_vector(const std::vector<T> &v) {
    Matrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return r_; }
  [[nodiscard]] std::size_t cols() const { return c_; }
  [[nodiscard]] bool is_square() const { return r_ == c_; }
  T &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i * c_),
                          a_.begin() + static_cast<long>((i + 1) * c_));
  }
  [[nodiscard]] std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  [[nodiscard]] bool is_zero() const {
    for (const auto &x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  [[nodiscard]] T trace() const {
    T s(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) s = s + (*this)(i, i);
    return s;
  }
  template <typename F> [[nodiscard]] auto map(F f) const {
    using U = std::invoke_result_t<F, const T &>;
    Matrix<U> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }
  [[nodiscard]] Matrix submatrix(const std::vector<std::size_t> &rows,
                                 const std::vector<std::size_t> &cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  friend Matrix operator+(const Matrix &a, const Matrix &b) {
    a.check_same(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix &a, const Matrix &b) {
    a.check_same(b);
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix &a) {
    Matrix m = a;
    for (auto &x : m.a_) x = -x;
    return m;
  }
  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.c_ != b.r_)
      throw DomainError("matrix shape mismatch: " + a.shape() + " * " + b.shape());
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T &x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!b(k, j).is_zero()) m(i, j) = m(i, j) + x * b(k, j);
      }
    return m;
  }
  friend Matrix operator*(const T &s, const Matrix &a) {
    Matrix m = a;
    for (auto &x : m.a_) x = s * x;
    return m;
  }
  friend std::vector<T> operator*(const Matrix &a, const std::vector<T> &v) {
    if (a.c_ != v.size()) throw DomainError("matrix-vector shape mismatch");
    std::vector<T> out(a.r_, T(0));
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t j = 0; j < a.c_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + a(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  [[nodiscard]] std::string shape() const {
    return std::to_string(r_) + "x" + std::to_string(c_);
  }

private:
  void check_same(const Matrix &b) const {
    if (r_ != b.r_ || c_ != b.c_)
      throw DomainError("matrix shape mismatch: " + shape() + " vs " + b.shape());
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

/// Block diagonal sum a (+) b.
template <Ring T> Matrix<T> direct_sum(const Matrix<T> &a, const Matrix<T> &b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

template <Ring T> Matrix<T> commutator(const Matrix<T> &a, const Matrix<T> &b) {
  return a * b - b * a;
}

/// Result of Gauss-Jordan elimination.
template <Field F> struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

template <Field F> RowEchelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field F> std::size_t rank(const Matrix<F> &m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column.
template <Field F> std::vector<std::vector<F>> nullspace(const Matrix<F> &m) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Linearly independent columns of m spanning its column space.
template <Field F> Matrix<F> column_space_basis(const Matrix<F> &m) {
  auto piv = rref(m).pivots;
  return m.submatrix([&] {
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return rows;
  }(), piv);
}

/// Linearly independent rows spanning the row space (reduced form).
template <Field F> Matrix<F> row_space_basis(const Matrix<F> &m) {
  auto [r, piv] = rref(m);
  Matrix<F> out(piv.size(), m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

template <Field F> Matrix<F> inverse(const Matrix<F> &m) {
  if (!m.is_square()) throw DomainError("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto [r, piv] = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("singular matrix");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

/// Solves m x = b for one solution; nullopt-like failure throws.
template <Field F> std::vector<F> solve(const Matrix<F> &m, const std::vector<F> &b) {
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) throw DomainError("inconsistent linear system");
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
  return x;
}

/// Determinant by Gaussian elimination over a field.
template <Field F> F det_field(Matrix<F> m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  std::size_t n = m.rows();
  F d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d = d * m(c, c);
    F inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return d;
}

/// Division-free determinant by Laplace expansion over column subsets
/// (memoized minors of the leading rows); O(2^n n) ring products.
template <Ring T> T det_expansion(const Matrix<T> &m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 24) throw DomainError("matrix too large for expansion determinant");
  // minor[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask.
  std::vector<T> minor(std::size_t{1} << n, T(0));
  minor[0] = T(1);
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    T acc(0);
    int sign = 1;
    // expand along the last row used; columns in increasing order.
    int count_after = __builtin_popcountll(mask) - 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const T &a = m(row, j);
      if (!a.is_zero()) {
        const T &sub = minor[mask ^ (std::size_t{1} << j)];
        if (!sub.is_zero()) {
          T term = a * sub;
          acc = (count_after % 2 == 0) ? acc + term : acc - term;
        }
      }
      --count_after;
      sign = -sign;
    }
    (void)sign;
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

/// Fraction-free Bareiss elimination; `exact_div(a, b)` must return a/b
/// whenever b divides a in the ring.
template <Ring T, typename Div> T det_bareiss(Matrix<T> m, Div exact_div) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

} // namespace homotopes
