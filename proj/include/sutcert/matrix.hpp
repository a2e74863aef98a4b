#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sutcert {

// Dense row-major matrix over a single entry domain.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::vector<std::vector<T>> rows) {  // NOLINT(google-explicit-constructor)
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (auto& x : r) data_.push_back(std::move(x));
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t.data_.push_back((*this)(r, c));
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<std::vector<U>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(f((*this)(r, c)));
    Matrix<U> m(std::move(out));
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<T> c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) += b(r, k);
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<T> c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) -= b(r, k);
  return c;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  if (a.cols() == 0) throw std::invalid_argument("empty inner dimension");
  Matrix<T> c(a.rows(), b.cols(), a(0, 0) - a(0, 0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(r, j) += a(r, k) * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> scaled(const Matrix<T>& a, const T& s) {
  Matrix<T> c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) *= s;
  return c;
}

// Determinant over a field by fraction-producing Gaussian elimination, pivoting
// on the first nonzero entry of each column.
template <class T>
T det_field(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  T det = m(0, 0) - m(0, 0);
  bool negate = false;
  std::vector<T> pivots;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return det;  // zero
    if (p != c) {
      m.swap_rows(p, c);
      negate = !negate;
    }
    const T& pivot = m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      T factor = m(r, c) / pivot;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
    pivots.push_back(pivot);
  }
  det = pivots[0];
  for (std::size_t i = 1; i < n; ++i) det *= pivots[i];
  return negate ? -det : det;
}

// Inverse over a field by Gauss-Jordan elimination; throws when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, const T& zero, const T& one) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<T> m = a, inv = Matrix<T>::identity(n, zero, one);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    m.swap_rows(p, c);
    inv.swap_rows(p, c);
    T s = one / m(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      m(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      T f = m(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(r, k) -= f * m(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

template <class T, class Render>
std::string format_matrix(const Matrix<T>& m, Render&& render) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += render(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace sutcert
