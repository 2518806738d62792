#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutpoint/exactmath/errors.hpp"
#include "cutpoint/exactmath/numeric.hpp"

namespace cutpoint {

// Dense row-major matrix over one field T. Column vectors are n x 1
// matrices and row vectors 1 x n; the field is a type parameter, so every
// entry of a matrix shares one scalar variant.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, NumTraits<T>::zero()) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                           std::to_string(rows_ * cols_));
    }
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = NumTraits<T>::one();
    return m;
  }

  static Matrix column(std::vector<T> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
  }

  static Matrix row(std::vector<T> entries) {
    const std::size_t n = entries.size();
    return Matrix(1, n, std::move(entries));
  }

  // Unit column vector e_index of length n.
  static Matrix basis(std::size_t n, std::size_t index) {
    if (index >= n) throw DimensionError("basis index out of range");
    Matrix m(n, 1);
    m(index, 0) = NumTraits<T>::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    T term;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& lhs = a(i, k);
        if (lhs == NumTraits<T>::zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          term = lhs * b(k, j);
          out(i, j) += term;
        }
      }
    }
    return out;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionError(std::string("shape mismatch for '") + op + "': " + shape() + " vs " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

// Entrywise complex conjugate (U^*).
template <class T>
Matrix<T> conjugate(const Matrix<T>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = NumTraits<T>::conj(m(i, j));
  return out;
}

// Conjugate transpose (M^dagger).
template <class T>
Matrix<T> adjoint(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = NumTraits<T>::conj(m(i, j));
  return out;
}

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionError("trace of non-square " + m.shape() + " matrix");
  T sum = NumTraits<T>::zero();
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

// M^k by repeated squaring; M^0 is the identity.
template <class T>
Matrix<T> mat_pow(const Matrix<T>& m, unsigned long k) {
  if (!m.is_square()) throw DimensionError("mat_pow of non-square " + m.shape() + " matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  if (k == 0) return result;
  Matrix<T> base = m;
  bool first = true;
  while (true) {
    if (k & 1UL) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return out;
}

// Explicit exact -> approximate coercion.
template <class T>
Matrix<typename NumTraits<T>::Approx> to_approx(const Matrix<T>& m) {
  using A = typename NumTraits<T>::Approx;
  std::vector<A> data;
  data.reserve(m.rows() * m.cols());
  for (const auto& v : m.entries()) data.push_back(NumTraits<T>::to_approx(v));
  return Matrix<A>(m.rows(), m.cols(), std::move(data));
}

// Embeds a real rational matrix into the Gaussian rationals.
inline Matrix<GaussianRational> to_gaussian(const Matrix<Rational>& m) {
  std::vector<GaussianRational> data(m.entries().begin(), m.entries().end());
  return Matrix<GaussianRational>(m.rows(), m.cols(), std::move(data));
}

template <class T>
std::string format_matrix(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += format_value(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace cutpoint
