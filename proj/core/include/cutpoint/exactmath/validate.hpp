#pragma once

#include <span>
#include <string>
#include <vector>

#include "cutpoint/exactmath/errors.hpp"
#include "cutpoint/exactmath/matrix.hpp"

namespace cutpoint {

enum class MatrixKind { Stochastic, Unitary, Projector, Density, KrausSet };

const char* to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(const std::string& text);

namespace detail {

template <class T>
void check_tolerance(double tol) {
  if (tol < 0) throw DomainError("negative tolerance");
  if constexpr (!NumTraits<T>::exact) {
    if (tol == 0) throw DomainError("zero tolerance requires exact scalars");
  }
}

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + " check needs a square matrix, got " + m.shape());
}

template <class T>
bool near_identity(const Matrix<T>& m, double tol, std::vector<std::string>& out, const std::string& label) {
  bool ok = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const T expected = i == j ? NumTraits<T>::one() : NumTraits<T>::zero();
      if (!within(m(i, j), expected, tol)) {
        out.push_back(label + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " +
                      format_value(m(i, j)) + ", expected " + format_value(expected));
        ok = false;
      }
    }
  }
  return ok;
}

// Hermitian positive semidefiniteness by symmetric elimination: a zero pivot
// forces its whole row to vanish, a negative pivot is a violation.
template <class T>
bool positive_semidefinite(Matrix<T> a, double tol) {
  using Tr = NumTraits<T>;
  using R = typename Tr::Real;
  const std::size_t n = a.rows();
  R neg_tol;
  if constexpr (Tr::exact) {
    neg_tol = -exact_from_double(tol);
  } else {
    neg_tol = -tol;
  }
  for (std::size_t k = 0; k < n; ++k) {
    R pivot = Tr::real(a(k, k));
    if (pivot < neg_tol) return false;
    if (within(a(k, k), Tr::zero(), tol)) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!within(a(k, j), Tr::zero(), tol)) return false;
      }
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == Tr::zero()) continue;
      T factor = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T delta = factor * a(k, j);
        a(i, j) -= delta;
      }
    }
  }
  return true;
}

}  // namespace detail

// Checks one structural property; returns the violations found (empty when
// the property holds within tol). tol == 0 is exact and needs an exact field.
template <class T>
std::vector<std::string> validate_matrix(MatrixKind kind, std::span<const Matrix<T>> matrices, double tol) {
  using Tr = NumTraits<T>;
  detail::check_tolerance<T>(tol);
  std::vector<std::string> out;

  if (kind == MatrixKind::KrausSet) {
    if (matrices.empty()) {
      out.emplace_back("kraus-set is empty");
      return out;
    }
    const std::size_t n = matrices.front().cols();
    Matrix<T> sum(n, n);
    for (const auto& e : matrices) {
      if (e.cols() != n || e.rows() != n) {
        throw DimensionError("kraus elements must share one square shape; got " + e.shape());
      }
      sum += adjoint(e) * e;
    }
    // sum_j E_j^dagger E_j = I  <=>  the stacked matrix has orthonormal columns.
    detail::near_identity(sum, tol, out, "kraus-set: sum of E^dagger E");
    return out;
  }

  for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
    const Matrix<T>& m = matrices[idx];
    const std::string label = matrices.size() > 1 ? "matrix " + std::to_string(idx + 1) + ": " : "";
    switch (kind) {
      case MatrixKind::Stochastic: {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          T sum = Tr::zero();
          for (std::size_t i = 0; i < m.rows(); ++i) {
            const T& v = m(i, j);
            if (!within(T(Tr::imag(v)), Tr::zero(), tol)) {
              out.push_back(label + "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is not real");
            }
            typename Tr::Real re = Tr::real(v);
            if (re < 0 && !within(T(re), Tr::zero(), tol)) {
              out.push_back(label + "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") is negative: " + format_value(v));
            }
            sum += v;
          }
          if (!within(sum, Tr::one(), tol)) {
            out.push_back(label + "column " + std::to_string(j + 1) + " sums to " + format_value(sum) +
                          ", expected 1");
          }
        }
        break;
      }
      case MatrixKind::Unitary: {
        detail::require_square(m, "unitary");
        detail::near_identity(adjoint(m) * m, tol, out, label + "unitary: M^dagger M");
        break;
      }
      case MatrixKind::Projector: {
        detail::require_square(m, "projector");
        for (std::size_t i = 0; i < m.rows(); ++i) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            const T& v = m(i, j);
            if (i != j) {
              if (!within(v, Tr::zero(), tol)) {
                out.push_back(label + "projector has off-diagonal entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") = " + format_value(v));
              }
            } else if (!within(v, Tr::zero(), tol) && !within(v, Tr::one(), tol)) {
              out.push_back(label + "projector diagonal entry " + std::to_string(i + 1) + " is " + format_value(v) +
                            ", expected 0 or 1");
            }
          }
        }
        break;
      }
      case MatrixKind::Density: {
        detail::require_square(m, "density");
        const T tr = trace(m);
        if (!within(tr, Tr::one(), tol)) out.push_back(label + "density trace is " + format_value(tr) + ", expected 1");
        bool hermitian = true;
        for (std::size_t i = 0; i < m.rows() && hermitian; ++i)
          for (std::size_t j = i; j < m.cols(); ++j)
            if (!within(m(i, j), Tr::conj(m(j, i)), tol)) {
              out.push_back(label + "density matrix is not Hermitian at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
              hermitian = false;
              break;
            }
        if (hermitian && !detail::positive_semidefinite(m, tol)) {
          out.push_back(label + "density matrix is not positive semidefinite");
        }
        break;
      }
      case MatrixKind::KrausSet:
        break;
    }
  }
  return out;
}

template <class T>
std::vector<std::string> validate_matrix(MatrixKind kind, const Matrix<T>& m, double tol) {
  return validate_matrix<T>(kind, std::span<const Matrix<T>>(&m, 1), tol);
}

}  // namespace cutpoint
