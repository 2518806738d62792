#include "cutpoint/exactmath/unitary.hpp"

#include <cmath>
#include <vector>

#include "cutpoint/exactmath/errors.hpp"
#include "cutpoint/exactmath/validate.hpp"

namespace cutpoint {

namespace {

// <u, v> = sum conj(u_i) v_i
Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const std::vector<Complex>& v) { return std::sqrt(std::real(inner(v, v))); }

}  // namespace

Matrix<Complex> complete_to_unitary(std::span<const Complex> first_row, double norm_tol) {
  const std::size_t n = first_row.size();
  if (n == 0) throw DimensionError("cannot complete an empty row");
  std::vector<Complex> head(first_row.begin(), first_row.end());
  const double len = norm(head);
  if (!(std::abs(len - 1.0) <= norm_tol)) {
    throw DomainError("first row has norm " + format_value(len) + ", expected 1");
  }
  for (auto& v : head) v /= len;

  // Rows of a unitary matrix are orthonormal; we build them as vectors with
  // row_k[i] = U(k, i) and use the conjugate-linear inner product on them.
  std::vector<std::vector<Complex>> rows{head};
  for (std::size_t e = 0; e < n && rows.size() < n; ++e) {
    std::vector<Complex> candidate(n, 0.0);
    candidate[e] = 1.0;
    // Two passes of modified Gram-Schmidt keep the result orthogonal to
    // machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& r : rows) {
        const Complex proj = inner(r, candidate);
        for (std::size_t i = 0; i < n; ++i) candidate[i] -= proj * r[i];
      }
    }
    const double cn = norm(candidate);
    if (cn < 1e-8) continue;
    for (auto& v : candidate) v /= cn;
    rows.push_back(std::move(candidate));
  }
  if (rows.size() != n) throw DomainError("Gram-Schmidt completion lost rank");

  Matrix<Complex> u(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) u(k, i) = rows[k][i];
  return u;
}

const char* to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Stochastic:
      return "stochastic";
    case MatrixKind::Unitary:
      return "unitary";
    case MatrixKind::Projector:
      return "projector";
    case MatrixKind::Density:
      return "density";
    case MatrixKind::KrausSet:
      return "kraus-set";
  }
  return "?";
}

MatrixKind parse_matrix_kind(const std::string& text) {
  for (auto kind : {MatrixKind::Stochastic, MatrixKind::Unitary, MatrixKind::Projector, MatrixKind::Density,
                    MatrixKind::KrausSet}) {
    if (text == to_string(kind)) return kind;
  }
  throw DomainError("unknown matrix kind '" + text + "'");
}

}  // namespace cutpoint
