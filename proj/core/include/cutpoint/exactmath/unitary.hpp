#pragma once

#include <complex>
#include <span>

#include "cutpoint/exactmath/matrix.hpp"

namespace cutpoint {

using Complex = std::complex<double>;

// Unitary matrix whose first row is first_row, completed by Gram-Schmidt
// over the standard basis (dependent candidates skipped). The row must have
// unit norm within norm_tol; it is renormalized before completion.
Matrix<Complex> complete_to_unitary(std::span<const Complex> first_row, double norm_tol = 1e-9);

}  // namespace cutpoint
