#pragma once

#include <cstddef>
#include <vector>

#include "cutpoint/automata/automaton.hpp"

namespace cutpoint {

// Generator (m, n) of the primitive Pythagorean triple
// (m^2 - n^2, 2mn, m^2 + n^2). Primitivity (gcd 1, opposite parity,
// m > n > 0) keeps cos(theta) = (m^2 - n^2)/(m^2 + n^2) away from
// {0, ±1/2, ±1}, so theta/pi is irrational.
struct PythTriple {
  unsigned long m = 2;
  unsigned long n = 1;
};

void check_triple(const PythTriple& t);

Integer triple_adjacent(const PythTriple& t);    // m^2 - n^2
Integer triple_opposite(const PythTriple& t);    // 2mn
Integer triple_hypotenuse(const PythTriple& t);  // m^2 + n^2

// [[cos, -sin], [sin, cos]] with exact rational entries.
Matrix<Rational> rotation_matrix(const PythTriple& t);

// hypotenuse * rotation_matrix(t): an integer matrix whose k-th power is
// hypotenuse^k * R^k.
Matrix<Integer> scaled_rotation_matrix(const PythTriple& t);

enum class RotationModel { Gfa, Mcqfa };

Gfa<Rational> rotation_gfa(const PythTriple& t);
Mcqfa<GaussianRational> rotation_mcqfa(const PythTriple& t);
Automaton rotation(const PythTriple& t, RotationModel model);

// cos(k theta) * hypotenuse^k for k = 0..max_k, from the Chebyshev
// recurrence c_k = 2 cos(theta) c_{k-1} - c_{k-2}.
std::vector<Integer> chebyshev_numerators(const PythTriple& t, std::size_t max_k);

// cos(k theta) for k = 0..max_k as canonical rationals.
std::vector<Rational> rotation_values(const PythTriple& t, std::size_t max_k);

}  // namespace cutpoint
