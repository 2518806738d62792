#pragma once

#include <cstddef>

#include "cutpoint/automata/models.hpp"

namespace cutpoint {

// Three-state unary PFA P_x, 0 < x <= 1/2, with transition matrix
//   [0 0 x; 1 0 x; 0 1 1-2x],
// initial vector e_1 and final vector (0 0 1).
Pfa<Rational> px(const Rational& x);

// Closed form of f(a^m) = lambda + D x^{m/2} cos(m theta + gamma), where
// f(a^m) = A + 2 x^{m/2} (B cos m theta - C sin m theta).
struct PxParams {
  Rational x;
  Rational lambda_exact;  // 1 / (3x + 1)
  double lambda = 0;      // = A
  double a = 0;
  double b = 0;
  double c = 0;
  double d = 0;
  double theta = 0;  // arccos(-sqrt x), in (pi/2, 3pi/4]
  double gamma = 0;  // arccos(-sqrt((x - x^2) / (3x + 1)))
};

void check_px_domain(const Rational& x);

PxParams px_params(const Rational& x);

double px_closed(const Rational& x, std::size_t m);
double px_closed(const PxParams& params, std::size_t m);

}  // namespace cutpoint
