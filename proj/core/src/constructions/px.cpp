#include "cutpoint/constructions/px.hpp"

#include <cmath>

namespace cutpoint {

void check_px_domain(const Rational& x) {
  if (!(x > 0 && x <= Rational(1, 2))) throw DomainError("x = " + to_string(x) + " is outside (0, 1/2]");
}

Pfa<Rational> px(const Rational& x) {
  check_px_domain(x);
  const Rational zero(0), one(1);
  Gfa<Rational> g;
  g.alphabet = Alphabet("a");
  g.transitions.emplace('a', Matrix<Rational>{{zero, zero, x}, {one, zero, x}, {zero, one, Rational(1 - 2 * x)}});
  g.initial = Matrix<Rational>::basis(3, 0);
  g.final_row = Matrix<Rational>::row({zero, zero, one});
  return Pfa<Rational>(std::move(g));
}

PxParams px_params(const Rational& x) {
  check_px_domain(x);
  PxParams p;
  p.x = x;
  p.lambda_exact = 1 / (3 * x + 1);
  const double xd = to_double(x);
  const double spread = xd - xd * xd;  // x - x^2
  p.lambda = to_double(p.lambda_exact);
  p.a = p.lambda;
  p.b = -1.0 / (6.0 * xd + 2.0);
  p.c = (xd + 1.0) / ((6.0 * xd + 2.0) * std::sqrt(spread));
  p.d = 1.0 / std::sqrt((3.0 * xd + 1.0) * spread);
  p.theta = std::acos(-std::sqrt(xd));
  p.gamma = std::acos(-std::sqrt(spread / (3.0 * xd + 1.0)));
  return p;
}

double px_closed(const PxParams& params, std::size_t m) {
  const double md = static_cast<double>(m);
  return params.lambda + params.d * std::pow(to_double(params.x), md / 2.0) * std::cos(md * params.theta + params.gamma);
}

double px_closed(const Rational& x, std::size_t m) { return px_closed(px_params(x), m); }

}  // namespace cutpoint
