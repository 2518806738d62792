#include "cutpoint/constructions/quantum.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace cutpoint {

namespace {

Matrix<Complex> conj_kron(const Matrix<Complex>& m) { return kron(conjugate(m), m); }

// 1 ⊕ m
Matrix<Complex> direct_sum_one(const Matrix<Complex>& m) {
  Matrix<Complex> out(m.rows() + 1, m.cols() + 1);
  out(0, 0) = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i + 1, j + 1) = m(i, j);
  }
  return out;
}

}  // namespace

Mcqfa<Complex> to_complex(const Mcqfa<GaussianRational>& m) {
  Mcqfa<Complex> out;
  out.alphabet = m.alphabet;
  for (const auto& [s, u] : m.transitions) out.transitions.emplace(s, to_approx(u));
  out.initial = to_approx(m.initial);
  out.accept = m.accept;
  if (m.left_marker) out.left_marker = to_approx(*m.left_marker);
  if (m.right_marker) out.right_marker = to_approx(*m.right_marker);
  return out;
}

TransformResult exclusive_to_zero(const Automaton& mc, const Scalar& lambda) {
  Mcqfa<Complex> m;
  if (const auto* exact = mc.get_if<Mcqfa<GaussianRational>>()) {
    m = to_complex(*exact);
  } else if (const auto* approx = mc.get_if<Mcqfa<Complex>>()) {
    m = *approx;
  } else {
    throw DomainError(std::string("exclusive-to-zero needs an MCQFA, got ") + to_string(mc.model()));
  }
  if (auto problems = validate(mc); !problems.empty()) throw ValidationError(std::move(problems));
  if (m.right_marker) throw DomainError("exclusive-to-zero needs a machine without a right end-marker");
  if (!lambda.is_real()) throw DomainError("cutpoint must be real");
  const double l = lambda.to_approx_real();
  if (!(l >= 0.0 && l <= 1.0)) throw DomainError("cutpoint must lie in [0, 1]");
  if (l == 0.0) return {mc, std::string("cutpoint 0: the machine already has exclusive cutpoint 0")};

  const std::size_t n = m.states();
  const std::size_t dim = n * n + 1;

  Mcqfa<Complex> out;
  out.alphabet = m.alphabet;
  for (const auto& [s, u] : m.transitions) out.transitions.emplace(s, direct_sum_one(conj_kron(u)));

  const Matrix<Complex> v0 = initial_object(m);
  const Matrix<Complex> tv = kron(conjugate(v0), v0);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  out.initial = Matrix<Complex>(dim, 1);
  out.initial(0, 0) = inv_sqrt2;
  for (std::size_t i = 0; i < n * n; ++i) out.initial(i + 1, 0) = inv_sqrt2 * tv(i, 0);

  const double c = 1.0 / std::sqrt(l * l + static_cast<double>(m.accept.size()));
  std::vector<Complex> first(dim, Complex(0.0));
  first[0] = -c * l;
  for (std::size_t j : m.accept) first[1 + j * n + j] = c;
  out.right_marker = complete_to_unitary(first);
  out.accept = {0};
  return {Automaton(std::move(out)), std::nullopt};
}

Rational exclusive_to_zero_value(const Rational& f, const Rational& lambda, std::size_t accept_count) {
  const Rational c2 = 1 / (lambda * lambda + accept_count);
  const Rational d = f - lambda;
  return Rational(c2 * d * d / 2);
}

Mcqfa<Complex> modn_mcqfa(unsigned long n) {
  if (n < 2) throw DomainError("mod-n machine needs n >= 2");
  const double angle = std::numbers::pi / static_cast<double>(n);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mcqfa<Complex> m;
  m.alphabet = Alphabet("a");
  m.transitions.emplace('a', Matrix<Complex>{{Complex(c), Complex(-s)}, {Complex(s), Complex(c)}});
  m.initial = Matrix<Complex>::basis(2, 0);
  m.accept = {0};
  return m;
}

}  // namespace cutpoint
