#include "cutpoint/constructions/rotation.hpp"

#include <numeric>
#include <string>

namespace cutpoint {

void check_triple(const PythTriple& t) {
  if (!(t.m > t.n && t.n > 0)) throw DomainError("triple generator needs m > n > 0");
  if (std::gcd(t.m, t.n) != 1) throw DomainError("triple generator needs gcd(m, n) = 1");
  if ((t.m - t.n) % 2 == 0) throw DomainError("triple generator needs m and n of opposite parity");
}

Integer triple_adjacent(const PythTriple& t) { return Integer(t.m) * t.m - Integer(t.n) * t.n; }
Integer triple_opposite(const PythTriple& t) { return Integer(2) * t.m * t.n; }
Integer triple_hypotenuse(const PythTriple& t) { return Integer(t.m) * t.m + Integer(t.n) * t.n; }

Matrix<Rational> rotation_matrix(const PythTriple& t) {
  check_triple(t);
  const Integer h = triple_hypotenuse(t);
  const Rational c = make_rational(triple_adjacent(t), h);
  const Rational s = make_rational(triple_opposite(t), h);
  return Matrix<Rational>{{c, Rational(-s)}, {s, c}};
}

Matrix<Integer> scaled_rotation_matrix(const PythTriple& t) {
  check_triple(t);
  const Integer a = triple_adjacent(t);
  const Integer b = triple_opposite(t);
  return Matrix<Integer>{{a, Integer(-b)}, {b, a}};
}

Gfa<Rational> rotation_gfa(const PythTriple& t) {
  Gfa<Rational> g;
  g.alphabet = Alphabet("a");
  g.transitions.emplace('a', rotation_matrix(t));
  g.initial = Matrix<Rational>::basis(2, 0);
  g.final_row = Matrix<Rational>::row({Rational(1), Rational(0)});
  return g;
}

Mcqfa<GaussianRational> rotation_mcqfa(const PythTriple& t) {
  Mcqfa<GaussianRational> m;
  m.alphabet = Alphabet("a");
  m.transitions.emplace('a', to_gaussian(rotation_matrix(t)));
  m.initial = Matrix<GaussianRational>::basis(2, 0);
  m.accept = {0};
  return m;
}

Automaton rotation(const PythTriple& t, RotationModel model) {
  if (model == RotationModel::Gfa) return rotation_gfa(t);
  return rotation_mcqfa(t);
}

std::vector<Integer> chebyshev_numerators(const PythTriple& t, std::size_t max_k) {
  check_triple(t);
  // With p_k = cos(k theta) h^k: p_k = 2a p_{k-1} - h^2 p_{k-2}.
  const Integer a = triple_adjacent(t);
  const Integer h = triple_hypotenuse(t);
  const Integer two_a = 2 * a;
  const Integer h2 = h * h;
  std::vector<Integer> p;
  p.reserve(max_k + 1);
  p.emplace_back(1);
  if (max_k >= 1) p.push_back(a);
  for (std::size_t k = 2; k <= max_k; ++k) {
    Integer next = two_a * p[k - 1] - h2 * p[k - 2];
    p.push_back(std::move(next));
  }
  return p;
}

std::vector<Rational> rotation_values(const PythTriple& t, std::size_t max_k) {
  const auto p = chebyshev_numerators(t, max_k);
  const Integer h = triple_hypotenuse(t);
  std::vector<Rational> out;
  out.reserve(p.size());
  // p_k / h^k is already in lowest terms.
  Integer den = 1;
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rational v;
    v.get_num() = p[k];
    v.get_den() = den;
    out.push_back(std::move(v));
    den *= h;
  }
  return out;
}

}  // namespace cutpoint
