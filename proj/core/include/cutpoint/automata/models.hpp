#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutpoint/automata/alphabet.hpp"
#include "cutpoint/exactmath/matrix.hpp"
#include "cutpoint/exactmath/unitary.hpp"

namespace cutpoint {

// Generalized finite automaton over a real field (Rational or double).
// Transitions act on column vectors from the left: v_i = A_{w_i} v_{i-1};
// the accepting value is f A_$ A_{w_k} ... A_{w_1} A_cent v_0.
template <class T>
struct Gfa {
  Alphabet alphabet;
  std::map<Symbol, Matrix<T>> transitions;
  Matrix<T> initial;      // n x 1
  Matrix<T> final_row;    // 1 x n
  std::optional<Matrix<T>> left_marker;
  std::optional<Matrix<T>> right_marker;

  std::size_t states() const noexcept { return initial.rows(); }
};

// A GFA whose matrices are left stochastic, whose initial vector is
// stochastic and whose final weights lie in [0, 1]. Same evaluation rule.
template <class T>
struct Pfa : Gfa<T> {
  Pfa() = default;
  explicit Pfa(Gfa<T> machine) : Gfa<T>(std::move(machine)) {}

  const Gfa<T>& as_gfa() const noexcept { return *this; }
};

// Measure-once quantum automaton: one unitary per symbol, a single
// projective measurement onto span{|q_j> : j in accept} at the end.
// State indices are 0-based.
template <class T>
struct Mcqfa {
  Alphabet alphabet;
  std::map<Symbol, Matrix<T>> transitions;
  Matrix<T> initial;  // unit column vector
  std::vector<std::size_t> accept;
  std::optional<Matrix<T>> left_marker;
  std::optional<Matrix<T>> right_marker;

  std::size_t states() const noexcept { return initial.rows(); }
};

// General quantum automaton: a superoperator (list of Kraus elements) per
// symbol acting on density matrices, rho -> sum_j E_j rho E_j^dagger.
template <class T>
struct Qfa {
  Alphabet alphabet;
  std::map<Symbol, std::vector<Matrix<T>>> transitions;
  Matrix<T> initial;  // density matrix
  std::vector<std::size_t> accept;
  std::optional<std::vector<Matrix<T>>> left_marker;
  std::optional<std::vector<Matrix<T>>> right_marker;

  std::size_t states() const noexcept { return initial.rows(); }
};

// |q><q| for 0-based basis index q.
template <class T>
Matrix<T> basis_density(std::size_t n, std::size_t q) {
  Matrix<T> rho(n, n);
  if (q >= n) throw DimensionError("basis state index out of range");
  rho(q, q) = NumTraits<T>::one();
  return rho;
}

}  // namespace cutpoint
