#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cutpoint/automata/models.hpp"
#include "cutpoint/exactmath/validate.hpp"

namespace cutpoint {

// Tolerance used by validate() when the caller does not pass one.
template <class T>
constexpr double default_tolerance() {
  return NumTraits<T>::exact ? 0.0 : 1e-12;
}

namespace detail {

inline std::string where(const std::string& what, Symbol s) { return what + " '" + std::string(1, s) + "'"; }

template <class T>
void check_square(std::vector<std::string>& out, const Matrix<T>& m, std::size_t n, const std::string& what) {
  if (m.rows() != n || m.cols() != n) out.push_back(what + " has shape " + m.shape() + ", expected " +
                                                    std::to_string(n) + "x" + std::to_string(n));
}

template <class T>
void check_accept(std::vector<std::string>& out, const std::vector<std::size_t>& accept, std::size_t n) {
  for (auto j : accept) {
    if (j >= n) out.push_back("accept state " + std::to_string(j) + " out of range for " + std::to_string(n) + " states");
  }
}

template <class Model>
void check_transitions_cover_alphabet(std::vector<std::string>& out, const Model& m) {
  for (Symbol s : m.alphabet) {
    if (!m.transitions.contains(s)) out.push_back(where("missing transition for symbol", s));
  }
  for (const auto& [s, unused] : m.transitions) {
    if (!m.alphabet.contains(s)) out.push_back(where("transition for symbol outside the alphabet", s));
  }
}

}  // namespace detail

// ---- structural checks (dimensions, coverage) ------------------------------

template <class T>
std::vector<std::string> structure_violations(const Gfa<T>& g) {
  std::vector<std::string> out;
  const std::size_t n = g.initial.rows();
  if (n == 0 || g.initial.cols() != 1) out.push_back("initial vector has shape " + g.initial.shape());
  if (g.final_row.rows() != 1 || g.final_row.cols() != n) out.push_back("final vector has shape " + g.final_row.shape());
  detail::check_transitions_cover_alphabet(out, g);
  for (const auto& [s, m] : g.transitions) detail::check_square(out, m, n, detail::where("transition", s));
  if (g.left_marker) detail::check_square(out, *g.left_marker, n, "left marker");
  if (g.right_marker) detail::check_square(out, *g.right_marker, n, "right marker");
  return out;
}

template <class T>
std::vector<std::string> structure_violations(const Mcqfa<T>& m) {
  std::vector<std::string> out;
  const std::size_t n = m.initial.rows();
  if (n == 0 || m.initial.cols() != 1) out.push_back("initial state has shape " + m.initial.shape());
  detail::check_transitions_cover_alphabet(out, m);
  for (const auto& [s, u] : m.transitions) detail::check_square(out, u, n, detail::where("unitary", s));
  if (m.left_marker) detail::check_square(out, *m.left_marker, n, "left marker");
  if (m.right_marker) detail::check_square(out, *m.right_marker, n, "right marker");
  detail::check_accept<T>(out, m.accept, n);
  return out;
}

template <class T>
std::vector<std::string> structure_violations(const Qfa<T>& q) {
  std::vector<std::string> out;
  const std::size_t n = q.initial.rows();
  if (n == 0 || !q.initial.is_square()) out.push_back("initial density matrix has shape " + q.initial.shape());
  detail::check_transitions_cover_alphabet(out, q);
  auto check_list = [&](const std::vector<Matrix<T>>& list, const std::string& what) {
    if (list.empty()) out.push_back(what + " has no Kraus elements");
    for (const auto& e : list) detail::check_square(out, e, n, what + " Kraus element");
  };
  for (const auto& [s, list] : q.transitions) check_list(list, detail::where("superoperator", s));
  if (q.left_marker) check_list(*q.left_marker, "left marker");
  if (q.right_marker) check_list(*q.right_marker, "right marker");
  detail::check_accept<T>(out, q.accept, n);
  return out;
}

template <class Model>
void require_well_formed(const Model& m) {
  auto problems = structure_violations(m);
  if (!problems.empty()) throw ValidationError(std::move(problems));
}

// ---- model property checks -------------------------------------------------

template <class T>
std::vector<std::string> validate(const Gfa<T>& g, [[maybe_unused]] double tol = default_tolerance<T>()) {
  return structure_violations(g);
}

template <class T>
std::vector<std::string> validate(const Pfa<T>& p, double tol = default_tolerance<T>()) {
  auto out = structure_violations(p.as_gfa());
  if (!out.empty()) return out;
  auto append = [&](std::vector<std::string> items, const std::string& prefix) {
    for (auto& item : items) out.push_back(prefix + ": " + item);
  };
  for (const auto& [s, m] : p.transitions) append(validate_matrix(MatrixKind::Stochastic, m, tol), detail::where("transition", s));
  if (p.left_marker) append(validate_matrix(MatrixKind::Stochastic, *p.left_marker, tol), "left marker");
  if (p.right_marker) append(validate_matrix(MatrixKind::Stochastic, *p.right_marker, tol), "right marker");
  append(validate_matrix(MatrixKind::Stochastic, p.initial, tol), "initial vector");
  for (std::size_t j = 0; j < p.final_row.cols(); ++j) {
    const T& w = p.final_row(0, j);
    const bool zero = within(w, NumTraits<T>::zero(), tol);
    const bool one = within(w, NumTraits<T>::one(), tol);
    if (!p.right_marker) {
      if (!zero && !one) out.push_back("final vector entry " + std::to_string(j + 1) + " is " + format_value(w) + ", expected 0 or 1");
    } else if (!zero && !one && (w < NumTraits<T>::zero() || w > NumTraits<T>::one())) {
      out.push_back("final vector entry " + std::to_string(j + 1) + " is " + format_value(w) + ", outside [0,1]");
    }
  }
  return out;
}

template <class T>
std::vector<std::string> validate(const Mcqfa<T>& m, double tol = default_tolerance<T>()) {
  auto out = structure_violations(m);
  if (!out.empty()) return out;
  auto append = [&](std::vector<std::string> items, const std::string& prefix) {
    for (auto& item : items) out.push_back(prefix + ": " + item);
  };
  for (const auto& [s, u] : m.transitions) append(validate_matrix(MatrixKind::Unitary, u, tol), detail::where("symbol", s));
  if (m.left_marker) append(validate_matrix(MatrixKind::Unitary, *m.left_marker, tol), "left marker");
  if (m.right_marker) append(validate_matrix(MatrixKind::Unitary, *m.right_marker, tol), "right marker");
  const Matrix<T> norm = adjoint(m.initial) * m.initial;
  if (!within(norm(0, 0), NumTraits<T>::one(), tol)) {
    out.push_back("initial state has squared norm " + format_value(norm(0, 0)) + ", expected 1");
  }
  return out;
}

template <class T>
std::vector<std::string> validate(const Qfa<T>& q, double tol = default_tolerance<T>()) {
  auto out = structure_violations(q);
  if (!out.empty()) return out;
  auto append = [&](std::vector<std::string> items, const std::string& prefix) {
    for (auto& item : items) out.push_back(prefix + ": " + item);
  };
  for (const auto& [s, list] : q.transitions) {
    append(validate_matrix<T>(MatrixKind::KrausSet, list, tol), detail::where("superoperator", s));
  }
  if (q.left_marker) append(validate_matrix<T>(MatrixKind::KrausSet, *q.left_marker, tol), "left marker");
  if (q.right_marker) append(validate_matrix<T>(MatrixKind::KrausSet, *q.right_marker, tol), "right marker");
  append(validate_matrix(MatrixKind::Density, q.initial, tol), "initial state");
  return out;
}

// ---- evaluation ------------------------------------------------------------

template <class T>
Matrix<T> apply_superoperator(const std::vector<Matrix<T>>& kraus, const Matrix<T>& rho) {
  Matrix<T> out(rho.rows(), rho.cols());
  for (const auto& e : kraus) out += e * rho * adjoint(e);
  return out;
}

template <class T>
Matrix<T> initial_object(const Gfa<T>& g) {
  return g.left_marker ? *g.left_marker * g.initial : g.initial;
}
template <class T>
Matrix<T> initial_object(const Mcqfa<T>& m) {
  return m.left_marker ? *m.left_marker * m.initial : m.initial;
}
template <class T>
Matrix<T> initial_object(const Qfa<T>& q) {
  return q.left_marker ? apply_superoperator(*q.left_marker, q.initial) : q.initial;
}

template <class T>
Matrix<T> step(const Gfa<T>& g, const Matrix<T>& state, Symbol s) {
  return g.transitions.at(s) * state;
}
template <class T>
Matrix<T> step(const Mcqfa<T>& m, const Matrix<T>& state, Symbol s) {
  return m.transitions.at(s) * state;
}
template <class T>
Matrix<T> step(const Qfa<T>& q, const Matrix<T>& state, Symbol s) {
  return apply_superoperator(q.transitions.at(s), state);
}

// Accepting value read off a state object (right marker included).
template <class T>
T readout(const Gfa<T>& g, const Matrix<T>& state) {
  const Matrix<T> out = g.right_marker ? g.final_row * (*g.right_marker * state) : g.final_row * state;
  return out(0, 0);
}
template <class T>
typename NumTraits<T>::Real readout(const Mcqfa<T>& m, const Matrix<T>& state) {
  const Matrix<T> v = m.right_marker ? *m.right_marker * state : state;
  typename NumTraits<T>::Real p = 0;
  for (auto j : m.accept) p += NumTraits<T>::abs2(v(j, 0));
  return p;
}
template <class T>
typename NumTraits<T>::Real readout(const Qfa<T>& q, const Matrix<T>& state) {
  const Matrix<T> rho = q.right_marker ? apply_superoperator(*q.right_marker, state) : state;
  typename NumTraits<T>::Real p = 0;
  for (auto j : q.accept) p += NumTraits<T>::real(rho(j, j));
  return p;
}

// State objects after each prefix of word; element 0 is the
// marker-adjusted initial object.
template <class Model>
auto trace_run(const Model& m, std::string_view word) {
  require_well_formed(m);
  m.alphabet.check_word(word);
  std::vector<decltype(initial_object(m))> states;
  states.reserve(word.size() + 1);
  states.push_back(initial_object(m));
  for (Symbol s : word) states.push_back(step(m, states.back(), s));
  return states;
}

template <class Model>
auto value(const Model& m, std::string_view word) {
  require_well_formed(m);
  m.alphabet.check_word(word);
  auto state = initial_object(m);
  for (Symbol s : word) state = step(m, state, s);
  return readout(m, state);
}

// Values on a^0, a^1, ..., a^max_length for a unary automaton, computed
// along one run.
template <class Model>
auto unary_values(const Model& m, std::size_t max_length) {
  require_well_formed(m);
  if (!m.alphabet.is_unary()) throw DomainError("expected a unary automaton");
  const Symbol a = m.alphabet[0];
  auto state = initial_object(m);
  std::vector<decltype(readout(m, state))> values;
  values.reserve(max_length + 1);
  values.push_back(readout(m, state));
  for (std::size_t k = 1; k <= max_length; ++k) {
    state = step(m, state, a);
    values.push_back(readout(m, state));
  }
  return values;
}

}  // namespace cutpoint
