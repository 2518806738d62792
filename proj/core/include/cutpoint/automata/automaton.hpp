#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cutpoint/automata/evaluate.hpp"
#include "cutpoint/exactmath/scalar.hpp"

namespace cutpoint {

enum class Model { Gfa, Pfa, Mcqfa, Qfa };

const char* to_string(Model model);

// Matrix over any supported scalar field.
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<GaussianRational>, Matrix<double>, Matrix<Complex>>;

// Any of the four machine models over an exact or a binary64 field. Real
// models (GFA, PFA) use Rational or double; quantum models use
// GaussianRational or complex<double>.
class Automaton {
 public:
  using Variant = std::variant<Gfa<Rational>, Gfa<double>, Pfa<Rational>, Pfa<double>, Mcqfa<GaussianRational>,
                               Mcqfa<Complex>, Qfa<GaussianRational>, Qfa<Complex>>;

  template <class M>
    requires std::is_constructible_v<Variant, M>
  Automaton(M machine) : machine_(std::move(machine)) {}  // NOLINT: implicit wrapping of any model

  const Variant& variant() const noexcept { return machine_; }

  template <class M>
  const M* get_if() const noexcept {
    return std::get_if<M>(&machine_);
  }

  Model model() const noexcept;
  bool is_exact() const noexcept;
  const Alphabet& alphabet() const noexcept;
  std::size_t states() const noexcept;

 private:
  Variant machine_;
};

// Accepting value (probability for PFA/QFA/MCQFA) of word. Exact automata
// give ExactReal scalars, binary64 automata ApproxReal ones.
Scalar value(const Automaton& aut, std::string_view word);

std::vector<AnyMatrix> trace_run(const Automaton& aut, std::string_view word);

// Values on a^0 .. a^max_length; the automaton must be unary.
std::vector<Scalar> unary_values(const Automaton& aut, std::size_t max_length);

// Structural and model-specific violations; tol < 0 selects the model's
// default (0 for exact fields, 1e-12 for binary64).
std::vector<std::string> validate(const Automaton& aut, double tol = -1.0);

// value() computed as if the automaton were the GFA underlying a PFA.
Scalar value_as_gfa(const Pfa<Rational>& pfa, std::string_view word);

}  // namespace cutpoint
