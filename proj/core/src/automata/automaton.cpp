#include "cutpoint/automata/automaton.hpp"

namespace cutpoint {

namespace {

template <class>
struct ModelOf;
template <class T>
struct ModelOf<Gfa<T>> {
  static constexpr Model value = Model::Gfa;
};
template <class T>
struct ModelOf<Pfa<T>> {
  static constexpr Model value = Model::Pfa;
};
template <class T>
struct ModelOf<Mcqfa<T>> {
  static constexpr Model value = Model::Mcqfa;
};
template <class T>
struct ModelOf<Qfa<T>> {
  static constexpr Model value = Model::Qfa;
};

template <class M>
struct FieldOf;
template <template <class> class M, class T>
struct FieldOf<M<T>> {
  using type = T;
};

}  // namespace

const char* to_string(Model model) {
  switch (model) {
    case Model::Gfa:
      return "gfa";
    case Model::Pfa:
      return "pfa";
    case Model::Mcqfa:
      return "mcqfa";
    case Model::Qfa:
      return "qfa";
  }
  return "?";
}

Model Automaton::model() const noexcept {
  return std::visit([](const auto& m) { return ModelOf<std::decay_t<decltype(m)>>::value; }, machine_);
}

bool Automaton::is_exact() const noexcept {
  return std::visit(
      [](const auto& m) { return NumTraits<typename FieldOf<std::decay_t<decltype(m)>>::type>::exact; }, machine_);
}

const Alphabet& Automaton::alphabet() const noexcept {
  return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet; }, machine_);
}

std::size_t Automaton::states() const noexcept {
  return std::visit([](const auto& m) { return m.states(); }, machine_);
}

Scalar value(const Automaton& aut, std::string_view word) {
  return std::visit([&](const auto& m) { return Scalar(value(m, word)); }, aut.variant());
}

std::vector<AnyMatrix> trace_run(const Automaton& aut, std::string_view word) {
  return std::visit(
      [&](const auto& m) {
        auto states = trace_run(m, word);
        return std::vector<AnyMatrix>(std::make_move_iterator(states.begin()), std::make_move_iterator(states.end()));
      },
      aut.variant());
}

std::vector<Scalar> unary_values(const Automaton& aut, std::size_t max_length) {
  return std::visit(
      [&](const auto& m) {
        auto values = unary_values(m, max_length);
        return std::vector<Scalar>(std::make_move_iterator(values.begin()), std::make_move_iterator(values.end()));
      },
      aut.variant());
}

std::vector<std::string> validate(const Automaton& aut, double tol) {
  return std::visit(
      [&](const auto& m) {
        using T = typename FieldOf<std::decay_t<decltype(m)>>::type;
        return validate(m, tol < 0 ? default_tolerance<T>() : tol);
      },
      aut.variant());
}

Scalar value_as_gfa(const Pfa<Rational>& pfa, std::string_view word) { return Scalar(value(pfa.as_gfa(), word)); }

}  // namespace cutpoint
