#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cutpoint/automata/alphabet.hpp"
#include "cutpoint/exactmath/rational.hpp"

namespace cutpoint {

// Letter-occurrence counts, in alphabet order.
using ParikhVector = std::vector<std::size_t>;

ParikhVector parikh(const Alphabet& alphabet, std::string_view word);

struct PositiveInfinity {
  friend bool operator==(PositiveInfinity, PositiveInfinity) = default;
};

enum class Relation { Less, Equals };

// Words over `letters` whose Parikh vector x solves (b, x) < alpha (or = alpha).
//
// Exact descriptors store each coefficient as a positive base c_j with
// b_j = log c_j and the threshold as tau with alpha = log tau, so membership
// is decided multiplicatively: prod c_j^{x_j} < tau. Approximate
// descriptors store raw binary64 b_j and alpha.
struct SolutionDescriptor {
  Alphabet letters;
  std::variant<std::vector<Rational>, std::vector<double>> coefficients;
  std::variant<Rational, double, PositiveInfinity> threshold;
  Relation relation = Relation::Less;

  bool is_exact() const noexcept { return coefficients.index() == 0; }
  const std::vector<Rational>& bases() const;  // throws unless exact
  bool threshold_is_infinite() const noexcept { return std::holds_alternative<PositiveInfinity>(threshold); }
};

// Words over `letters` with an even (parity 0) or odd (parity 1) number of
// occurrences of letters from `counted`.
struct ParityDescriptor {
  Alphabet letters;
  Alphabet counted;
  int parity = 0;
};

// Words over `alphabet` containing at least one letter of `letters`.
struct IndicatorDescriptor {
  Alphabet alphabet;
  Alphabet letters;
};

// Sol ∩ Par
struct LambdaForm {
  SolutionDescriptor solution;
  ParityDescriptor parity;
};

// Sol ∪ Par ∪ Ind(Σ, Σ \ X)
struct VForm {
  SolutionDescriptor solution;
  ParityDescriptor parity;
  IndicatorDescriptor indicator;
};

// Sol= ∩ Par
struct InclusiveForm {
  SolutionDescriptor solution;
  ParityDescriptor parity;
};

struct IndicatorOnly {
  IndicatorDescriptor indicator;
};

struct LanguageDescriptor {
  Alphabet alphabet;
  std::variant<LambdaForm, VForm, InclusiveForm, IndicatorOnly> form;
};

const char* form_name(const LanguageDescriptor& d);

// Throws DomainError when an invariant of the descriptor is broken.
void check_descriptor(const SolutionDescriptor& s);
void check_descriptor(const LanguageDescriptor& d);

bool solution_member(const SolutionDescriptor& s, std::string_view word);
bool parity_member(const ParityDescriptor& p, std::string_view word);
bool indicator_member(const IndicatorDescriptor& ind, std::string_view word);

// Membership in the language the descriptor denotes. Throws DomainError for
// letters outside the descriptor's alphabet.
bool desc_member(const LanguageDescriptor& d, std::string_view word);

std::string describe(const SolutionDescriptor& s);
std::string describe(const LanguageDescriptor& d);

}  // namespace cutpoint
