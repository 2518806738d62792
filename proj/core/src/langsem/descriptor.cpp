#include "cutpoint/langsem/descriptor.hpp"

#include <algorithm>

#include "cutpoint/exactmath/errors.hpp"
#include "cutpoint/exactmath/numeric.hpp"

namespace cutpoint {

namespace {

bool subset_of(const Alphabet& small, const Alphabet& big) {
  return std::all_of(small.begin(), small.end(), [&](Symbol s) { return big.contains(s); });
}

bool same_set(const Alphabet& a, const Alphabet& b) { return a.size() == b.size() && subset_of(a, b); }

bool over(const Alphabet& letters, std::string_view word) {
  return std::all_of(word.begin(), word.end(), [&](Symbol s) { return letters.contains(s); });
}

std::string letters_text(const Alphabet& a) { return "{" + a.symbols() + "}"; }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

ParikhVector parikh(const Alphabet& alphabet, std::string_view word) {
  ParikhVector counts(alphabet.size(), 0);
  for (Symbol s : word) {
    const auto idx = alphabet.index_of(s);
    if (!idx) throw DomainError(std::string("unknown letter '") + s + "'");
    ++counts[*idx];
  }
  return counts;
}

const std::vector<Rational>& SolutionDescriptor::bases() const {
  if (const auto* b = std::get_if<std::vector<Rational>>(&coefficients)) return *b;
  throw DomainError("solution descriptor has approximate coefficients");
}

void check_descriptor(const SolutionDescriptor& s) {
  const std::size_t count = std::visit([](const auto& v) { return v.size(); }, s.coefficients);
  if (count != s.letters.size()) throw DomainError("solution descriptor needs one coefficient per letter");
  if (s.is_exact()) {
    for (const auto& c : s.bases()) {
      if (sgn(c) <= 0) throw DomainError("solution base " + to_string(c) + " is not positive");
    }
    if (std::holds_alternative<double>(s.threshold)) {
      throw DomainError("exact coefficients need an exact (or infinite) threshold");
    }
    if (const auto* tau = std::get_if<Rational>(&s.threshold); tau && sgn(*tau) <= 0) {
      throw DomainError("solution threshold base " + to_string(*tau) + " is not positive");
    }
  } else if (std::holds_alternative<Rational>(s.threshold)) {
    throw DomainError("approximate coefficients need a binary64 (or infinite) threshold");
  }
  if (s.relation == Relation::Equals && s.threshold_is_infinite()) {
    throw DomainError("an equality solution language needs a finite threshold");
  }
}

void check_descriptor(const LanguageDescriptor& d) {
  auto check_sol_par = [&](const SolutionDescriptor& sol, const ParityDescriptor& par, Relation want) {
    check_descriptor(sol);
    if (sol.relation != want) {
      throw DomainError(want == Relation::Less ? "form needs a '<' solution component"
                                               : "form needs an '=' solution component");
    }
    if (!same_set(sol.letters, par.letters)) throw DomainError("solution and parity components need the same X");
    if (!subset_of(par.counted, par.letters)) throw DomainError("parity letters Y must be a subset of X");
    if (!subset_of(par.letters, d.alphabet)) throw DomainError("X must be a subset of the alphabet");
    if (par.parity != 0 && par.parity != 1) throw DomainError("parity bit must be 0 or 1");
  };
  std::visit(Overloaded{
                 [&](const LambdaForm& f) { check_sol_par(f.solution, f.parity, Relation::Less); },
                 [&](const VForm& f) {
                   check_sol_par(f.solution, f.parity, Relation::Less);
                   if (f.solution.threshold_is_infinite()) throw DomainError("V-form needs a finite threshold");
                   if (!same_set(f.indicator.alphabet, d.alphabet)) throw DomainError("indicator must range over the alphabet");
                   for (Symbol s : d.alphabet) {
                     if (f.indicator.letters.contains(s) == f.parity.letters.contains(s)) {
                       throw DomainError("V-form indicator letters must be exactly the alphabet minus X");
                     }
                   }
                 },
                 [&](const InclusiveForm& f) { check_sol_par(f.solution, f.parity, Relation::Equals); },
                 [&](const IndicatorOnly& f) {
                   if (!same_set(f.indicator.alphabet, d.alphabet)) throw DomainError("indicator must range over the alphabet");
                   if (!subset_of(f.indicator.letters, d.alphabet)) throw DomainError("indicator letters outside the alphabet");
                 },
             },
             d.form);
}

bool solution_member(const SolutionDescriptor& s, std::string_view word) {
  if (!over(s.letters, word)) return false;
  const ParikhVector x = parikh(s.letters, word);
  if (s.is_exact()) {
    if (s.threshold_is_infinite()) return true;
    const auto& bases = s.bases();
    Rational product = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] != 0) product *= rational_pow(bases[j], x[j]);
    }
    const Rational& tau = std::get<Rational>(s.threshold);
    return s.relation == Relation::Less ? product < tau : product == tau;
  }
  const auto& b = std::get<std::vector<double>>(s.coefficients);
  if (s.threshold_is_infinite()) return true;
  double lhs = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) lhs += b[j] * static_cast<double>(x[j]);
  const double alpha = std::get<double>(s.threshold);
  return s.relation == Relation::Less ? lhs < alpha : lhs == alpha;
}

bool parity_member(const ParityDescriptor& p, std::string_view word) {
  if (!over(p.letters, word)) return false;
  const auto hits = std::count_if(word.begin(), word.end(), [&](Symbol s) { return p.counted.contains(s); });
  return static_cast<int>(hits % 2) == p.parity;
}

bool indicator_member(const IndicatorDescriptor& ind, std::string_view word) {
  return std::any_of(word.begin(), word.end(), [&](Symbol s) { return ind.letters.contains(s); });
}

bool desc_member(const LanguageDescriptor& d, std::string_view word) {
  d.alphabet.check_word(word);
  return std::visit(Overloaded{
                        [&](const LambdaForm& f) {
                          return parity_member(f.parity, word) && solution_member(f.solution, word);
                        },
                        [&](const VForm& f) {
                          return indicator_member(f.indicator, word) || parity_member(f.parity, word) ||
                                 solution_member(f.solution, word);
                        },
                        [&](const InclusiveForm& f) {
                          return parity_member(f.parity, word) && solution_member(f.solution, word);
                        },
                        [&](const IndicatorOnly& f) { return indicator_member(f.indicator, word); },
                    },
                    d.form);
}

const char* form_name(const LanguageDescriptor& d) {
  static constexpr const char* names[] = {"lambda", "v", "inclusive", "indicator"};
  return names[d.form.index()];
}

std::string describe(const SolutionDescriptor& s) {
  std::string out = s.relation == Relation::Less ? "Sol(" : "Sol=(";
  out += letters_text(s.letters);
  for (std::size_t j = 0; j < s.letters.size(); ++j) {
    out += std::string(", ") + s.letters[j] + ":";
    if (s.is_exact()) {
      out += "log " + to_string(s.bases()[j]);
    } else {
      out += format_value(std::get<std::vector<double>>(s.coefficients)[j]);
    }
  }
  out += "; ";
  std::visit(Overloaded{
                 [&](const Rational& tau) { out += "log " + to_string(tau); },
                 [&](double alpha) { out += format_value(alpha); },
                 [&](PositiveInfinity) { out += "+inf"; },
             },
             s.threshold);
  return out + ")";
}

std::string describe(const LanguageDescriptor& d) {
  auto par = [](const ParityDescriptor& p) {
    return "Par(" + letters_text(p.letters) + ", " + letters_text(p.counted) + ", " + std::to_string(p.parity) + ")";
  };
  auto ind = [](const IndicatorDescriptor& i) {
    return "Ind(" + letters_text(i.alphabet) + ", " + letters_text(i.letters) + ")";
  };
  return std::visit(Overloaded{
                        [&](const LambdaForm& f) { return describe(f.solution) + " ∩ " + par(f.parity); },
                        [&](const VForm& f) {
                          return describe(f.solution) + " ∪ " + par(f.parity) + " ∪ " + ind(f.indicator);
                        },
                        [&](const InclusiveForm& f) { return describe(f.solution) + " ∩ " + par(f.parity); },
                        [&](const IndicatorOnly& f) { return ind(f.indicator); },
                    },
                    d.form);
}

}  // namespace cutpoint
