#include "cutpoint/analysis/chomsky.hpp"

#include "cutpoint/exactmath/number_theory.hpp"

namespace cutpoint {

const char* to_string(ChomskyVerdict v) {
  switch (v) {
    case ChomskyVerdict::Regular:
      return "Regular";
    case ChomskyVerdict::ContextFreeNonRegular:
      return "ContextFreeNonRegular";
    case ChomskyVerdict::NonContextFree:
      return "NonContextFree";
  }
  return "?";
}

SolutionDescriptor decimate(const SolutionDescriptor& d) {
  check_descriptor(d);
  SolutionDescriptor out;
  out.threshold = d.threshold;
  out.relation = d.relation;
  std::string kept;
  if (d.is_exact()) {
    std::vector<Rational> bases;
    for (std::size_t j = 0; j < d.letters.size(); ++j) {
      if (d.bases()[j] != 1) {
        kept.push_back(d.letters[j]);
        bases.push_back(d.bases()[j]);
      }
    }
    out.coefficients = std::move(bases);
  } else {
    const auto& b = std::get<std::vector<double>>(d.coefficients);
    std::vector<double> coeffs;
    for (std::size_t j = 0; j < d.letters.size(); ++j) {
      if (b[j] != 0.0) {
        kept.push_back(d.letters[j]);
        coeffs.push_back(b[j]);
      }
    }
    out.coefficients = std::move(coeffs);
  }
  out.letters = Alphabet(kept);
  return out;
}

ChomskyVerdict chomsky_classify(const SolutionDescriptor& d) {
  check_descriptor(d);
  if (!d.is_exact()) throw DomainError("classification needs exact (rational base) coefficients");
  if (d.relation != Relation::Less) throw DomainError("classification is defined for '<' solution languages");
  if (d.threshold_is_infinite()) return ChomskyVerdict::Regular;
  const SolutionDescriptor dec = decimate(d);
  const auto& bases = dec.bases();
  if (logs_same_sign(bases)) return ChomskyVerdict::Regular;
  if (logs_rationally_equivalent(bases)) return ChomskyVerdict::ContextFreeNonRegular;
  return ChomskyVerdict::NonContextFree;
}

ChomskyVerdict chomsky_classify_gfa(const OneStateGfaSpec& s) {
  if (s.mode != OneStateMode::Strict) throw DomainError("classification needs a strict 1-state spec");
  const LanguageDescriptor d = decompose_1state(s);
  if (const auto* f = std::get_if<LambdaForm>(&d.form)) return chomsky_classify(f->solution);
  return chomsky_classify(std::get<VForm>(d.form).solution);
}

}  // namespace cutpoint
