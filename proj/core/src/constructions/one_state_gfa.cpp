#include "cutpoint/constructions/one_state_gfa.hpp"

#include "cutpoint/automata/evaluate.hpp"

namespace cutpoint {

namespace {

struct Split {
  Alphabet x;                 // nonzero numbers
  Alphabet y;                 // negative numbers
  Alphabet zero;              // Σ \ X
  std::vector<Rational> abs;  // |A_j| for j in X
};

Split split(const OneStateGfaSpec& s) {
  std::string x, y, zero;
  Split out;
  for (std::size_t j = 0; j < s.alphabet.size(); ++j) {
    const Symbol letter = s.alphabet[j];
    const Rational& a = s.numbers[j];
    if (sgn(a) == 0) {
      zero.push_back(letter);
      continue;
    }
    x.push_back(letter);
    if (sgn(a) < 0) y.push_back(letter);
    out.abs.push_back(abs(a));
  }
  out.x = Alphabet(x);
  out.y = Alphabet(y);
  out.zero = Alphabet(zero);
  return out;
}

std::vector<Rational> inverted(const std::vector<Rational>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(1 / v);
  return out;
}

SolutionDescriptor solution(const Alphabet& x, std::vector<Rational> bases, const Rational& magnitude,
                            bool inverse, Relation relation = Relation::Less) {
  SolutionDescriptor sol;
  sol.letters = x;
  sol.relation = relation;
  if (inverse) {
    sol.coefficients = inverted(bases);
    if (sgn(magnitude) == 0) {
      sol.threshold = PositiveInfinity{};
    } else {
      sol.threshold = Rational(1 / magnitude);
    }
  } else {
    sol.coefficients = std::move(bases);
    sol.threshold = magnitude;
  }
  return sol;
}

LanguageDescriptor empty_language(const Alphabet& sigma) {
  return LanguageDescriptor{sigma, IndicatorOnly{IndicatorDescriptor{sigma, Alphabet()}}};
}

LanguageDescriptor full_language(const Alphabet& sigma) {
  SolutionDescriptor sol;
  sol.coefficients = std::vector<Rational>{};
  sol.threshold = Rational(2);
  return LanguageDescriptor{sigma, VForm{sol, ParityDescriptor{}, IndicatorDescriptor{sigma, sigma}}};
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::Less ? "lt" : "gt"; }
const char* to_string(OneStateMode m) { return m == OneStateMode::Strict ? "strict" : "inclusive"; }

void check_spec(const OneStateGfaSpec& s) {
  if (s.numbers.size() != s.alphabet.size()) {
    throw DimensionError("1-state spec needs one number per letter: " + std::to_string(s.alphabet.size()) +
                         " letters, " + std::to_string(s.numbers.size()) + " numbers");
  }
}

Rational one_state_value(const OneStateGfaSpec& s, std::string_view word) {
  check_spec(s);
  const ParikhVector x = parikh(s.alphabet, word);
  Rational product = 1;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) product *= rational_pow(s.numbers[j], x[j]);
  }
  return product;
}

bool one_state_accepts(const OneStateGfaSpec& s, std::string_view word) {
  const Rational v = one_state_value(s, word);
  if (s.mode == OneStateMode::Inclusive) return v == s.cutpoint;
  return s.direction == Direction::Less ? v < s.cutpoint : v > s.cutpoint;
}

Gfa<Rational> to_gfa(const OneStateGfaSpec& s) {
  check_spec(s);
  Gfa<Rational> g;
  g.alphabet = s.alphabet;
  for (std::size_t j = 0; j < s.alphabet.size(); ++j) {
    g.transitions.emplace(s.alphabet[j], Matrix<Rational>(1, 1, {s.numbers[j]}));
  }
  g.initial = Matrix<Rational>(1, 1, {Rational(1)});
  g.final_row = Matrix<Rational>(1, 1, {Rational(1)});
  return g;
}

LanguageDescriptor decompose_1state(const OneStateGfaSpec& s) {
  check_spec(s);
  const Split sp = split(s);
  const Alphabet& sigma = s.alphabet;
  const Rational& lambda = s.cutpoint;
  const Rational magnitude = abs(lambda);
  const int lsign = sgn(lambda);

  if (s.mode == OneStateMode::Inclusive) {
    if (lsign == 0) return LanguageDescriptor{sigma, IndicatorOnly{IndicatorDescriptor{sigma, sp.zero}}};
    return LanguageDescriptor{
        sigma, InclusiveForm{solution(sp.x, sp.abs, magnitude, false, Relation::Equals),
                             ParityDescriptor{sp.x, sp.y, lsign < 0 ? 1 : 0}}};
  }

  const bool less = s.direction == Direction::Less;
  // Below a nonpositive cutpoint (or above a nonnegative one) the product
  // must be nonzero with a fixed sign and a large enough magnitude.
  if ((less && lsign <= 0) || (!less && lsign >= 0)) {
    return LanguageDescriptor{
        sigma, LambdaForm{solution(sp.x, sp.abs, magnitude, true), ParityDescriptor{sp.x, sp.y, less ? 1 : 0}}};
  }
  return LanguageDescriptor{sigma, VForm{solution(sp.x, sp.abs, magnitude, false),
                                         ParityDescriptor{sp.x, sp.y, less ? 1 : 0},
                                         IndicatorDescriptor{sigma, sp.zero}}};
}

OneStateGfaSpec build_1state(const LanguageDescriptor& d) {
  check_descriptor(d);
  OneStateGfaSpec s;
  s.alphabet = d.alphabet;
  s.numbers.assign(d.alphabet.size(), Rational(0));

  auto fill = [&](const SolutionDescriptor& sol, const ParityDescriptor& par, bool inverse) {
    if (!sol.is_exact()) throw DomainError("cannot build a 1-state GFA from approximate coefficients");
    const auto& bases = sol.bases();
    for (std::size_t j = 0; j < sol.letters.size(); ++j) {
      const Symbol letter = sol.letters[j];
      Rational a = inverse ? Rational(1 / bases[j]) : bases[j];
      if (par.counted.contains(letter)) a = -a;
      s.numbers[*d.alphabet.index_of(letter)] = a;
    }
  };

  if (const auto* f = std::get_if<LambdaForm>(&d.form)) {
    fill(f->solution, f->parity, true);
    const Rational magnitude =
        f->solution.threshold_is_infinite() ? Rational(0) : Rational(1 / std::get<Rational>(f->solution.threshold));
    if (f->parity.parity == 1) {
      s.cutpoint = -magnitude;
      s.direction = Direction::Less;
    } else {
      s.cutpoint = magnitude;
      s.direction = Direction::Greater;
    }
  } else if (const auto* f = std::get_if<VForm>(&d.form)) {
    fill(f->solution, f->parity, false);
    const Rational& tau = std::get<Rational>(f->solution.threshold);
    if (f->parity.parity == 1) {
      s.cutpoint = tau;
      s.direction = Direction::Less;
    } else {
      s.cutpoint = -tau;
      s.direction = Direction::Greater;
    }
  } else if (const auto* f = std::get_if<InclusiveForm>(&d.form)) {
    fill(f->solution, f->parity, false);
    const Rational& tau = std::get<Rational>(f->solution.threshold);
    s.cutpoint = f->parity.parity == 1 ? Rational(-tau) : tau;
    s.mode = OneStateMode::Inclusive;
  } else {
    const auto& ind = std::get<IndicatorOnly>(d.form).indicator;
    for (std::size_t j = 0; j < d.alphabet.size(); ++j) {
      s.numbers[j] = ind.letters.contains(d.alphabet[j]) ? 0 : 1;
    }
    s.cutpoint = 0;
    s.mode = OneStateMode::Inclusive;
  }
  return s;
}

OneStateGfaSpec normalize_1state_gfa(const Gfa<Rational>& g, const CutpointSpec& cp) {
  require_well_formed(g);
  if (g.states() != 1) throw DomainError("expected a 1-state GFA, got " + std::to_string(g.states()) + " states");
  if (cp.mode == CutMode::Exclusive) throw DomainError("exclusive cutpoints are not supported for 1-state GFAs");
  if (cp.value.kind() != Scalar::Kind::ExactReal) throw DomainError("1-state decomposition needs an exact rational cutpoint");
  const Rational lambda = cp.value.rational();

  Rational k = (g.final_row * initial_object(g))(0, 0);
  if (g.right_marker) k *= (*g.right_marker)(0, 0);

  OneStateGfaSpec s;
  s.alphabet = g.alphabet;
  for (Symbol letter : g.alphabet) s.numbers.push_back(g.transitions.at(letter)(0, 0));
  s.mode = cp.mode == CutMode::Strict ? OneStateMode::Strict : OneStateMode::Inclusive;
  s.direction = sgn(k) < 0 ? Direction::Less : Direction::Greater;
  s.cutpoint = sgn(k) == 0 ? Rational(0) : Rational(lambda / k);
  return s;
}

LanguageDescriptor decompose_1state_gfa(const Gfa<Rational>& g, const CutpointSpec& cp) {
  OneStateGfaSpec s = normalize_1state_gfa(g, cp);
  Rational k = (g.final_row * initial_object(g))(0, 0);
  if (g.right_marker) k *= (*g.right_marker)(0, 0);
  if (sgn(k) == 0) {
    // The value is identically 0.
    const Rational lambda = cp.value.rational();
    const bool all = cp.mode == CutMode::Strict ? sgn(lambda) < 0 : sgn(lambda) == 0;
    return all ? full_language(g.alphabet) : empty_language(g.alphabet);
  }
  return decompose_1state(s);
}

}  // namespace cutpoint
