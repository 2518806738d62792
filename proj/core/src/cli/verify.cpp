#include "cutpoint/cli/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cutpoint/analysis/chomsky.hpp"
#include "cutpoint/analysis/witness.hpp"
#include "cutpoint/constructions/one_state_gfa.hpp"
#include "cutpoint/constructions/px.hpp"
#include "cutpoint/constructions/quantum.hpp"
#include "cutpoint/constructions/rotation.hpp"
#include "cutpoint/constructions/two_state_pfa.hpp"
#include "cutpoint/exactmath/number_theory.hpp"

namespace cutpoint {

namespace {

using Rng = std::mt19937_64;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Rational random_rational(Rng& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
  return make_rational(num_dist(rng), den);
}

// Uniform rational in [0, 1] with small denominator; endpoints are common.
Rational random_unit(Rng& rng, long max_den) { return random_rational(rng, 0, 1, max_den); }

std::vector<std::string> all_words(const std::string& letters, std::size_t max_length) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : letters) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

const std::vector<Rational>& px_grid() {
  static const std::vector<Rational> xs = {make_rational(1, 10), make_rational(1, 5),  make_rational(1, 4),
                                           make_rational(3, 10), make_rational(2, 5), make_rational(1, 2)};
  return xs;
}

Outcome check_px_initial() {
  Outcome out;
  for (const auto& x : px_grid()) {
    const auto v = unary_values(Automaton(px(x)), 2);
    if (v[0].rational() != 0 || v[1].rational() != 0 || v[2].rational() != 1) {
      out.fail("x=" + to_string(x) + ": values " + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string());
    }
  }
  return out;
}

Outcome check_px_closed() {
  Outcome out;
  double worst = 0;
  for (const auto& x : px_grid()) {
    const PxParams params = px_params(x);
    const auto v = unary_values(Automaton(px(x)), 300);
    for (std::size_t m = 0; m <= 300; ++m) {
      const double diff = std::abs(px_closed(params, m) - to_double(v[m].rational()));
      worst = std::max(worst, diff);
      if (diff > 1e-9) out.fail("x=" + to_string(x) + ", m=" + std::to_string(m) + ": |diff| = " + std::to_string(diff));
    }
  }
  if (out.ok) {
    std::ostringstream s;
    s << "max |diff| = " << worst;
    out.detail = s.str();
  }
  return out;
}

Outcome check_rotation_recurrence() {
  Outcome out;
  for (const PythTriple t : {PythTriple{2, 1}, PythTriple{3, 2}}) {
    const auto p = chebyshev_numerators(t, 10000);
    const Matrix<Integer> r = scaled_rotation_matrix(t);
    for (unsigned long k = 0; k <= 10000; ++k) {
      if (mat_pow(r, k)(0, 0) != p[k]) {
        out.fail("triple (" + std::to_string(t.m) + "," + std::to_string(t.n) + ") differs at k=" + std::to_string(k));
        break;
      }
    }
  }
  return out;
}

Outcome check_aperiodicity() {
  Outcome out;
  if (!aperiodicity_check(rotation(PythTriple{2, 1}, RotationModel::Gfa), 2000)) out.fail("repeated value for k <= 2000");
  return out;
}

Outcome check_density() {
  Outcome out;
  const DensityReport r = density_report(PythTriple{2, 1}, 100, 50000);
  std::size_t last = 0;
  for (const auto& hit : r.first_hit) last = std::max(last, hit.value_or(0));
  if (r.misses() != 0) out.fail(std::to_string(r.misses()) + " of 100 bins missed");
  if (out.ok) out.detail = "all bins hit by k = " + std::to_string(last);
  return out;
}

Outcome check_rotation_separation() {
  Outcome out;
  const Automaton r = rotation(PythTriple{2, 1}, RotationModel::Gfa);
  const auto w = separate(r, {make_rational(1, 10), CutMode::Strict}, r, {make_rational(1, 5), CutMode::Strict}, 100);
  if (!w) {
    out.fail("no separating length <= 100");
  } else if (w->m != 12 || w->value_a.rational() != make_rational(32125393, 244140625)) {
    out.fail("m=" + std::to_string(w->m) + ", value " + w->value_a.to_string());
  } else {
    out.detail = "m=12, value 32125393/244140625";
  }
  return out;
}

Outcome check_px_separation() {
  Outcome out;
  const PxSeparation s = px_separation(make_rational(1, 4), make_rational(1, 2));
  if (s.candidate != 12 || !s.witness || s.witness->m != 12 || s.witness->member_a || !s.witness->member_b) {
    out.fail("(1/4, 1/2): candidate " + std::to_string(s.candidate));
  }
  Rng rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    Rational x1, x2;
    do {
      x1 = random_rational(rng, 0, 1, 20) / 2;
      x2 = random_rational(rng, 0, 1, 20) / 2;
    } while (x1 == 0 || x2 == 0 || x1 == x2);
    if (x1 > x2) std::swap(x1, x2);
    const PxSeparation r = px_separation(x1, x2);
    if (r.anomaly || !r.witness) out.fail("(" + to_string(x1) + ", " + to_string(x2) + "): no witness at m or m+1");
  }
  return out;
}

Pfa<Rational> random_2state_pfa(Rng& rng, bool markers) {
  auto stochastic = [&] {
    const Rational x = random_unit(rng, 8);
    const Rational y = random_unit(rng, 8);
    return Matrix<Rational>{{Rational(1 - x), y}, {x, Rational(1 - y)}};
  };
  Gfa<Rational> g;
  g.alphabet = Alphabet("a");
  g.transitions.emplace('a', stochastic());
  const Rational p = random_unit(rng, 8);
  g.initial = Matrix<Rational>::column({p, Rational(1 - p)});
  if (markers) {
    g.left_marker = stochastic();
    g.right_marker = stochastic();
    g.final_row = Matrix<Rational>::row({random_unit(rng, 8), random_unit(rng, 8)});
  } else {
    std::uniform_int_distribution<int> bit(0, 1);
    g.final_row = Matrix<Rational>::row({Rational(bit(rng)), Rational(bit(rng))});
  }
  return Pfa<Rational>(std::move(g));
}

Outcome check_two_state() {
  Outcome out;
  Rng rng(kSeed + 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Pfa<Rational> p = random_2state_pfa(rng, trial % 2 == 1);
    Rational lambda;
    do {
      lambda = random_unit(rng, 12);
    } while (lambda >= 1);
    const UnaryRegularName name = classify_2state_pfa(p, lambda);
    const auto values = unary_values(Automaton(p), 200);
    for (std::size_t m = 0; m <= 200; ++m) {
      if (name.contains(m) != (values[m].rational() > lambda)) {
        out.fail("trial " + std::to_string(trial) + ": " + name.to_string() + " wrong at m=" + std::to_string(m));
        break;
      }
    }
  }
  return out;
}

OneStateGfaSpec random_spec(Rng& rng, const std::string& letters, OneStateMode mode) {
  OneStateGfaSpec s;
  s.alphabet = Alphabet(letters);
  std::uniform_int_distribution<int> coin(0, 5);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    s.numbers.push_back(coin(rng) == 0 ? Rational(0) : random_rational(rng, -4, 4, 4));
  }
  s.cutpoint = coin(rng) == 0 ? Rational(0) : random_rational(rng, -2, 2, 4);
  s.direction = coin(rng) % 2 == 0 ? Direction::Less : Direction::Greater;
  s.mode = mode;
  return s;
}

Alphabet random_subset(Rng& rng, const Alphabet& of) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::string out;
  for (Symbol s : of) {
    if (bit(rng)) out.push_back(s);
  }
  return Alphabet(out);
}

LanguageDescriptor random_descriptor(Rng& rng, const Alphabet& sigma) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  const Alphabet x = random_subset(rng, sigma);
  const Alphabet y = random_subset(rng, x);
  std::vector<Rational> bases;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational c;
    do {
      c = random_rational(rng, 0, 4, 4);
    } while (c == 0);
    bases.push_back(c);
  }
  Rational tau;
  do {
    tau = random_rational(rng, 0, 4, 4);
  } while (tau == 0);
  SolutionDescriptor sol{x, bases, tau, Relation::Less};
  const ParityDescriptor par{x, y, bit(rng)};
  std::string rest;
  for (Symbol s : sigma) {
    if (!x.contains(s)) rest.push_back(s);
  }
  switch (pick(rng)) {
    case 0:
      if (bit(rng)) sol.threshold = PositiveInfinity{};
      return {sigma, LambdaForm{sol, par}};
    case 1:
      return {sigma, VForm{sol, par, IndicatorDescriptor{sigma, Alphabet(rest)}}};
    default:
      sol.relation = Relation::Equals;
      return {sigma, InclusiveForm{sol, par}};
  }
}

Outcome check_one_state_round_trips() {
  Outcome out;
  Rng rng(kSeed + 9);
  const auto words = all_words("abc", 8);
  for (int trial = 0; trial < 200 && out.ok; ++trial) {
    const OneStateGfaSpec s = random_spec(rng, "abc", OneStateMode::Strict);
    const LanguageDescriptor d = decompose_1state(s);
    for (const auto& w : words) {
      if (desc_member(d, w) != one_state_accepts(s, w)) {
        out.fail("spec " + std::to_string(trial) + " disagrees on '" + w + "'");
        break;
      }
    }
  }
  const Alphabet sigma("abc");
  for (int trial = 0; trial < 100 && out.ok; ++trial) {
    const LanguageDescriptor d = random_descriptor(rng, sigma);
    const LanguageDescriptor back = decompose_1state(build_1state(d));
    for (const auto& w : words) {
      if (desc_member(d, w) != desc_member(back, w)) {
        out.fail("descriptor " + std::to_string(trial) + " (" + describe(d) + ") disagrees on '" + w + "'");
        break;
      }
    }
  }
  return out;
}

bool is_unary_inclusive_shape(const std::string& bits) {
  auto all = [&](auto pred) {
    for (std::size_t m = 0; m < bits.size(); ++m) {
      if ((bits[m] == '1') != pred(m)) return false;
    }
    return true;
  };
  if (all([](std::size_t) { return false; }) || all([](std::size_t) { return true; }) ||
      all([](std::size_t m) { return m > 0; }) || all([](std::size_t m) { return m % 2 == 0; }) ||
      all([](std::size_t m) { return m % 2 == 1; })) {
    return true;
  }
  for (std::size_t n = 0; n < bits.size(); ++n) {
    if (all([n](std::size_t m) { return m == n; })) return true;
  }
  return false;
}

Outcome check_one_state_unary() {
  Outcome out;
  Rng rng(kSeed + 10);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<unsigned long> power(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    OneStateGfaSpec s = random_spec(rng, "a", OneStateMode::Inclusive);
    // Aim the cutpoint at an attained value a third of the time.
    if (coin(rng) == 0) s.cutpoint = rational_pow(s.numbers[0], power(rng));
    const LanguageDescriptor d = decompose_1state(s);
    std::string bits;
    for (std::size_t m = 0; m <= 64; ++m) {
      const std::string w(m, 'a');
      const bool member = desc_member(d, w);
      if (member != one_state_accepts(s, w)) out.fail("spec " + std::to_string(trial) + " disagrees at m=" + std::to_string(m));
      bits.push_back(member ? '1' : '0');
    }
    if (!is_unary_inclusive_shape(bits)) out.fail("spec " + std::to_string(trial) + " gives unexpected language " + bits);
  }
  return out;
}

Outcome check_exclusive_to_zero() {
  Outcome out;
  const PythTriple t{2, 1};
  const Automaton mc = rotation(t, RotationModel::Mcqfa);
  const auto cosines = rotation_values(t, 2000);
  double worst = 0;
  for (const Rational& lambda : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
    const TransformResult built = exclusive_to_zero(mc, Scalar(lambda));
    const auto simulated = unary_values(built.machine, 100);
    for (std::size_t k = 0; k <= 2000; ++k) {
      const Rational f = cosines[k] * cosines[k];
      const Rational symbolic = exclusive_to_zero_value(f, lambda, 1);
      if ((symbolic == 0) != (f == lambda)) out.fail("symbolic zero mismatch at k=" + std::to_string(k));
      if (symbolic == 0) out.fail("cos^2 equals " + to_string(lambda) + " at k=" + std::to_string(k));
      if (k <= 100) {
        const double diff = std::abs(simulated[k].real_double() - to_double(symbolic));
        worst = std::max(worst, diff);
        if (diff > 1e-9) out.fail("lambda=" + to_string(lambda) + ", k=" + std::to_string(k) + ": simulation off by " + std::to_string(diff));
      }
    }
  }
  if (out.ok) {
    std::ostringstream s;
    s << "max |diff| = " << worst;
    out.detail = s.str();
  }
  return out;
}

SolutionDescriptor exact_solution(const std::string& letters, std::vector<Rational> bases, Rational tau) {
  return SolutionDescriptor{Alphabet(letters), std::move(bases), std::move(tau), Relation::Less};
}

Outcome check_chomsky() {
  Outcome out;
  const struct {
    Rational a, b;
    ChomskyVerdict want;
  } fixed[] = {{make_rational(1, 2), Rational(2), ChomskyVerdict::ContextFreeNonRegular},
               {Rational(2), Rational(3), ChomskyVerdict::Regular},
               {Rational(2), make_rational(1, 3), ChomskyVerdict::NonContextFree}};
  for (const auto& f : fixed) {
    const ChomskyVerdict got = chomsky_classify(exact_solution("ab", {f.a, f.b}, Rational(1)));
    if (got != f.want) out.fail("(" + to_string(f.a) + ", " + to_string(f.b) + ") -> " + to_string(got));
  }
  Rng rng(kSeed + 12);
  const std::vector<Rational> pool = {Rational(1), Rational(2), Rational(3), Rational(4), make_rational(1, 2),
                                      make_rational(1, 3), make_rational(2, 3), make_rational(9, 4), Rational(6)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long> exp_num(1, 4);
  std::uniform_int_distribution<unsigned long> exp_den(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    std::string letters = "abcd";
    for (char c : letters) {
      (void)c;
      roots.push_back(pool[pick(rng)]);
    }
    const Rational tau_root = pool[pick(rng)];
    // Bases are r-th powers so that the p/r rescaling stays rational.
    const unsigned long r = exp_den(rng);
    const long p = exp_num(rng);
    std::vector<Rational> bases, scaled;
    for (const auto& root : roots) {
      bases.push_back(rational_pow(root, r));
      scaled.push_back(rational_pow(root, static_cast<unsigned long>(p)));
    }
    const SolutionDescriptor d = exact_solution(letters, bases, rational_pow(tau_root, r));
    const SolutionDescriptor q = exact_solution(letters, scaled, rational_pow(tau_root, static_cast<unsigned long>(p)));
    const ChomskyVerdict v = chomsky_classify(d);
    if (chomsky_classify(decimate(d)) != v) out.fail("decimation changed the verdict of " + describe(d));
    if (chomsky_classify(q) != v) out.fail("rescaling changed the verdict of " + describe(d));
  }
  return out;
}

Outcome check_modn() {
  Outcome out;
  for (unsigned long n = 2; n <= 8; ++n) {
    const std::string bits = enum_unary(modn_mcqfa(n), {Rational(1), CutMode::Inclusive}, 100, 1e-6);
    for (std::size_t k = 0; k <= 100; ++k) {
      if ((bits[k] == '1') != (k % n == 0)) {
        out.fail("n=" + std::to_string(n) + " wrong at k=" + std::to_string(k));
        break;
      }
    }
  }
  return out;
}

struct CheckSpec {
  const char* title;
  double limit;
  std::function<Outcome()> run;
};

const std::vector<CheckSpec>& checks() {
  static const std::vector<CheckSpec> table = {
      {"P_x initial values f(a^0)=f(a^1)=0, f(a^2)=1", 1, check_px_initial},
      {"P_x closed form within 1e-9 of exact values, m <= 300", 5, check_px_closed},
      {"rotation Chebyshev recurrence equals mat_pow entry, k <= 10^4", 10, check_rotation_recurrence},
      {"rotation (2,1) values pairwise distinct, k <= 2000", 5, check_aperiodicity},
      {"rotation (2,1) hits all 100 bins of [-1,1], k <= 50000", 30, check_density},
      {"rotation cutpoints 1/10 and 1/5 separate at m = 12", 1, check_rotation_separation},
      {"P_x separation at the predicted length", 30, check_px_separation},
      {"2-state PFA classifier agrees with exact values, m <= 200", 60, check_two_state},
      {"1-state GFA decomposition and build round trips", 120, check_one_state_round_trips},
      {"unary 1-state inclusive languages have the expected shapes", 10, check_one_state_unary},
      {"exclusive-to-zero transform matches its closed value", 30, check_exclusive_to_zero},
      {"solution language classification and its invariances", 5, check_chomsky},
      {"mod-n machines accept exactly the multiples of n", 5, check_modn},
  };
  return table;
}

}  // namespace

std::vector<int> suite_checks(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  if (suite == "rotation") return {3, 4, 5, 6};
  if (suite == "px") return {1, 2, 7, 8};
  if (suite == "onestate") return {9, 10, 12};
  if (suite == "mcqfa") return {11, 13};
  throw DomainError("unknown suite '" + suite + "' (all, rotation, px, onestate, mcqfa)");
}

CheckResult run_check(int id) {
  const auto& table = checks();
  if (id < 1 || id > static_cast<int>(table.size())) throw DomainError("no check numbered " + std::to_string(id));
  const CheckSpec& spec = table[id - 1];
  CheckResult result;
  result.id = id;
  result.title = spec.title;
  result.limit_seconds = spec.limit;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = spec.run();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = outcome.ok && result.seconds <= spec.limit;
  result.detail = outcome.detail;
  if (outcome.ok && result.seconds > spec.limit) result.detail = "exceeded the time limit";
  return result;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  for (int id : suite_checks(suite)) out.push_back(run_check(id));
  return out;
}

}  // namespace cutpoint
