#include "cutpoint/constructions/two_state_pfa.hpp"

#include <array>
#include <vector>

#include "cutpoint/automata/evaluate.hpp"

namespace cutpoint {

namespace {

using Kind = UnaryRegularName::Kind;

bool pattern_bit(const std::string& prefix, bool tail_even, bool tail_odd, std::size_t m) {
  if (m < prefix.size()) return prefix[m] == '1';
  return m % 2 == 0 ? tail_even : tail_odd;
}

}  // namespace

const char* to_string(TwoStateCase c) {
  switch (c) {
    case TwoStateCase::Identity:
      return "identity";
    case TwoStateCase::Alternating:
      return "alternating";
    case TwoStateCase::ConstantF:
      return "constant-f";
    case TwoStateCase::XySumOne:
      return "xy-sum-one";
    case TwoStateCase::Monotone:
      return "monotone";
    case TwoStateCase::Oscillating:
      return "oscillating";
  }
  return "?";
}

std::optional<UnaryRegularName> name_unary_pattern(const std::string& prefix, bool tail_even, bool tail_odd) {
  const std::size_t k = prefix.size();
  // Every catalogue entry with parameter n <= k + 1 is 2-periodic from
  // m = k + 2 on, as is the pattern, so m <= k + 3 decides equality.
  auto matches = [&](const UnaryRegularName& name) {
    for (std::size_t m = 0; m <= k + 3; ++m) {
      if (name.contains(m) != pattern_bit(prefix, tail_even, tail_odd, m)) return false;
    }
    return true;
  };
  static constexpr std::array kSimple = {Kind::Empty, Kind::All, Kind::EpsilonOnly, Kind::APlus, Kind::Even,
                                         Kind::CoEven};
  static constexpr std::array kParametric = {
      Kind::Less,         Kind::CoLess,       Kind::LessAndEven,  Kind::LessAndCoEven,  Kind::CoLessAndEven,
      Kind::CoLessAndCoEven, Kind::LessOrEven, Kind::LessOrCoEven, Kind::CoLessOrEven, Kind::CoLessOrCoEven,
      Kind::SingletonLength};
  for (bool complemented : {false, true}) {
    for (Kind kind : kSimple) {
      UnaryRegularName name(kind, 0, complemented);
      if (matches(name)) return name;
    }
    for (std::size_t n = 0; n <= k + 1; ++n) {
      for (Kind kind : kParametric) {
        UnaryRegularName name(kind, n, complemented);
        if (matches(name)) return name;
      }
    }
  }
  return std::nullopt;
}

TwoStatePfaAnalysis analyze_2state_pfa(const Pfa<Rational>& p, const Rational& lambda) {
  require_well_formed(p);
  if (p.states() != 2) throw DomainError("expected a 2-state PFA, got " + std::to_string(p.states()) + " states");
  if (!p.alphabet.is_unary()) throw DomainError("expected a unary PFA");
  if (auto problems = validate(p); !problems.empty()) throw ValidationError(std::move(problems));
  if (lambda < 0 || lambda >= 1) throw DomainError("strict cutpoint must lie in [0, 1)");

  const Matrix<Rational>& a = p.transitions.begin()->second;
  const Matrix<Rational> v0 = initial_object(p.as_gfa());
  const Matrix<Rational> f = p.right_marker ? p.final_row * *p.right_marker : p.final_row;
  const Rational f1 = f(0, 0);
  const Rational f2 = f(0, 1);
  const Rational f_empty = (f * v0)(0, 0);

  TwoStatePfaAnalysis out;
  out.x = a(1, 0);
  out.y = a(0, 1);
  const Rational sum = out.x + out.y;
  out.t = 1 - sum;

  std::string prefix;
  bool tail_even = false;
  bool tail_odd = false;

  if (sum == 0) {
    out.case_tag = TwoStateCase::Identity;
    tail_even = tail_odd = f_empty > lambda;
  } else if (sum == 2) {
    out.case_tag = TwoStateCase::Alternating;
    const Rational f_one = (f * (a * v0))(0, 0);
    tail_even = f_empty > lambda;
    tail_odd = f_one > lambda;
  } else {
    out.z = (f1 * out.y + f2 * out.x) / sum;
    out.c = v0(0, 0) - out.y / sum;
    out.r = out.c * (f1 - f2);
    if (f1 == f2) {
      out.case_tag = TwoStateCase::ConstantF;
      tail_even = tail_odd = f1 > lambda;
    } else if (out.t == 0) {
      out.case_tag = TwoStateCase::XySumOne;
      prefix.push_back(f_empty > lambda ? '1' : '0');
      tail_even = tail_odd = out.z > lambda;
    } else {
      out.case_tag = out.t > 0 ? TwoStateCase::Monotone : TwoStateCase::Oscillating;
      const Rational gap = out.z - lambda;
      if (gap == 0) {
        // sign(f - lambda) = sign(r t^m)
        tail_even = out.r > 0;
        tail_odd = out.r * out.t > 0;
      } else {
        // |r t^m| shrinks geometrically; once below |z - lambda| the sign of
        // f - lambda is that of z - lambda for good.
        const Rational abs_gap = abs(gap);
        const Rational abs_t = abs(out.t);
        Rational term = out.r;  // r t^m
        Rational abs_term = abs(out.r);
        prefix.push_back(f_empty > lambda ? '1' : '0');
        for (std::size_t m = 1; abs_term >= abs_gap; ++m) {
          term *= out.t;
          abs_term *= abs_t;
          if (abs_term < abs_gap) break;
          prefix.push_back(out.z + term > lambda ? '1' : '0');
        }
        // prefix.size() = first m with |r t^m| < |gap| (m >= 1 when m = 0 is enumerated directly).
        tail_even = tail_odd = gap > 0;
      }
    }
  }

  auto name = name_unary_pattern(prefix, tail_even, tail_odd);
  if (!name) throw DomainError("no catalogue name for the computed membership pattern");
  out.language = *name;
  return out;
}

UnaryRegularName classify_2state_pfa(const Pfa<Rational>& p, const Rational& lambda) {
  return analyze_2state_pfa(p, lambda).language;
}

}  // namespace cutpoint
