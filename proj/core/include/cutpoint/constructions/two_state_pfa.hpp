#pragma once

#include <optional>
#include <string>

#include "cutpoint/automata/models.hpp"
#include "cutpoint/langsem/unary_name.hpp"

namespace cutpoint {

enum class TwoStateCase { Identity, Alternating, ConstantF, XySumOne, Monotone, Oscillating };

const char* to_string(TwoStateCase c);

// Exact analysis of a 2-state unary PFA with transition matrix
// [[1-x, y], [x, 1-y]]. Markers are folded into v0 and f first. In the
// monotone/oscillating cases f(a^m) = z + r t^m with t = 1 - (x + y),
// z the stationary acceptance and r = c (f1 - f2).
struct TwoStatePfaAnalysis {
  TwoStateCase case_tag = TwoStateCase::Identity;
  Rational x, y, c, z, r, t;
  UnaryRegularName language{UnaryRegularName::Kind::Empty};
};

// L(p, lambda) with strict cutpoint lambda in [0, 1).
TwoStatePfaAnalysis analyze_2state_pfa(const Pfa<Rational>& p, const Rational& lambda);
UnaryRegularName classify_2state_pfa(const Pfa<Rational>& p, const Rational& lambda);

// The first catalogue name that contains a^m exactly when bit m is set,
// where bits are prefix[m] for m < prefix.size() and tail_even / tail_odd
// (by parity of m) afterwards.
std::optional<UnaryRegularName> name_unary_pattern(const std::string& prefix, bool tail_even, bool tail_odd);

}  // namespace cutpoint
