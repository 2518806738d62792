#pragma once

#include <optional>
#include <string>

#include "cutpoint/automata/automaton.hpp"

namespace cutpoint {

struct TransformResult {
  Automaton machine;
  std::optional<std::string> notice;
};

// MCQFA M'' with n^2 + 1 states and a right end-marker whose value on w is
// (c^2 / 2) (f_M(w) - lambda)^2, c = 1 / sqrt(lambda^2 + |accept|), so that
// the exclusive cutpoint 0 language of M'' is the exclusive cutpoint lambda
// language of M. Built in binary64. lambda = 0 returns M unchanged.
TransformResult exclusive_to_zero(const Automaton& mc, const Scalar& lambda);

// The closed value (c^2 / 2)(f - lambda)^2, exactly.
Rational exclusive_to_zero_value(const Rational& f, const Rational& lambda, std::size_t accept_count);

Mcqfa<Complex> to_complex(const Mcqfa<GaussianRational>& m);

// 2-state MCQFA rotating by pi/n per letter, accepting in q_0:
// value(a^k) = cos^2(k pi / n).
Mcqfa<Complex> modn_mcqfa(unsigned long n);

}  // namespace cutpoint
