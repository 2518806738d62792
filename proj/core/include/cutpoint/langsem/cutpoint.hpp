#pragma once

#include <cstddef>
#include <string>

#include "cutpoint/automata/automaton.hpp"
#include "cutpoint/exactmath/scalar.hpp"

namespace cutpoint {

// strict: value > lambda; inclusive: value = lambda; exclusive: value != lambda.
enum class CutMode { Strict, Inclusive, Exclusive };

const char* to_string(CutMode mode);
CutMode parse_cut_mode(const std::string& text);

struct CutpointSpec {
  Scalar value;
  CutMode mode = CutMode::Strict;
};

// Tolerance for inclusive/exclusive tests on binary64 values.
inline constexpr double kDefaultEqualityEpsilon = 1e-9;

// Range rules per model: probabilistic and quantum models need lambda in
// [0,1) (strict) or [0,1] (inclusive/exclusive); GFAs accept any real.
void check_cutpoint(const CutpointSpec& cp, Model model);

// Exact when both v and the cutpoint are exact reals. Otherwise both are
// coerced to binary64: strict mode compares directly, inclusive/exclusive
// use |v - lambda| <= eps.
bool cut_member(const Scalar& v, const CutpointSpec& cp, double eps = kDefaultEqualityEpsilon);

// Bit m (m = 0..max_length) is '1' iff a^m is in the cutpoint language.
std::string enum_unary(const Automaton& aut, const CutpointSpec& cp, std::size_t max_length,
                       double eps = kDefaultEqualityEpsilon);

}  // namespace cutpoint
