#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cutpoint/constructions/rotation.hpp"
#include "cutpoint/langsem/cutpoint.hpp"

namespace cutpoint {

// a^m lies in exactly one of two cutpoint languages.
struct SeparationWitness {
  std::size_t m = 0;
  Scalar value_a;
  Scalar value_b;
  bool member_a = false;
  bool member_b = false;
};

// Least m <= max_length separating L(a, cp_a) from L(b, cp_b), if any.
std::optional<SeparationWitness> separate(const Automaton& a, const CutpointSpec& cp_a, const Automaton& b,
                                          const CutpointSpec& cp_b, std::size_t max_length,
                                          double eps = kDefaultEqualityEpsilon);

struct PxSeparation {
  std::size_t candidate = 0;  // floor((pi - (gamma2 - gamma1)) / (theta2 - theta1))
  std::optional<SeparationWitness> witness;
  // True when neither candidate nor candidate + 1 verified; witness then
  // holds whatever neighbour in [candidate - 1, candidate + 2] did.
  bool anomaly = false;
};

// Separates L(P_x1, lambda_x1) from L(P_x2, lambda_x2), 0 < x1 < x2 <= 1/2,
// by the predicted length, verified with exact values.
PxSeparation px_separation(const Rational& x1, const Rational& x2);

// Are value(a^0), ..., value(a^max_length) pairwise distinct? Exact
// automata only.
bool aperiodicity_check(const Automaton& aut, std::size_t max_length);

// First k <= horizon with cos(k theta) in each of `bins` equal subintervals
// of [-1, 1] (half-open, the last one closed).
struct DensityReport {
  std::size_t bins = 0;
  std::size_t horizon = 0;
  Rational bin_width;
  std::vector<std::optional<std::size_t>> first_hit;

  std::size_t misses() const;
};

DensityReport density_report(const PythTriple& t, std::size_t bins, std::size_t horizon);

}  // namespace cutpoint
