#pragma once

#include "cutpoint/constructions/one_state_gfa.hpp"
#include "cutpoint/langsem/descriptor.hpp"

namespace cutpoint {

enum class ChomskyVerdict { Regular, ContextFreeNonRegular, NonContextFree };

const char* to_string(ChomskyVerdict v);

// Drops letters with coefficient base 1 (binary64 coefficient 0).
SolutionDescriptor decimate(const SolutionDescriptor& d);

// Level of the solution language Sol(X, b, alpha) with b_j = log c_j:
// regular iff the nonzero b_j share a sign, else context-free iff the b_j
// are rationally equivalent. An infinite threshold gives X*, which is
// regular.
ChomskyVerdict chomsky_classify(const SolutionDescriptor& d);

// The same criterion on the solution component of a strict 1-state spec.
ChomskyVerdict chomsky_classify_gfa(const OneStateGfaSpec& s);

}  // namespace cutpoint
