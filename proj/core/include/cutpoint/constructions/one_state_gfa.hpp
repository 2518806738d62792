#pragma once

#include <string_view>
#include <vector>

#include "cutpoint/automata/models.hpp"
#include "cutpoint/langsem/cutpoint.hpp"
#include "cutpoint/langsem/descriptor.hpp"

namespace cutpoint {

enum class Direction { Less, Greater };
enum class OneStateMode { Strict, Inclusive };

const char* to_string(Direction d);
const char* to_string(OneStateMode m);

// A 1-state GFA over `alphabet` with number numbers[j] for letter j, read as
// the condition  prod A_j^{|w|_j}  (< | >)  lambda  (strict), or = lambda
// (inclusive; direction ignored).
struct OneStateGfaSpec {
  Alphabet alphabet;
  std::vector<Rational> numbers;
  Rational cutpoint;
  Direction direction = Direction::Less;
  OneStateMode mode = OneStateMode::Strict;
};

void check_spec(const OneStateGfaSpec& s);

// prod A_j^{|w|_j}, with 0^0 = 1.
Rational one_state_value(const OneStateGfaSpec& s, std::string_view word);
bool one_state_accepts(const OneStateGfaSpec& s, std::string_view word);

// The underlying 1x1 GFA with v0 = f = (1).
Gfa<Rational> to_gfa(const OneStateGfaSpec& s);

LanguageDescriptor decompose_1state(const OneStateGfaSpec& s);

// Inverse direction. Accepts exact Lambda, V, inclusive and indicator-only
// descriptors.
OneStateGfaSpec build_1state(const LanguageDescriptor& d);

// Normalizes a general 1-state GFA (markers, v0, f) with a strict or
// inclusive cutpoint: the value is k * prod A_j^{x_j} with k = f A_$ A_¢ v0.
LanguageDescriptor decompose_1state_gfa(const Gfa<Rational>& g, const CutpointSpec& cp);
OneStateGfaSpec normalize_1state_gfa(const Gfa<Rational>& g, const CutpointSpec& cp);

}  // namespace cutpoint
