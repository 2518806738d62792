#pragma once

#include <string>
#include <string_view>

#include "cutpoint/automata/automaton.hpp"
#include "cutpoint/langsem/descriptor.hpp"

namespace cutpoint {

// Automaton documents are JSON objects:
//
//   {"model": "gfa", "states": 2, "alphabet": "a", "scalar": "rational",
//    "transitions": {"a": [["3/5", "-4/5"], ["4/5", "3/5"]]},
//    "initial": ["1", "0"], "final": ["1", "0"]}
//
// scalar is rational | float | complex-rational | complex-float. Exact
// entries are "p/q" strings or integers, binary64 entries plain numbers,
// complex entries [re, im] pairs (a bare real is accepted). initial is a
// vector or {"basis": q}; for qfa it is a density matrix, {"basis": q} or
// {"vector": v} (the pure state v v^dagger). final is a row vector
// for gfa/pfa and a list of 0-based accepting states for mcqfa/qfa. qfa
// transitions and markers are lists of Kraus matrices.
//
// Malformed input throws ParseError; model violations throw
// ValidationError.
Automaton parse_automaton(std::string_view text);
std::string serialize_automaton(const Automaton& aut);

// Descriptor documents:
//
//   {"alphabet": "ab", "form": "lambda",
//    "solution": {"letters": "ab", "coefficients": {"a": "2", "b": "1/2"},
//                 "threshold": "1", "relation": "<"},
//    "parity": {"X": "ab", "Y": "", "i": 0},
//    "indicator": "b"}
//
// form is lambda | v | inclusive | indicator. Coefficients are the bases
// c_j of b_j = log c_j and the threshold is tau of alpha = log tau or "inf".
// With "approximate": true, coefficients and threshold are the binary64
// b_j and alpha themselves.
LanguageDescriptor parse_descriptor(std::string_view text);
SolutionDescriptor parse_solution(std::string_view text);
std::string serialize_descriptor(const LanguageDescriptor& d);

// "p/q", an integer, or a decimal such as "0.9" (read exactly as 9/10).
Rational parse_exact_number(std::string_view text);

}  // namespace cutpoint
