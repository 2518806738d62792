#include "cutpoint/langsem/cutpoint.hpp"

#include <cmath>

namespace cutpoint {

const char* to_string(CutMode mode) {
  switch (mode) {
    case CutMode::Strict:
      return "strict";
    case CutMode::Inclusive:
      return "inclusive";
    case CutMode::Exclusive:
      return "exclusive";
  }
  return "?";
}

CutMode parse_cut_mode(const std::string& text) {
  if (text == "strict") return CutMode::Strict;
  if (text == "inclusive") return CutMode::Inclusive;
  if (text == "exclusive") return CutMode::Exclusive;
  throw DomainError("unknown cutpoint mode '" + text + "'");
}

void check_cutpoint(const CutpointSpec& cp, Model model) {
  if (!cp.value.is_real()) throw DomainError("cutpoint must be real");
  if (model == Model::Gfa) return;
  const bool exact = cp.value.is_exact();
  const Rational zero(0), one(1);
  bool below_zero, at_least_one, above_one;
  if (exact) {
    const Rational& v = cp.value.rational();
    below_zero = v < zero;
    at_least_one = v >= one;
    above_one = v > one;
  } else {
    const double v = cp.value.real_double();
    below_zero = v < 0.0;
    at_least_one = v >= 1.0;
    above_one = v > 1.0;
  }
  if (below_zero || above_one || (cp.mode == CutMode::Strict && at_least_one)) {
    throw DomainError(std::string("cutpoint ") + cp.value.to_string() + " outside the range allowed for a " +
                      to_string(model) + " in " + to_string(cp.mode) + " mode");
  }
}

bool cut_member(const Scalar& v, const CutpointSpec& cp, double eps) {
  if (!v.is_real() || !cp.value.is_real()) throw DomainError("cutpoint comparison needs real values");
  if (v.kind() == Scalar::Kind::ExactReal && cp.value.kind() == Scalar::Kind::ExactReal) {
    const int c = cmp(v.rational(), cp.value.rational());
    switch (cp.mode) {
      case CutMode::Strict:
        return c > 0;
      case CutMode::Inclusive:
        return c == 0;
      case CutMode::Exclusive:
        return c != 0;
    }
  }
  const double x = v.to_approx_real();
  const double lambda = cp.value.to_approx_real();
  switch (cp.mode) {
    case CutMode::Strict:
      return x > lambda;
    case CutMode::Inclusive:
      return std::abs(x - lambda) <= eps;
    case CutMode::Exclusive:
      return !(std::abs(x - lambda) <= eps);
  }
  return false;
}

std::string enum_unary(const Automaton& aut, const CutpointSpec& cp, std::size_t max_length, double eps) {
  if (!aut.alphabet().is_unary()) throw DomainError("enum_unary needs a unary automaton");
  std::string bits;
  bits.reserve(max_length + 1);
  for (const auto& v : unary_values(aut, max_length)) bits.push_back(cut_member(v, cp, eps) ? '1' : '0');
  return bits;
}

}  // namespace cutpoint
