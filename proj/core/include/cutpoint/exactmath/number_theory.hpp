#pragma once

#include <map>
#include <optional>
#include <span>

#include "cutpoint/exactmath/rational.hpp"

namespace cutpoint {

// Prime -> nonzero exponent. Represents a positive rational uniquely; the
// empty map is 1.
using PrimeExponentVector = std::map<Integer, long>;

inline constexpr unsigned long kDefaultTrialBound = 1'000'000;

// Factorization by trial division with divisors up to trial_bound. Throws
// DomainError for r <= 0, and when a cofactor is left that the bound cannot
// certify as prime.
PrimeExponentVector prime_exponents(const Rational& r, unsigned long trial_bound = kDefaultTrialBound);

Rational from_prime_exponents(const PrimeExponentVector& exponents);

// Do the nonzero values among log(b) for b in bases all share one sign?
bool logs_same_sign(std::span<const Rational> bases);

// Are the values log(b) pairwise rational multiples of a common real? Zero
// logs (b = 1) are compatible with everything.
bool logs_rationally_equivalent(std::span<const Rational> bases,
                                unsigned long trial_bound = kDefaultTrialBound);

// base^(p/q) when it is rational, nullopt otherwise. q > 0; base > 0.
std::optional<Rational> rational_power(const Rational& base, long p, unsigned long q);

}  // namespace cutpoint
