#include "cutpoint/exactmath/number_theory.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "cutpoint/exactmath/errors.hpp"

namespace cutpoint {

namespace {

void require_positive(const Rational& r) {
  if (sgn(r) <= 0) throw DomainError("expected a positive rational, got " + to_string(r));
}

// Adds sign * (exponents of n) into out. n >= 1.
void factor_into(Integer n, long sign, unsigned long trial_bound, PrimeExponentVector& out) {
  auto accumulate = [&](const Integer& p, long e) {
    long& slot = out[p];
    slot += sign * e;
    if (slot == 0) out.erase(p);
  };
  Integer prime;
  for (unsigned long d = 2; n > 1; d = (d == 2) ? 3 : d + 2) {
    if (mpz_cmp_ui(n.get_mpz_t(), d * d) < 0) {
      // No divisor up to sqrt(n) remains: n is prime.
      accumulate(n, 1);
      return;
    }
    if (d > trial_bound) {
      throw DomainError("cofactor " + n.get_str() + " has no prime factor <= " + std::to_string(trial_bound) +
                        " and cannot be certified prime");
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      prime = d;
      const auto e = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
      accumulate(prime, e);
    }
  }
}

}  // namespace

PrimeExponentVector prime_exponents(const Rational& r, unsigned long trial_bound) {
  require_positive(r);
  PrimeExponentVector out;
  factor_into(r.get_num(), +1, trial_bound, out);
  factor_into(r.get_den(), -1, trial_bound, out);
  return out;
}

Rational from_prime_exponents(const PrimeExponentVector& exponents) {
  Integer num = 1;
  Integer den = 1;
  Integer power;
  for (const auto& [p, e] : exponents) {
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
    (e > 0 ? num : den) *= power;
  }
  return make_rational(num, den);
}

bool logs_same_sign(std::span<const Rational> bases) {
  bool any_above = false;
  bool any_below = false;
  for (const auto& b : bases) {
    require_positive(b);
    if (b > 1) any_above = true;
    if (b < 1) any_below = true;
  }
  return !(any_above && any_below);
}

bool logs_rationally_equivalent(std::span<const Rational> bases, unsigned long trial_bound) {
  for (const auto& b : bases) require_positive(b);
  // log b = sum_p e_p log p with the log p linearly independent over Q, so
  // two logs are rationally dependent iff their exponent vectors are parallel.
  std::optional<PrimeExponentVector> reference;
  for (const auto& b : bases) {
    if (b == 1) continue;
    PrimeExponentVector v = prime_exponents(b, trial_bound);
    if (!reference) {
      reference = std::move(v);
      continue;
    }
    if (v.size() != reference->size()) return false;
    const auto& [p0, r0] = *reference->begin();
    auto it = v.find(p0);
    if (it == v.end()) return false;
    const Integer v0 = it->second;
    for (const auto& [p, rp] : *reference) {
      auto found = v.find(p);
      if (found == v.end()) return false;
      // v_p / r_p must equal v0 / r0 for every prime.
      if (Integer(found->second) * r0 != v0 * rp) return false;
    }
  }
  return true;
}

std::optional<Rational> rational_power(const Rational& base, long p, unsigned long q) {
  require_positive(base);
  if (q == 0) throw DomainError("rational_power with zero root index");
  Integer num_root;
  Integer den_root;
  if (!mpz_root(num_root.get_mpz_t(), base.get_num_mpz_t(), q)) return std::nullopt;
  if (!mpz_root(den_root.get_mpz_t(), base.get_den_mpz_t(), q)) return std::nullopt;
  Rational root = make_rational(num_root, den_root);
  Rational result = rational_pow(root, static_cast<unsigned long>(std::labs(p)));
  if (p < 0) result = 1 / result;
  return result;
}

}  // namespace cutpoint
