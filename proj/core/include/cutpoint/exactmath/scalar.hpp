#pragma once

#include <complex>
#include <string>
#include <variant>

#include "cutpoint/exactmath/gaussian.hpp"
#include "cutpoint/exactmath/numeric.hpp"
#include "cutpoint/exactmath/rational.hpp"

namespace cutpoint {

// A single value of one of the four supported scalar kinds. Nothing converts
// between kinds implicitly; to_approx_real() is the one documented
// exact -> binary64 coercion.
class Scalar {
 public:
  enum class Kind { ExactReal, ExactComplex, ApproxReal, ApproxComplex };
  using Value = std::variant<Rational, GaussianRational, double, std::complex<double>>;

  Scalar() : value_(Rational(0)) {}
  Scalar(Rational v) : value_(std::move(v)) {}                // NOLINT
  Scalar(GaussianRational v) : value_(std::move(v)) {}        // NOLINT
  Scalar(double v) : value_(v) {}                              // NOLINT
  Scalar(std::complex<double> v) : value_(v) {}                // NOLINT

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  bool is_exact() const noexcept { return kind() == Kind::ExactReal || kind() == Kind::ExactComplex; }
  bool is_real() const noexcept { return kind() == Kind::ExactReal || kind() == Kind::ApproxReal; }

  const Value& value() const noexcept { return value_; }

  // Throws DomainError unless the kind matches.
  const Rational& rational() const;
  double real_double() const;

  // Real value as binary64; exact reals are rounded. Complex kinds throw.
  double to_approx_real() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  Value value_;
};

const char* to_string(Scalar::Kind kind);

}  // namespace cutpoint
