#include "cutpoint/exactmath/scalar.hpp"

#include <cstdio>

#include "cutpoint/exactmath/errors.hpp"

namespace cutpoint {

std::string format_value(const Integer& v) { return v.get_str(); }

std::string format_value(const Rational& v) { return to_string(v); }

std::string format_value(const GaussianRational& v) {
  return "[" + to_string(v.re) + ", " + to_string(v.im) + "]";
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_value(const std::complex<double>& v) {
  return "[" + format_value(v.real()) + ", " + format_value(v.imag()) + "]";
}

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw DomainError(std::string("expected an exact real scalar, got ") + cutpoint::to_string(kind()));
}

double Scalar::real_double() const {
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  throw DomainError(std::string("expected an approximate real scalar, got ") + cutpoint::to_string(kind()));
}

double Scalar::to_approx_real() const {
  switch (kind()) {
    case Kind::ExactReal:
      return to_double(std::get<Rational>(value_));
    case Kind::ApproxReal:
      return std::get<double>(value_);
    default:
      throw DomainError("complex scalar has no real value");
  }
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return format_value(v); }, value_);
}

const char* to_string(Scalar::Kind kind) {
  switch (kind) {
    case Scalar::Kind::ExactReal:
      return "exact-real";
    case Scalar::Kind::ExactComplex:
      return "exact-complex";
    case Scalar::Kind::ApproxReal:
      return "approx-real";
    case Scalar::Kind::ApproxComplex:
      return "approx-complex";
  }
  return "?";
}

}  // namespace cutpoint
