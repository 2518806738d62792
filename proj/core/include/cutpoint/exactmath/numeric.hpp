#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "cutpoint/exactmath/gaussian.hpp"
#include "cutpoint/exactmath/rational.hpp"

namespace cutpoint {

// Per-field facts the generic matrix code needs. Exact fields: Integer,
// Rational, GaussianRational. Approximate fields: double, complex<double>.
template <class T>
struct NumTraits;

template <>
struct NumTraits<Integer> {
  using Real = Integer;
  static constexpr bool exact = true;
  static constexpr bool complex = false;
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static Integer conj(const Integer& v) { return v; }
  static Integer abs2(const Integer& v) { return v * v; }
  static Integer real(const Integer& v) { return v; }
  static Integer imag(const Integer&) { return 0; }
};

template <>
struct NumTraits<Rational> {
  using Real = Rational;
  using Approx = double;
  static constexpr bool exact = true;
  static constexpr bool complex = false;
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static Rational conj(const Rational& v) { return v; }
  static Rational abs2(const Rational& v) { return v * v; }
  static Rational real(const Rational& v) { return v; }
  static Rational imag(const Rational&) { return 0; }
  static double to_approx(const Rational& v) { return to_double(v); }
};

template <>
struct NumTraits<GaussianRational> {
  using Real = Rational;
  using Approx = std::complex<double>;
  static constexpr bool exact = true;
  static constexpr bool complex = true;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(Rational(1)); }
  static GaussianRational conj(const GaussianRational& v) { return cutpoint::conj(v); }
  static Rational abs2(const GaussianRational& v) { return norm2(v); }
  static Rational real(const GaussianRational& v) { return v.re; }
  static Rational imag(const GaussianRational& v) { return v.im; }
  static std::complex<double> to_approx(const GaussianRational& v) { return to_complex(v); }
};

template <>
struct NumTraits<double> {
  using Real = double;
  using Approx = double;
  static constexpr bool exact = false;
  static constexpr bool complex = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double conj(double v) { return v; }
  static double abs2(double v) { return v * v; }
  static double real(double v) { return v; }
  static double imag(double) { return 0.0; }
  static double to_approx(double v) { return v; }
};

template <>
struct NumTraits<std::complex<double>> {
  using Real = double;
  using Approx = std::complex<double>;
  static constexpr bool exact = false;
  static constexpr bool complex = true;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
  static double abs2(const std::complex<double>& v) { return std::norm(v); }
  static double real(const std::complex<double>& v) { return v.real(); }
  static double imag(const std::complex<double>& v) { return v.imag(); }
  static std::complex<double> to_approx(const std::complex<double>& v) { return v; }
};

template <class T>
concept ExactField = NumTraits<T>::exact;

// Text form used in reports and violation messages.
std::string format_value(const Integer& v);
std::string format_value(const Rational& v);
std::string format_value(const GaussianRational& v);
std::string format_value(double v);
std::string format_value(const std::complex<double>& v);

// |a - b| <= tol. Exact fields compare exactly when tol == 0 and against the
// exact rational value of tol otherwise.
template <class T>
bool within(const T& a, const T& b, double tol) {
  using Tr = NumTraits<T>;
  T diff = a - b;
  if constexpr (Tr::exact) {
    if (tol == 0.0) return diff == Tr::zero();
    typename Tr::Real t = exact_from_double(tol);
    return Tr::abs2(diff) <= t * t;
  } else {
    return std::sqrt(Tr::abs2(diff)) <= tol;
  }
}

}  // namespace cutpoint
