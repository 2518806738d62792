#pragma once

#include <complex>

#include "cutpoint/exactmath/errors.hpp"
#include "cutpoint/exactmath/rational.hpp"

namespace cutpoint {

// Complex number with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational real) : re(std::move(real)), im(0) {}  // NOLINT: implicit by design of a field embedding
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_real() const { return im == 0; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw DomainError("division of a Gaussian rational by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, Rational(-z.im)}; }

// |z|^2, exact.
inline Rational norm2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

inline std::complex<double> to_complex(const GaussianRational& z) {
  return {to_double(z.re), to_double(z.im)};
}

}  // namespace cutpoint
