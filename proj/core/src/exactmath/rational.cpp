#include "cutpoint/exactmath/rational.hpp"

#include <cctype>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "cutpoint/exactmath/errors.hpp"

namespace cutpoint {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("not an integer literal: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(trim(text.substr(0, slash)));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational exact_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
  Rational r(value);
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) {
  // get_d truncates toward zero; step away from zero when that is nearer.
  const double d = value.get_d();
  if (sgn(value) == 0 || !std::isfinite(d)) return d;
  const double next = std::nextafter(d, sgn(value) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(next)) return d;
  const Rational below = abs(value - Rational(d));
  const Rational above = abs(Rational(next) - value);
  if (above < below) return next;
  if (above == below) return (std::bit_cast<std::uint64_t>(d) & 1U) == 0 ? d : next;
  return d;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime: already canonical.
  Rational r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  return r;
}

}  // namespace cutpoint
