#include "cutpoint/langsem/unary_name.hpp"

#include <array>

#include "cutpoint/exactmath/errors.hpp"

namespace cutpoint {

namespace {

using Kind = UnaryRegularName::Kind;

constexpr std::array<Kind, 18> kAllKinds = {
    Kind::Empty,         Kind::All,           Kind::EpsilonOnly,     Kind::APlus,        Kind::Even,
    Kind::CoEven,        Kind::Less,          Kind::CoLess,          Kind::LessAndEven,  Kind::LessAndCoEven,
    Kind::CoLessAndEven, Kind::CoLessAndCoEven, Kind::SingletonLength, Kind::LessOrEven, Kind::LessOrCoEven,
    Kind::CoLessOrEven,  Kind::CoLessOrCoEven, Kind::ModN,
};

}  // namespace

bool has_parameter(Kind kind) {
  switch (kind) {
    case Kind::Empty:
    case Kind::All:
    case Kind::EpsilonOnly:
    case Kind::APlus:
    case Kind::Even:
    case Kind::CoEven:
      return false;
    default:
      return true;
  }
}

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::Empty: return "Empty";
    case Kind::All: return "All";
    case Kind::EpsilonOnly: return "EpsilonOnly";
    case Kind::APlus: return "APlus";
    case Kind::Even: return "Even";
    case Kind::CoEven: return "CoEven";
    case Kind::Less: return "Less";
    case Kind::CoLess: return "CoLess";
    case Kind::LessAndEven: return "LessAndEven";
    case Kind::LessAndCoEven: return "LessAndCoEven";
    case Kind::CoLessAndEven: return "CoLessAndEven";
    case Kind::CoLessAndCoEven: return "CoLessAndCoEven";
    case Kind::SingletonLength: return "SingletonLength";
    case Kind::LessOrEven: return "LessOrEven";
    case Kind::LessOrCoEven: return "LessOrCoEven";
    case Kind::CoLessOrEven: return "CoLessOrEven";
    case Kind::CoLessOrCoEven: return "CoLessOrCoEven";
    case Kind::ModN: return "ModN";
  }
  return "?";
}

bool UnaryRegularName::contains(std::size_t m) const {
  const bool less = m <= n_;
  const bool even = m % 2 == 0;
  bool in = false;
  switch (kind_) {
    case Kind::Empty: in = false; break;
    case Kind::All: in = true; break;
    case Kind::EpsilonOnly: in = m == 0; break;
    case Kind::APlus: in = m > 0; break;
    case Kind::Even: in = even; break;
    case Kind::CoEven: in = !even; break;
    case Kind::Less: in = less; break;
    case Kind::CoLess: in = !less; break;
    case Kind::LessAndEven: in = less && even; break;
    case Kind::LessAndCoEven: in = less && !even; break;
    case Kind::CoLessAndEven: in = !less && even; break;
    case Kind::CoLessAndCoEven: in = !less && !even; break;
    case Kind::SingletonLength: in = m == n_; break;
    case Kind::LessOrEven: in = less || even; break;
    case Kind::LessOrCoEven: in = less || !even; break;
    case Kind::CoLessOrEven: in = !less || even; break;
    case Kind::CoLessOrCoEven: in = !less || !even; break;
    case Kind::ModN: in = n_ == 0 ? m == 0 : m % n_ == 0; break;
  }
  return in != complemented_;
}

std::string UnaryRegularName::to_string() const {
  std::string base = kind_name(kind_);
  if (has_parameter(kind_)) base += "(" + std::to_string(n_) + ")";
  return complemented_ ? "Complement(" + base + ")" : base;
}

UnaryRegularName UnaryRegularName::parse(const std::string& text) {
  const std::string prefix = "Complement(";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() && text.back() == ')') {
    return complement_of(parse(text.substr(prefix.size(), text.size() - prefix.size() - 1)));
  }
  const auto open = text.find('(');
  const std::string head = text.substr(0, open);
  for (Kind kind : kAllKinds) {
    if (head != kind_name(kind)) continue;
    if (!has_parameter(kind)) {
      if (open != std::string::npos) break;
      return UnaryRegularName(kind);
    }
    if (open == std::string::npos || text.back() != ')') break;
    const std::string digits = text.substr(open + 1, text.size() - open - 2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) break;
    return UnaryRegularName(kind, std::stoul(digits));
  }
  throw ParseError("unknown unary language name '" + text + "'");
}

}  // namespace cutpoint
