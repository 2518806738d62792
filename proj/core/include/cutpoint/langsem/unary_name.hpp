#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace cutpoint {

// A named regular language over {a}. Less(n) = {a^i : i <= n}, Even = (aa)*,
// "Co" prefixes are complements of the component they precede, ModN(n) = (a^n)*.
class UnaryRegularName {
 public:
  enum class Kind {
    Empty,
    All,
    EpsilonOnly,
    APlus,
    Even,
    CoEven,
    Less,
    CoLess,
    LessAndEven,
    LessAndCoEven,
    CoLessAndEven,
    CoLessAndCoEven,
    SingletonLength,
    LessOrEven,
    LessOrCoEven,
    CoLessOrEven,
    CoLessOrCoEven,
    ModN,
  };

  explicit UnaryRegularName(Kind kind, std::size_t n = 0, bool complemented = false)
      : kind_(kind), n_(n), complemented_(complemented) {}

  static UnaryRegularName complement_of(const UnaryRegularName& base) {
    return UnaryRegularName(base.kind_, base.n_, !base.complemented_);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t n() const noexcept { return n_; }
  bool complemented() const noexcept { return complemented_; }

  bool contains(std::size_t m) const;

  // "CoEven", "Less(2)", "Complement(LessAndEven(3))"
  std::string to_string() const;
  static UnaryRegularName parse(const std::string& text);

  friend bool operator==(const UnaryRegularName&, const UnaryRegularName&) = default;

 private:
  Kind kind_;
  std::size_t n_;
  bool complemented_;
};

bool has_parameter(UnaryRegularName::Kind kind);
const char* kind_name(UnaryRegularName::Kind kind);

inline bool named_member(const UnaryRegularName& name, std::size_t m) { return name.contains(m); }

}  // namespace cutpoint
