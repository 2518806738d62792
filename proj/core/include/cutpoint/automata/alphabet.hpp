#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cutpoint/exactmath/errors.hpp"

namespace cutpoint {

using Symbol = char;
// Words are strings of single-character symbols.
using Word = std::string;

// Ordered set of distinct symbols. Order fixes Parikh-vector coordinates.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
        throw DomainError(std::string("duplicate symbol '") + symbols_[i] + "' in alphabet");
      }
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  bool is_unary() const noexcept { return symbols_.size() == 1; }
  bool contains(Symbol s) const noexcept { return symbols_.find(s) != std::string::npos; }
  std::optional<std::size_t> index_of(Symbol s) const noexcept {
    const auto pos = symbols_.find(s);
    if (pos == std::string::npos) return std::nullopt;
    return pos;
  }
  Symbol operator[](std::size_t i) const { return symbols_.at(i); }
  const std::string& symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  // Throws DomainError on the first symbol outside the alphabet.
  void check_word(std::string_view word) const {
    for (Symbol s : word) {
      if (!contains(s)) throw DomainError(std::string("unknown symbol '") + s + "'");
    }
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

}  // namespace cutpoint
