#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace airycoef {

/// Upper bound on distinct symbols a process can use. Exponent vectors are
/// fixed-width arrays over this universe.
inline constexpr std::size_t kMaxVars = 8;

/// Interned symbol. The index defines the global variable order; the first
/// seven slots are reserved for s, t, w, b, u, eta, xi in that order and any
/// further name is appended on first use.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint8_t index) : index_(index) {}

  /// Returns the symbol for `name`, interning it if needed.
  /// Throws std::length_error once kMaxVars symbols exist.
  static Var intern(std::string_view name);
  /// Like intern() but never creates a symbol; returns false if unknown.
  static bool lookup(std::string_view name, Var& out);

  constexpr std::uint8_t index() const { return index_; }
  std::string name() const;

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  std::uint8_t index_ = 0;
};

namespace vars {
inline constexpr Var s{0};
inline constexpr Var t{1};
inline constexpr Var w{2};
inline constexpr Var b{3};
inline constexpr Var u{4};
inline constexpr Var eta{5};
inline constexpr Var xi{6};
}  // namespace vars

}  // namespace airycoef
