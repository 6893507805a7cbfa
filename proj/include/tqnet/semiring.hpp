#pragma once

#include <cmath>
#include <limits>
#include <string_view>

namespace tqnet {

using Value = double;

/// A value semiring (A, add, mul, zero, one) over doubles.
///
/// The undefined marker is not part of the semiring; temporal quantities
/// encode it as missing coverage, so it stays distinct from `zero`.
struct Semiring {
  enum class Kind { Combinatorial, MinPlus };

  Kind kind;
  std::string_view name;
  Value (*add)(Value, Value);
  Value (*mul)(Value, Value);
  Value zero;
  Value one;

  /// True when values are ordinary numbers added with `+`; required by
  /// cumulation, cuts, totals and recoding.
  [[nodiscard]] constexpr bool is_numeric() const noexcept {
    return kind == Kind::Combinatorial;
  }

  [[nodiscard]] static bool equal(Value a, Value b, Value tol = 0.0) noexcept {
    if (a == b) return true;
    if (std::isinf(a) || std::isinf(b)) return false;
    return std::fabs(a - b) <= tol;
  }
};

namespace detail {
constexpr Value plus(Value a, Value b) noexcept { return a + b; }
constexpr Value times(Value a, Value b) noexcept { return a * b; }
constexpr Value minimum(Value a, Value b) noexcept { return b < a ? b : a; }
}  // namespace detail

/// (R, +, *, 0, 1)
inline constexpr Semiring kCombinatorial{Semiring::Kind::Combinatorial,
                                         "combinatorial", &detail::plus,
                                         &detail::times, 0.0, 1.0};

/// (R u {inf}, min, +, inf, 0) as used for shortest paths.
inline constexpr Semiring kMinPlus{Semiring::Kind::MinPlus,
                                   "min-plus",
                                   &detail::minimum,
                                   &detail::plus,
                                   std::numeric_limits<Value>::infinity(),
                                   0.0};

}  // namespace tqnet
