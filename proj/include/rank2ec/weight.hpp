#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace rank2ec {

/// A weight of a rank-2 lattice, stored in the fundamental-weight basis:
/// (a, b) means a*w1 + b*w2.  This is the single currency every module
/// trades in; Euclidean coordinates never appear outside SVG rendering.
struct Weight {
  int a = 0;
  int b = 0;

  friend constexpr Weight operator+(Weight l, Weight r) { return {l.a + r.a, l.b + r.b}; }
  friend constexpr Weight operator-(Weight l, Weight r) { return {l.a - r.a, l.b - r.b}; }
  friend constexpr Weight operator-(Weight w) { return {-w.a, -w.b}; }
  friend constexpr Weight operator*(int k, Weight w) { return {k * w.a, k * w.b}; }

  constexpr bool operator==(const Weight&) const = default;
  constexpr auto operator<=>(const Weight&) const = default;  // lexicographic (a, b)
};

inline constexpr Weight kRho{1, 1};

inline std::string to_string(Weight w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

struct WeightHash {
  std::size_t operator()(Weight w) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(w.a) << 32) ^
                                  static_cast<unsigned>(w.b));
  }
};

}  // namespace rank2ec
