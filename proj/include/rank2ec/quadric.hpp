#pragma once

#include <cstdint>

namespace rank2ec {

/// Element n*1 + m*y of the ring Z[y]/(y^2 - 2y, 4y): the K-theory of the
/// adjoint form that detects line-bundle classes on the three-dimensional
/// quadric.  The y-coordinate lives in Z/4.
struct QuadricClass {
  long long one = 0;
  int y = 0;  // mod 4

  static QuadricClass make(long long n, long long m) {
    return {n, static_cast<int>(((m % 4) + 4) % 4)};
  }

  friend QuadricClass operator+(QuadricClass l, QuadricClass r) {
    return make(l.one + r.one, l.y + r.y);
  }
  friend QuadricClass operator-(QuadricClass l, QuadricClass r) {
    return make(l.one - r.one, l.y - r.y);
  }
  friend QuadricClass operator*(QuadricClass l, QuadricClass r) {
    // (a + by)(c + dy) = ac + (ad + bc + 2bd) y, using y^2 = 2y.
    return make(l.one * r.one, l.one * r.y + l.y * r.one + 2ll * l.y * r.y);
  }
  friend bool operator==(QuadricClass l, QuadricClass r) {
    return l.one == r.one && l.y == r.y;
  }

  /// Membership in the subgroup generated by 1.
  bool is_multiple_of_unit() const { return y == 0; }
};

/// Image of any line bundle power: the Picard generator lies in the root
/// lattice, so every power maps to 1.
inline QuadricClass quadric_line_bundle_class(long long /*power*/) {
  return QuadricClass::make(1, 0);
}

/// Image of the rank-2 bundle attached to the short-root fundamental
/// weight's orbit: 2 - 2y.
inline QuadricClass quadric_spinor_bundle_class() { return QuadricClass::make(2, -2); }

/// The obstruction holds iff 2 - 2y is not an integer combination of line
/// bundle classes, i.e. not a multiple of 1.
inline bool verify_quadric_obstruction() {
  return !quadric_spinor_bundle_class().is_multiple_of_unit();
}

}  // namespace rank2ec
