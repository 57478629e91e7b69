#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rank2ec/quadratic.hpp"
#include "rank2ec/root_system.hpp"
#include "rank2ec/weight.hpp"

namespace rank2ec {

// The crab is specific to G2: the weights lambda with lambda + rho singular
// form six lines through -rho, one per positive root.  Everything here is
// phrased over integer coordinates and the integral G2 norm
// |(a,b)|^2 = a^2 + 3ab + 3b^2.

inline constexpr int kNumCrabLines = 6;

inline long long g2_norm_sq(Weight w) {
  const long long a = w.a, b = w.b;
  return a * a + 3 * a * b + 3 * b * b;
}

inline const RootSystemData& g2() { return build(Kind::G2); }

/// Squared near bound: |lambda + rho| <= 42.
inline const Rational& near_threshold_sq() {
  static const Rational t(1764);
  return t;
}

/// Squared far bound: (42 + 3*sqrt(3))^2 = 1791 + 252*sqrt(3).
inline const QuadraticValue& far_threshold_sq() {
  static const QuadraticValue t{Rational(1791), Rational(252), Rational(3)};
  return t;
}

enum class ProximityClass { Near, Middle, Far };

inline ProximityClass classify_norm_sq(const Rational& nsq) {
  if (nsq <= near_threshold_sq()) return ProximityClass::Near;
  if (rational_gt(nsq, far_threshold_sq())) return ProximityClass::Far;
  return ProximityClass::Middle;
}

inline ProximityClass classify(Weight lam) {
  return classify_norm_sq(Rational(g2_norm_sq(lam + kRho)));
}

inline bool is_far(Weight lam) { return classify(lam) == ProximityClass::Far; }
inline bool is_near(Weight lam) { return classify(lam) == ProximityClass::Near; }

inline bool is_in_crab(Weight lam) { return is_singular(g2(), lam + kRho); }

/// Lines are labelled by the index of their positive root in build(G2).
/// crab line:            alpha^vee(lambda + rho) = 0   (through -rho)
/// singular line:        alpha^vee(lambda) = 0         (through 0)
/// mirror singular line: alpha^vee(lambda + 2 rho) = 0 (through -2 rho)
inline bool on_crab_line(int line, Weight lam) {
  return g2().coroots[line](lam + kRho) == 0;
}
inline bool on_singular_line(int line, Weight lam) { return g2().coroots[line](lam) == 0; }
inline bool on_mirror_singular_line(int line, Weight lam) {
  return g2().coroots[line](lam + kRho + kRho) == 0;
}

/// Bitmask of the crab lines through lam; 0 iff lam is not in the crab, all
/// six bits only for -rho.
inline unsigned crab_line_mask(Weight lam) {
  unsigned mask = 0;
  for (int i = 0; i < kNumCrabLines; ++i)
    if (on_crab_line(i, lam)) mask |= 1u << i;
  return mask;
}

inline std::vector<int> crab_lines_of(Weight lam) {
  std::vector<int> lines;
  for (int i = 0; i < kNumCrabLines; ++i)
    if (on_crab_line(i, lam)) lines.push_back(i);
  return lines;
}

/// Primitive lattice direction of the line with functional u*a + v*b = c.
inline Weight line_direction(int line) {
  const CorootFunctional f = g2().coroots[line];
  const int g = std::gcd(f.u, f.v);
  return Weight{f.v / g, -f.u / g};
}

/// Lattice points base + t*d with |t*d|^2 <= bound, walking outward from
/// t = 0; base must be the point distances are measured from (-rho for crab
/// lines, 0 for singular lines).
inline std::vector<Weight> walk_line_points(Weight base, Weight dir,
                                            const QuadraticValue& bound_sq) {
  std::vector<Weight> pts;
  const long long step = g2_norm_sq(dir);
  for (long long t = 0;; ++t) {
    const Rational dist_sq(step * t * t);
    if (rational_gt(dist_sq, bound_sq)) break;
    pts.push_back(base + static_cast<int>(t) * dir);
    if (t > 0) pts.push_back(base - static_cast<int>(t) * dir);
  }
  return pts;
}

/// All lattice crab points with |lambda + rho|^2 <= bound, deduplicated
/// (-rho lies on every line), sorted lexicographically.
inline std::vector<Weight> crab_points_within(const QuadraticValue& bound_sq) {
  std::set<Weight> pts;
  for (int line = 0; line < kNumCrabLines; ++line) {
    for (Weight w : walk_line_points(Weight{-1, -1}, line_direction(line), bound_sq))
      pts.insert(w);
  }
  return {pts.begin(), pts.end()};
}

namespace detail {

/// Intersection of the lines u1*a + v1*b = c1 and u2*a + v2*b = c2 when it
/// is a single lattice point.
inline std::optional<Weight> lattice_intersection(int u1, int v1, long long c1, int u2, int v2,
                                                  long long c2) {
  const long long det = static_cast<long long>(u1) * v2 - static_cast<long long>(u2) * v1;
  if (det == 0) return std::nullopt;
  const long long na = c1 * v2 - c2 * v1;
  const long long nb = static_cast<long long>(u1) * c2 - static_cast<long long>(u2) * c1;
  if (na % det != 0 || nb % det != 0) return std::nullopt;
  return Weight{static_cast<int>(na / det), static_cast<int>(nb / det)};
}

}  // namespace detail

/// The weights lambda with both lambda and lambda + rho singular, found by
/// intersecting every singular line with every crab line.
inline const std::vector<Weight>& twenty_weights() {
  static const std::vector<Weight> pts = [] {
    const auto& co = g2().coroots;
    std::set<Weight> found;
    for (int i = 0; i < kNumCrabLines; ++i)
      for (int j = 0; j < kNumCrabLines; ++j) {
        if (i == j) continue;  // parallel: a weight cannot satisfy both
        // singular line i: f_i(lam) = 0; crab line j: f_j(lam) = -f_j(rho).
        auto p = detail::lattice_intersection(co[i].u, co[i].v, 0, co[j].u, co[j].v,
                                              -co[j](kRho));
        if (p) found.insert(*p);
      }
    return std::vector<Weight>(found.begin(), found.end());
  }();
  return pts;
}

inline bool is_twenty_weight(Weight lam) {
  const auto& tw = twenty_weights();
  return std::binary_search(tw.begin(), tw.end(), lam);
}

/// The "mirror" analogue: weights mu with both mu and mu + rho in the crab,
/// i.e. the crab intersected with the crab shifted to -rho.
inline const std::vector<Weight>& mirror_twenty_weights() {
  static const std::vector<Weight> pts = [] {
    const auto& co = g2().coroots;
    const Weight two_rho = kRho + kRho;
    std::set<Weight> found;
    for (int i = 0; i < kNumCrabLines; ++i)
      for (int j = 0; j < kNumCrabLines; ++j) {
        if (i == j) continue;
        // crab line i: f_i(mu) = -f_i(rho); shifted crab line j:
        // f_j(mu) = -f_j(2 rho).
        auto p = detail::lattice_intersection(co[i].u, co[i].v, -co[i](kRho), co[j].u, co[j].v,
                                              -co[j](two_rho));
        if (p) found.insert(*p);
      }
    return std::vector<Weight>(found.begin(), found.end());
  }();
  return pts;
}

inline bool is_mirror_twenty_weight(Weight lam) {
  const auto& tw = mirror_twenty_weights();
  return std::binary_search(tw.begin(), tw.end(), lam);
}

/// All non-far crab weights in lexicographic order; the candidate pool for
/// the exhaustive search.  Cardinality 445.
inline const std::vector<Weight>& non_far_crab_weights() {
  static const std::vector<Weight> pts = crab_points_within(far_threshold_sq());
  return pts;
}

}  // namespace rank2ec
