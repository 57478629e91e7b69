#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "rank2ec/crab.hpp"
#include "rank2ec/weight.hpp"

namespace rank2ec {

namespace svg_detail {

/// Euclidean embedding of the G2 weight lattice with the short simple root
/// along the x-axis: w1 -> (1/2, sqrt(3)/2), w2 -> (0, sqrt(3)).
struct Point {
  double x, y;
};

inline Point embed(Weight w) {
  static const double s3 = std::sqrt(3.0);
  return {0.5 * w.a, (s3 / 2.0) * w.a + s3 * w.b};
}

}  // namespace svg_detail

/// Draws the crab picture: crab lines solid, singular lines dashed, the
/// twenty weights as filled disks, crab lattice points as open circles.
/// `extent` is the Euclidean half-width of the viewport around the origin.
inline void emit_crab_svg(std::ostream& os, double extent = 16.0) {
  using svg_detail::Point;
  using svg_detail::embed;
  const double scale = 32.0;  // pixels per lattice unit
  const double half = extent * scale;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << " " << -half << " "
     << 2 * half << " " << 2 * half << "\">\n";
  os << "<rect x=\"" << -half << "\" y=\"" << -half << "\" width=\"" << 2 * half
     << "\" height=\"" << 2 * half << "\" fill=\"white\"/>\n";

  auto px = [&](Point p) { return p.x * scale; };
  auto py = [&](Point p) { return -p.y * scale; };  // flip: y grows upwards

  auto draw_line = [&](Point base, Point dir, const char* style) {
    const double len = std::hypot(dir.x, dir.y);
    const double t = (2.0 * extent) / len + 4.0;
    os << "<line x1=\"" << px({base.x - t * dir.x, base.y - t * dir.y}) << "\" y1=\""
       << py({base.x - t * dir.x, base.y - t * dir.y}) << "\" x2=\""
       << px({base.x + t * dir.x, base.y + t * dir.y}) << "\" y2=\""
       << py({base.x + t * dir.x, base.y + t * dir.y}) << "\" " << style << "/>\n";
  };

  const Point minus_rho = embed(Weight{-1, -1});
  const Point origin = embed(Weight{0, 0});
  for (int line = 0; line < kNumCrabLines; ++line) {
    const Point dir = embed(line_direction(line));
    draw_line(origin, dir, "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    draw_line(minus_rho, dir, "stroke=\"black\" stroke-width=\"1.5\"");
  }

  // Crab lattice points inside the viewport.
  const QuadraticValue bound_sq{Rational(static_cast<long long>(extent * extent * 4)),
                                Rational(0), Rational(0)};
  for (Weight w : crab_points_within(bound_sq)) {
    const Point p = embed(w);
    if (std::abs(p.x) > extent || std::abs(p.y) > extent) continue;
    os << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p)
       << "\" r=\"4\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (Weight w : twenty_weights()) {
    const Point p = embed(w);
    if (std::abs(p.x) > extent || std::abs(p.y) > extent) continue;
    os << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"4.5\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace rank2ec
