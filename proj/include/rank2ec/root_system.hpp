#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rank2ec/rational.hpp"
#include "rank2ec/weight.hpp"

namespace rank2ec {

enum class Kind { A2, A1xA1, B2, G2 };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::A2: return "a2";
    case Kind::A1xA1: return "a1xa1";
    case Kind::B2: return "b2";
    case Kind::G2: return "g2";
  }
  throw std::logic_error("to_string(Kind)");
}

inline Kind parse_kind(std::string_view s) {
  if (s == "a2") return Kind::A2;
  if (s == "a1xa1") return Kind::A1xA1;
  if (s == "b2") return Kind::B2;
  if (s == "g2") return Kind::G2;
  throw std::invalid_argument("unsupported root system kind: '" + std::string(s) + "'");
}

/// Integer linear form alpha^vee: (a, b) -> u*a + v*b.
struct CorootFunctional {
  int u = 0;
  int v = 0;
  constexpr int operator()(Weight w) const { return u * w.a + v * w.b; }
  constexpr bool operator==(const CorootFunctional&) const = default;
};

/// Fixed combinatorial data of one rank-2 root system, everything expressed
/// in fundamental-weight coordinates.  simple_roots[i] is the i-th Cartan
/// row, i.e. alpha_{i+1} written in the omega basis.
struct RootSystemData {
  Kind kind = Kind::A2;
  std::array<Weight, 2> simple_roots{};
  std::vector<Weight> positive_roots;
  std::vector<CorootFunctional> coroots;  // aligned with positive_roots
  std::array<std::array<Rational, 2>, 2> gram{};
  Weight rho = kRho;
};

inline Rational inner_product(const RootSystemData& rs, Weight x, Weight y) {
  return Rational(x.a) * (rs.gram[0][0] * y.a + rs.gram[0][1] * y.b) +
         Rational(x.b) * (rs.gram[1][0] * y.a + rs.gram[1][1] * y.b);
}

inline Rational norm_sq(const RootSystemData& rs, Weight w) { return inner_product(rs, w, w); }

inline bool is_dominant(Weight w) { return w.a >= 0 && w.b >= 0; }

inline bool is_singular(const RootSystemData& rs, Weight w) {
  for (const auto& f : rs.coroots)
    if (f(w) == 0) return true;
  return false;
}

/// s_i(w) = w - alpha_i^vee(w) * alpha_i; generator index is 1-based.
inline Weight reflect(const RootSystemData& rs, int i, Weight w) {
  if (i != 1 && i != 2) throw std::invalid_argument("reflect: generator index must be 1 or 2");
  const int coeff = (i == 1) ? w.a : w.b;
  return w - coeff * rs.simple_roots[i - 1];
}

namespace detail {

inline RootSystemData make_root_system(Kind kind) {
  RootSystemData rs;
  rs.kind = kind;
  auto q = [](long long n, long long d) { return Rational(n, d); };
  switch (kind) {
    case Kind::A2:
      rs.simple_roots = {Weight{2, -1}, Weight{-1, 2}};
      rs.positive_roots = {{2, -1}, {-1, 2}, {1, 1}};
      rs.coroots = {{1, 0}, {0, 1}, {1, 1}};
      rs.gram = {{{q(2, 3), q(1, 3)}, {q(1, 3), q(2, 3)}}};
      break;
    case Kind::A1xA1:
      rs.simple_roots = {Weight{2, 0}, Weight{0, 2}};
      rs.positive_roots = {{2, 0}, {0, 2}};
      rs.coroots = {{1, 0}, {0, 1}};
      rs.gram = {{{q(1, 2), q(0, 1)}, {q(0, 1), q(1, 2)}}};
      break;
    case Kind::B2:
      rs.simple_roots = {Weight{2, -1}, Weight{-2, 2}};
      rs.positive_roots = {{2, -1}, {-2, 2}, {0, 1}, {2, 0}};
      rs.coroots = {{1, 0}, {0, 1}, {1, 2}, {1, 1}};
      rs.gram = {{{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 1)}}};
      break;
    case Kind::G2:
      rs.simple_roots = {Weight{2, -1}, Weight{-3, 2}};
      rs.positive_roots = {{2, -1}, {-3, 2}, {-1, 1}, {1, 0}, {3, -1}, {0, 1}};
      rs.coroots = {{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
      rs.gram = {{{q(1, 1), q(3, 2)}, {q(3, 2), q(3, 1)}}};
      break;
  }

  // Self-check: each stored functional must agree with 2(alpha,.)/(alpha,alpha)
  // computed from the Gram matrix, and the simple coroots must be dual to the
  // fundamental weights.
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const Weight alpha = rs.positive_roots[i];
    const Rational len = norm_sq(rs, alpha);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        const Weight lam{a, b};
        if (Rational(2) * inner_product(rs, alpha, lam) != len * rs.coroots[i](lam))
          throw std::logic_error("root system self-check failed: coroot functional");
      }
  }
  if (rs.coroots[0](Weight{1, 0}) != 1 || rs.coroots[0](Weight{0, 1}) != 0 ||
      rs.coroots[1](Weight{1, 0}) != 0 || rs.coroots[1](Weight{0, 1}) != 1)
    throw std::logic_error("root system self-check failed: duality");
  return rs;
}

}  // namespace detail

inline const RootSystemData& build(Kind kind) {
  static const RootSystemData a2 = detail::make_root_system(Kind::A2);
  static const RootSystemData a1xa1 = detail::make_root_system(Kind::A1xA1);
  static const RootSystemData b2 = detail::make_root_system(Kind::B2);
  static const RootSystemData g2 = detail::make_root_system(Kind::G2);
  switch (kind) {
    case Kind::A2: return a2;
    case Kind::A1xA1: return a1xa1;
    case Kind::B2: return b2;
    case Kind::G2: return g2;
  }
  throw std::invalid_argument("build: unsupported kind");
}

}  // namespace rank2ec
