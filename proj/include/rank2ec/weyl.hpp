#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank2ec/root_system.hpp"
#include "rank2ec/weight.hpp"

namespace rank2ec {

/// 2x2 integer matrix, row-major, acting on omega-coordinates as a column
/// vector.
using Mat2 = std::array<int, 4>;

inline constexpr Mat2 kIdentityMat{1, 0, 0, 1};

inline Mat2 mat_mul(const Mat2& l, const Mat2& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
          l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

inline int mat_det(const Mat2& m) { return m[0] * m[3] - m[1] * m[2]; }

inline Mat2 mat_inverse(const Mat2& m) {
  const int d = mat_det(m);
  if (d != 1 && d != -1) throw std::logic_error("mat_inverse: determinant not a unit");
  return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}

inline Weight mat_apply(const Mat2& m, Weight w) {
  return {m[0] * w.a + m[1] * w.b, m[2] * w.a + m[3] * w.b};
}

/// One Weyl group element: its lexicographically least reduced word (using
/// the 1-based generator labels of the bracket notation [i1,...,ik] =
/// s_{i1}s_{i2}...s_{ik}) and its action matrix.
struct WeylElement {
  Kind kind = Kind::A2;
  std::vector<int> word;
  Mat2 matrix = kIdentityMat;

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const WeylElement& l, const WeylElement& r) {
    return l.kind == r.kind && l.matrix == r.matrix;
  }
};

inline Weight apply(const WeylElement& w, Weight lam) { return mat_apply(w.matrix, lam); }

inline std::string to_string(const WeylElement& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.word[i]);
  }
  return s + "]";
}

namespace detail {

inline Mat2 reflection_matrix(const RootSystemData& rs, int i) {
  const Weight c1 = reflect(rs, i, Weight{1, 0});
  const Weight c2 = reflect(rs, i, Weight{0, 1});
  return {c1.a, c2.a, c1.b, c2.b};
}

/// All elements, found by brute force over short words.  Canonical word is
/// the lexicographically least among the shortest; the enumeration order is
/// (length, word-read-backwards), which reproduces the bracket lists used
/// for the rank-2 groups: [], [1], [2], [2,1], [1,2], [1,2,1], ...
inline std::vector<WeylElement> enumerate_weyl(const RootSystemData& rs) {
  const Mat2 m1 = reflection_matrix(rs, 1);
  const Mat2 m2 = reflection_matrix(rs, 2);
  std::map<Mat2, std::vector<int>> best;
  best[kIdentityMat] = {};
  std::vector<std::pair<Mat2, std::vector<int>>> frontier{{kIdentityMat, {}}};
  // Rank-2 Weyl groups have at most 12 elements, so words of length <= 8
  // exhaust them with room to spare.
  for (int len = 1; len <= 8 && !frontier.empty(); ++len) {
    std::vector<std::pair<Mat2, std::vector<int>>> next;
    for (const auto& [mat, word] : frontier) {
      for (int g : {1, 2}) {
        std::vector<int> nw = word;
        nw.push_back(g);
        const Mat2 nm = mat_mul(mat, g == 1 ? m1 : m2);
        auto it = best.find(nm);
        if (it == best.end()) {
          best[nm] = nw;
          next.push_back({nm, nw});
        } else if (it->second.size() == nw.size() && nw < it->second) {
          it->second = nw;
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (const auto& [mat, word] : best) out.push_back({rs.kind, word, mat});
  std::sort(out.begin(), out.end(), [](const WeylElement& l, const WeylElement& r) {
    if (l.word.size() != r.word.size()) return l.word.size() < r.word.size();
    return std::lexicographical_compare(l.word.rbegin(), l.word.rend(), r.word.rbegin(),
                                        r.word.rend());
  });
  const std::size_t expected = rs.kind == Kind::A2      ? 6
                               : rs.kind == Kind::A1xA1 ? 4
                               : rs.kind == Kind::B2    ? 8
                                                        : 12;
  if (out.size() != expected) throw std::logic_error("enumerate_weyl: wrong group order");
  return out;
}

}  // namespace detail

inline const std::vector<WeylElement>& weyl_group(const RootSystemData& rs) {
  static const std::vector<WeylElement> a2 = detail::enumerate_weyl(build(Kind::A2));
  static const std::vector<WeylElement> a1 = detail::enumerate_weyl(build(Kind::A1xA1));
  static const std::vector<WeylElement> b2 = detail::enumerate_weyl(build(Kind::B2));
  static const std::vector<WeylElement> g2 = detail::enumerate_weyl(build(Kind::G2));
  switch (rs.kind) {
    case Kind::A2: return a2;
    case Kind::A1xA1: return a1;
    case Kind::B2: return b2;
    case Kind::G2: return g2;
  }
  throw std::invalid_argument("weyl_group: unsupported kind");
}

inline const WeylElement& longest_element(const RootSystemData& rs) {
  return weyl_group(rs).back();
}

inline int element_index(const RootSystemData& rs, const Mat2& m) {
  const auto& g = weyl_group(rs);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i].matrix == m) return static_cast<int>(i);
  throw std::logic_error("element_index: matrix not in Weyl group");
}

inline const WeylElement& element_from_word(const RootSystemData& rs,
                                            const std::vector<int>& word) {
  Mat2 m = kIdentityMat;
  for (int g : word) {
    if (g != 1 && g != 2) throw std::invalid_argument("element_from_word: bad generator");
    m = mat_mul(m, detail::reflection_matrix(rs, g));
  }
  return weyl_group(rs)[element_index(rs, m)];
}

/// Left weak Bruhat order: w <= w' iff w' = u*w with l(w') = l(u) + l(w).
inline bool left_weak_leq(const WeylElement& w, const WeylElement& wp) {
  if (w.kind != wp.kind)
    throw std::invalid_argument("left_weak_leq: elements from different root systems");
  const RootSystemData& rs = build(w.kind);
  const Mat2 u = mat_mul(wp.matrix, mat_inverse(w.matrix));
  const WeylElement& ue = weyl_group(rs)[element_index(rs, u)];
  return ue.length() + w.length() == wp.length();
}

}  // namespace rank2ec
