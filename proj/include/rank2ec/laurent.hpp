#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rank2ec/rational.hpp"

namespace rank2ec {

/// Sparse integer Laurent polynomial in two variables x = e^{w1}, y = e^{w2}.
/// Terms are kept sorted by exponent pair with no zero coefficients, so
/// equality is plain vector equality.
class LaurentElement {
 public:
  struct Term {
    int ea = 0;
    int eb = 0;
    BigInt c;
    friend bool operator==(const Term& l, const Term& r) {
      return l.ea == r.ea && l.eb == r.eb && l.c == r.c;
    }
  };

  LaurentElement() = default;

  static LaurentElement monomial(int ea, int eb, BigInt c = 1) {
    LaurentElement e;
    if (c != 0) e.terms_.push_back({ea, eb, std::move(c)});
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const LaurentElement& l, const LaurentElement& r) {
    return l.terms_ == r.terms_;
  }

  friend LaurentElement operator+(const LaurentElement& l, const LaurentElement& r) {
    LaurentElement out;
    out.terms_.reserve(l.terms_.size() + r.terms_.size());
    auto a = l.terms_.begin(), ae = l.terms_.end();
    auto b = r.terms_.begin(), be = r.terms_.end();
    while (a != ae && b != be) {
      const auto ka = std::pair(a->ea, a->eb), kb = std::pair(b->ea, b->eb);
      if (ka < kb) {
        out.terms_.push_back(*a++);
      } else if (kb < ka) {
        out.terms_.push_back(*b++);
      } else {
        BigInt c = a->c + b->c;
        if (c != 0) out.terms_.push_back({a->ea, a->eb, std::move(c)});
        ++a;
        ++b;
      }
    }
    out.terms_.insert(out.terms_.end(), a, ae);
    out.terms_.insert(out.terms_.end(), b, be);
    return out;
  }

  LaurentElement operator-() const {
    LaurentElement out = *this;
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
  }

  friend LaurentElement operator-(const LaurentElement& l, const LaurentElement& r) {
    return l + (-r);
  }

  /// Shift exponents and scale: *this multiplied by c*x^ea*y^eb.
  LaurentElement shifted(int ea, int eb, const BigInt& c) const {
    LaurentElement out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.ea + ea, t.eb + eb, t.c * c});
    return out;
  }

  friend LaurentElement operator*(const LaurentElement& l, const LaurentElement& r) {
    if (l.terms_.size() == 1) return r.shifted(l.terms_[0].ea, l.terms_[0].eb, l.terms_[0].c);
    if (r.terms_.size() == 1) return l.shifted(r.terms_[0].ea, r.terms_[0].eb, r.terms_[0].c);
    std::map<std::pair<int, int>, BigInt> acc;
    for (const auto& a : l.terms_)
      for (const auto& b : r.terms_) acc[{a.ea + b.ea, a.eb + b.eb}] += a.c * b.c;
    LaurentElement out;
    for (auto& [k, c] : acc)
      if (c != 0) out.terms_.push_back({k.first, k.second, std::move(c)});
    return out;
  }

  /// Exact evaluation at nonzero rational x, y.
  Rational eval(const Rational& x, const Rational& y) const {
    if (x == 0 || y == 0) throw std::domain_error("LaurentElement::eval: zero substitution");
    auto ipow = [](const Rational& v, int e) {
      Rational base = e < 0 ? Rational(Rational(1) / v) : v;
      int n = e < 0 ? -e : e;
      Rational acc(1);
      while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
      }
      return acc;
    };
    Rational sum(0);
    for (const auto& t : terms_) sum += Rational(t.c) * ipow(x, t.ea) * ipow(y, t.eb);
    return sum;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += t.c.str() + "*x^" + std::to_string(t.ea) + "*y^" + std::to_string(t.eb);
    }
    return s;
  }

 private:
  std::vector<Term> terms_;
};

/// Exact determinant of a square matrix of Laurent elements (n <= 12).
///
/// Memoized Laplace expansion: minor(S) is the determinant of the submatrix
/// on rows 0..|S|-1 and column set S.  Layers are dropped as soon as the next
/// one is complete to bound memory.
inline LaurentElement laurent_determinant(const std::vector<std::vector<LaurentElement>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("laurent_determinant: empty matrix");
  if (n > 12) throw std::invalid_argument("laurent_determinant: size > 12");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("laurent_determinant: not square");

  std::vector<LaurentElement> minors(std::size_t(1) << n);
  minors[0] = LaurentElement::monomial(0, 0, 1);
  std::vector<std::vector<std::uint32_t>> by_pop(n + 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    by_pop[__builtin_popcount(mask)].push_back(mask);

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = k - 1;
    // Expansion along the last row: sign (-1)^{(k-1)+t} for the t-th column
    // of the mask.
    const bool row_negates = (k - 1) % 2 != 0;
    for (std::uint32_t mask : by_pop[k]) {
      LaurentElement det;
      int t = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const LaurentElement& e = m[row][j];
        if (!e.is_zero()) {
          LaurentElement contrib = e * minors[mask ^ (1u << j)];
          const bool negate = row_negates != (t % 2 != 0);
          det = negate ? det - contrib : det + contrib;
        }
        ++t;
      }
      minors[mask] = std::move(det);
    }
    if (k >= 2)
      for (std::uint32_t mask : by_pop[k - 1]) minors[mask] = LaurentElement();
  }
  return minors[(std::size_t(1) << n) - 1];
}

}  // namespace rank2ec
