#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "rank2ec/weight.hpp"
#include "rank2ec/weyl.hpp"

namespace rank2ec {

/// Full W-orbit of a weight.
inline std::set<Weight> weyl_orbit(const RootSystemData& rs, Weight lam) {
  std::set<Weight> orbit;
  for (const auto& w : weyl_group(rs)) orbit.insert(apply(w, lam));
  return orbit;
}

/// Sparse element of the integral group ring Z[Lambda]: a finite linear
/// combination of exponentials e^{lambda}, stored as weight -> coefficient
/// with no zero entries.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  static GroupRingElement exponential(Weight lam) {
    GroupRingElement e;
    e.terms_[lam] = 1;
    return e;
  }

  const std::map<Weight, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  long long coefficient(Weight lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? 0 : it->second;
  }

  /// epsilon: sum of all coefficients (every e^{lambda} maps to 1).
  long long augmentation() const {
    long long s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  GroupRingElement& add_term(Weight lam, long long c) {
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
      if (c != 0) terms_[lam] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  friend GroupRingElement operator+(const GroupRingElement& l, const GroupRingElement& r) {
    GroupRingElement out = l;
    for (const auto& [w, c] : r.terms_) out.add_term(w, c);
    return out;
  }

  friend GroupRingElement operator-(const GroupRingElement& l, const GroupRingElement& r) {
    GroupRingElement out = l;
    for (const auto& [w, c] : r.terms_) out.add_term(w, -c);
    return out;
  }

  friend GroupRingElement operator*(const GroupRingElement& l, const GroupRingElement& r) {
    GroupRingElement out;
    for (const auto& [wl, cl] : l.terms_)
      for (const auto& [wr, cr] : r.terms_) out.add_term(wl + wr, cl * cr);
    return out;
  }

  GroupRingElement apply_weyl(const WeylElement& w) const {
    GroupRingElement out;
    for (const auto& [lam, c] : terms_) out.add_term(apply(w, lam), c);
    return out;
  }

  bool is_w_invariant(const RootSystemData& rs) const {
    for (const auto& w : weyl_group(rs))
      if (!(apply_weyl(w).terms_ == terms_)) return false;
    return true;
  }

  friend bool operator==(const GroupRingElement& l, const GroupRingElement& r) {
    return l.terms_ == r.terms_;
  }

 private:
  std::map<Weight, long long> terms_;
};

/// Sum of e^{mu} over the W-orbit of lambda; always W-invariant.
inline GroupRingElement orbit_sum(const RootSystemData& rs, Weight lam) {
  GroupRingElement out;
  for (Weight w : weyl_orbit(rs, lam)) out.add_term(w, 1);
  return out;
}

}  // namespace rank2ec
