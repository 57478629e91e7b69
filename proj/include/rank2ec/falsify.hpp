#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rank2ec/crab.hpp"
#include "rank2ec/quadratic.hpp"
#include "rank2ec/search.hpp"

namespace rank2ec {

/// Outcome of one bounded falsification run.  `instances_checked` counts the
/// tuples satisfying the hypothesis inside the scan region; `extremal`
/// records the attained extreme of the threshold quantity (lemma-specific,
/// see each check) so mutated thresholds can be calibrated.
struct FalsifierResult {
  std::string lemma;
  Rational radius_sq;
  long long instances_checked = 0;
  std::optional<std::vector<Weight>> counterexample;
  bool mutated = false;
  std::optional<Rational> extremal;
  std::chrono::milliseconds elapsed{0};
};

inline const std::vector<std::string>& falsifier_lemmas() {
  static const std::vector<std::string> ids = {"pts20",     "lmp", "trig", "plusrho",
                                               "crabdiff",  "dichotomy", "baa",  "aab",
                                               "aba",       "mirrorfc",  "triplet"};
  return ids;
}

namespace falsify_detail {

struct CrabPoint {
  Weight w;
  unsigned mask = 0;     // crab lines through w
  long long nsq = 0;     // |w + rho|^2
};

struct Scan {
  Rational radius_sq;
  std::vector<CrabPoint> pts;                              // lex order
  std::array<std::vector<int>, kNumCrabLines> on_line;     // indices per line
};

inline Scan build_scan(const Rational& radius_sq) {
  Scan s;
  s.radius_sq = radius_sq;
  std::set<Weight> seen;
  for (int line = 0; line < kNumCrabLines; ++line) {
    const Weight d = line_direction(line);
    const long long step = g2_norm_sq(d);
    for (long long t = 0;; ++t) {
      if (Rational(step * t * t) > radius_sq) break;
      seen.insert(Weight{-1, -1} + static_cast<int>(t) * d);
      seen.insert(Weight{-1, -1} - static_cast<int>(t) * d);
    }
  }
  for (Weight w : seen) s.pts.push_back({w, crab_line_mask(w), g2_norm_sq(w + kRho)});
  for (int i = 0; i < static_cast<int>(s.pts.size()); ++i)
    for (int line = 0; line < kNumCrabLines; ++line)
      if (s.pts[i].mask & (1u << line)) s.on_line[line].push_back(i);
  return s;
}

/// All numeric bounds in the lemma statements, kept in one place so the
/// mutation harness can corrupt exactly one of them.
struct Thresholds {
  bool pts20_enforce_norm = false;         // mutated: additionally cap |c-b|^2
  Rational pts20_norm_bound = Rational(26);
  Rational lmp_bound = Rational(27);                                  // (3 sqrt 3)^2
  QuadraticValue trig_factor{Rational(28), Rational(-16), Rational(3)};  // (2(2-sqrt3))^2
  Rational plusrho_bound = Rational(5929, 100);                       // 7.7^2
  Rational crabdiff_bound = Rational(5929, 100);                      // 7.7^2
  Rational dichotomy_bound = Rational(108);                           // (6 sqrt 3)^2
  Rational baa_bound = Rational(1764);  // 42^2: the near bound the statement needs
  Rational aab_near_bound = Rational(1764);                           // 42^2
  QuadraticValue far_bound = far_threshold_sq();  // aba/triplet far hypothesis
  Rational mirrorfc_bound = Rational(27);                             // (3 sqrt 3)^2
};

inline Thresholds mutated_thresholds(std::string_view lemma) {
  Thresholds t;
  if (lemma == "pts20") {
    t.pts20_enforce_norm = true;  // one below the attained maximum 27
  } else if (lemma == "lmp") {
    t.lmp_bound = Rational(26);
  } else if (lemma == "trig") {
    t.trig_factor = QuadraticValue{Rational(29), Rational(-16), Rational(3)};
  } else if (lemma == "plusrho") {
    t.plusrho_bound = Rational(26);  // one below the attained maximum 27
  } else if (lemma == "crabdiff") {
    t.crabdiff_bound = Rational(26);  // one below the attained maximum 27
  } else if (lemma == "dichotomy") {
    t.dichotomy_bound = Rational(107);  // one below the attained maximum 108
  } else if (lemma == "baa") {
    t.baa_bound = Rational(674);  // one below the attained maximum 675
  } else if (lemma == "aab") {
    t.aab_near_bound = Rational(431);  // one below the attained maximum 432
  } else if (lemma == "aba" || lemma == "triplet") {
    t.far_bound = QuadraticValue::from_rational(Rational(108));  // (6 sqrt 3)^2
  } else if (lemma == "mirrorfc") {
    t.mirrorfc_bound = Rational(26);  // one below the attained maximum 27
  } else {
    throw std::invalid_argument("unknown lemma id: " + std::string(lemma));
  }
  return t;
}

inline bool far_by(const Thresholds& th, Weight w) {
  return rational_gt(Rational(g2_norm_sq(w + kRho)), th.far_bound);
}

// ---------------------------------------------------------------------------
// Hypothesis / conclusion predicates.  Tuples are ordered as documented on
// each check; the enumerators below only ever emit hypothesis-true tuples,
// and re-verification calls the same predicates.
// ---------------------------------------------------------------------------

/// pts20, tuple (b, c): 0, b, c exceptional with b, c on one crab line.
inline bool pts20_hypothesis(Weight b, Weight c) {
  return b != c && is_in_crab(b) && is_in_crab(c) &&
         (crab_line_mask(b) & crab_line_mask(c)) != 0 && detail::g2_ext_vanishes(b, c);
}
inline bool pts20_conclusion(const Thresholds& th, Weight b, Weight c) {
  const unsigned shared = crab_line_mask(b) & crab_line_mask(c);
  if (!is_twenty_weight(c - b)) return false;
  for (int line = 0; line < kNumCrabLines; ++line)
    if ((shared & (1u << line)) && !on_singular_line(line, c - b)) return false;
  if (th.pts20_enforce_norm && Rational(g2_norm_sq(c - b)) > th.pts20_norm_bound) return false;
  return true;
}

/// lmp, tuple (b, c): same hypothesis; the pair sits within 3 sqrt 3.
inline bool lmp_conclusion(const Thresholds& th, Weight b, Weight c) {
  return Rational(g2_norm_sq(c - b)) <= th.lmp_bound;
}

/// trig, tuple (x, y): crab weights closer than 2(2-sqrt3) R with R their
/// smaller distance from -rho.
inline bool trig_hypothesis(const Thresholds& th, Weight x, Weight y) {
  if (x == y || !is_in_crab(x) || !is_in_crab(y)) return false;
  const Rational rsq(std::min(g2_norm_sq(x + kRho), g2_norm_sq(y + kRho)));
  // |x - y|^2 < factor * R^2, exactly.
  return compare_rational_vs_quadratic(Rational(g2_norm_sq(x - y)), rsq * th.trig_factor) ==
         std::strong_ordering::less;
}
inline bool trig_conclusion(Weight x, Weight y) {
  return (crab_line_mask(x) & crab_line_mask(y)) != 0;
}

/// plusrho, tuple (lambda): lambda and lambda + rho both in the crab and
/// |lambda + rho| > 7.7 force a common crab line.
inline bool plusrho_hypothesis(const Thresholds& th, Weight lam) {
  return is_in_crab(lam) && is_in_crab(lam + kRho) &&
         Rational(g2_norm_sq(lam + kRho)) > th.plusrho_bound;
}
inline bool plusrho_conclusion(Weight lam) {
  return (crab_line_mask(lam) & crab_line_mask(lam + kRho)) != 0;
}

/// crabdiff, tuple (a, b): a and b - a on a common crab line A.  Then b + rho
/// is on A, and if b is in the crab with |b + rho| > 7.7 so is b itself.
inline bool crabdiff_hypothesis(Weight a, Weight b) {
  return (crab_line_mask(a) & crab_line_mask(b - a)) != 0;
}
inline bool crabdiff_conclusion(const Thresholds& th, Weight a, Weight b) {
  const unsigned shared = crab_line_mask(a) & crab_line_mask(b - a);
  const bool second_applies =
      is_in_crab(b) && Rational(g2_norm_sq(b + kRho)) > th.crabdiff_bound;
  for (int line = 0; line < kNumCrabLines; ++line) {
    if (!(shared & (1u << line))) continue;
    if (g2().coroots[line](b + kRho + kRho) != 0) return false;  // b + rho off A
    if (second_applies && !on_crab_line(line, b)) return false;
  }
  return true;
}

/// The unique singular line through a twenty weight.
inline int singular_line_of(Weight mu) {
  for (int line = 0; line < kNumCrabLines; ++line)
    if (on_singular_line(line, mu)) return line;
  throw std::logic_error("singular_line_of: weight is regular");
}

/// dichotomy, tuple (mu, lambda): 0, mu, lambda exceptional.
inline bool dichotomy_hypothesis(Weight mu, Weight lam) {
  return mu != lam && is_in_crab(mu) && is_in_crab(lam) && detail::g2_ext_vanishes(mu, lam);
}
inline bool dichotomy_conclusion(const Thresholds& th, Weight mu, Weight lam) {
  if (is_twenty_weight(mu)) {
    if (Rational(g2_norm_sq(lam + kRho)) <= th.dichotomy_bound) return true;
    return on_crab_line(singular_line_of(mu), lam);
  }
  return Rational(g2_norm_sq(lam + kRho)) < Rational(9 * g2_norm_sq(mu));
}

/// baa, tuple (b, a1, a2): 0, b, a1, a2 exceptional, a1 and a2 on a common
/// crab line, b off every crab line of a1 and off the parallel singular
/// line.  Conclusion: all three near.  (The parenthetical "within 21.1"
/// refinement is recorded through `extremal`, not enforced: the bounded scan
/// exhibits instances out to distance sqrt(675), which is why the near bound
/// is the one the downstream arguments rely on.)
inline bool baa_hypothesis(Weight b, Weight a1, Weight a2) {
  if (a1 == a2 || b == a1 || b == a2) return false;
  if (!is_in_crab(b) || !is_in_crab(a1) || !is_in_crab(a2)) return false;
  const unsigned shared = crab_line_mask(a1) & crab_line_mask(a2);
  if (shared == 0) return false;
  if ((crab_line_mask(b) & crab_line_mask(a1)) != 0) return false;
  for (int line = 0; line < kNumCrabLines; ++line)
    if ((shared & (1u << line)) && on_singular_line(line, b)) return false;
  return detail::g2_ext_vanishes(b, a1) && detail::g2_ext_vanishes(b, a2) &&
         detail::g2_ext_vanishes(a1, a2);
}
inline bool baa_conclusion(const Thresholds& th, Weight b, Weight a1, Weight a2) {
  for (Weight x : {b, a1, a2})
    if (Rational(g2_norm_sq(x + kRho)) > th.baa_bound) return false;
  return true;
}

/// aab, tuple (a1, a2, b): 0, a1, a2, b exceptional, a1 and a2 on a common
/// crab line, b on a different one.  Conclusion: at least one is near.
inline bool aab_hypothesis(Weight a1, Weight a2, Weight b) {
  if (a1 == a2 || b == a1 || b == a2) return false;
  if (!is_in_crab(b) || !is_in_crab(a1) || !is_in_crab(a2)) return false;
  const unsigned shared = crab_line_mask(a1) & crab_line_mask(a2);
  if (shared == 0) return false;
  if ((crab_line_mask(b) & shared) != 0) return false;
  return detail::g2_ext_vanishes(a1, a2) && detail::g2_ext_vanishes(a1, b) &&
         detail::g2_ext_vanishes(a2, b);
}
inline bool aab_conclusion(const Thresholds& th, Weight a1, Weight a2, Weight b) {
  for (Weight x : {a1, a2, b})
    if (Rational(g2_norm_sq(x + kRho)) <= th.aab_near_bound) return true;
  return false;
}

/// aba, tuple (a1, b, a2): 0, a1, b, a2 exceptional far weights, a1 and a2 on
/// a common crab line, b on a different one.
inline bool aba_hypothesis(const Thresholds& th, Weight a1, Weight b, Weight a2) {
  if (a1 == a2 || b == a1 || b == a2) return false;
  if (!is_in_crab(b) || !is_in_crab(a1) || !is_in_crab(a2)) return false;
  if (!far_by(th, a1) || !far_by(th, b) || !far_by(th, a2)) return false;
  const unsigned shared = crab_line_mask(a1) & crab_line_mask(a2);
  if (shared == 0 || (crab_line_mask(b) & shared) != 0) return false;
  return detail::g2_ext_vanishes(a1, b) && detail::g2_ext_vanishes(a1, a2) &&
         detail::g2_ext_vanishes(b, a2);
}

/// Extensions of 0, a1, b, a2 by one crab weight mu at any position.
inline bool aba_extension_works(Weight a1, Weight b, Weight a2, Weight mu) {
  if (mu == a1 || mu == b || mu == a2 || !is_in_crab(mu)) return false;
  auto ev = [](Weight x, Weight y) { return detail::g2_ext_vanishes(x, y); };
  // 0, mu, a1, b, a2
  if (ev(mu, a1) && ev(mu, b) && ev(mu, a2)) return true;
  // 0, a1, mu, b, a2
  if (ev(a1, mu) && ev(mu, b) && ev(mu, a2)) return true;
  // 0, a1, b, mu, a2
  if (ev(a1, mu) && ev(b, mu) && ev(mu, a2)) return true;
  // 0, a1, b, a2, mu
  if (ev(a1, mu) && ev(b, mu) && ev(a2, mu)) return true;
  return false;
}

/// Bounded maximality: no extension by any crab weight of the scan region.
inline bool aba_conclusion(const Scan& scan, Weight a1, Weight b, Weight a2) {
  for (const CrabPoint& p : scan.pts)
    if (aba_extension_works(a1, b, a2, p.w)) return false;
  return true;
}

/// triplet, tuple (a1, a2, b): far weights as in aba.  Conclusion: the BAA
/// and AAB orders are impossible, and the ABA order is maximal when it is
/// exceptional.
inline bool triplet_hypothesis(const Thresholds& th, Weight a1, Weight a2, Weight b) {
  if (a1 == a2 || b == a1 || b == a2) return false;
  if (!is_in_crab(b) || !is_in_crab(a1) || !is_in_crab(a2)) return false;
  if (!far_by(th, a1) || !far_by(th, b) || !far_by(th, a2)) return false;
  const unsigned shared = crab_line_mask(a1) & crab_line_mask(a2);
  return shared != 0 && (crab_line_mask(b) & shared) == 0;
}
inline bool triplet_conclusion(const Scan& scan, Weight a1, Weight a2, Weight b) {
  auto ev = [](Weight x, Weight y) { return detail::g2_ext_vanishes(x, y); };
  // (1) neither 0, b, a1, a2 nor 0, a1, a2, b is exceptional.
  if (ev(b, a1) && ev(b, a2) && ev(a1, a2)) return false;
  if (ev(a1, a2) && ev(a1, b) && ev(a2, b)) return false;
  // (2) 0, a1, b, a2, when exceptional, is maximal.
  if (ev(a1, b) && ev(a1, a2) && ev(b, a2) && !aba_conclusion(scan, a1, b, a2)) return false;
  return true;
}

/// mirrorfc, tuple (lambda, mu): 0, lambda, mu exceptional with
/// |lambda| >= 2.9 |mu + rho| + 7.6 (lambda = -rho excluded: it determines no
/// single crab line).  Conclusion: mu is a mirror twenty weight on the mirror
/// singular line parallel to lambda's crab line.
inline bool mirrorfc_hypothesis(Weight lam, Weight mu) {
  if (lam == mu || lam == Weight{-1, -1}) return false;
  if (!is_in_crab(lam) || !is_in_crab(mu) || !detail::g2_ext_vanishes(lam, mu)) return false;
  const Rational a(g2_norm_sq(lam));
  const Rational b(g2_norm_sq(mu + kRho));
  // |lam| >= 2.9 |mu+rho| + 7.6, compared on squares:
  // a >= 8.41 b + 57.76 + 44.08 sqrt(b).
  const QuadraticValue rhs{Rational(841, 100) * b + Rational(5776, 100), Rational(4408, 100), b};
  return compare_rational_vs_quadratic(a, rhs) != std::strong_ordering::less;
}
inline bool mirrorfc_conclusion(const Thresholds& th, Weight lam, Weight mu) {
  if (!is_mirror_twenty_weight(mu)) return false;
  const auto lines = crab_lines_of(lam);
  for (int line : lines)
    if (!on_mirror_singular_line(line, mu)) return false;
  return Rational(g2_norm_sq(mu + kRho)) <= th.mirrorfc_bound;
}

// ---------------------------------------------------------------------------
// Enumerators.
// ---------------------------------------------------------------------------

struct RunState {
  long long instances = 0;
  std::optional<std::vector<Weight>> counterexample;
  Rational extremal = Rational(-1);

  void bump(const Rational& v) {
    if (extremal < 0 || v > extremal) extremal = v;
  }
  void fail(std::vector<Weight> tuple) {
    if (!counterexample) counterexample = std::move(tuple);
  }
};

inline void run_pair_on_lines(const Scan& scan, const Thresholds& th, bool lmp_mode,
                              RunState& st) {
  // (b, c) ordered pairs sharing a crab line; a pair sharing several lines
  // (one endpoint -rho) is one instance.
  for (int i = 0; i < static_cast<int>(scan.pts.size()); ++i) {
    const CrabPoint& b = scan.pts[i];
    for (const CrabPoint& c : scan.pts) {
      if (b.w == c.w || (b.mask & c.mask) == 0) continue;
      if (!detail::g2_ext_vanishes(b.w, c.w)) continue;
      ++st.instances;
      st.bump(Rational(g2_norm_sq(c.w - b.w)));
      const bool ok = lmp_mode ? lmp_conclusion(th, b.w, c.w) : pts20_conclusion(th, b.w, c.w);
      if (!ok) {
        st.fail({b.w, c.w});
        return;
      }
    }
  }
}

inline void run_trig(const Scan& scan, const Thresholds& th, RunState& st) {
  // Cheap double-precision reject before the exact comparison, with margin.
  const double factor = th.trig_factor.a.convert_to<double>() +
                        th.trig_factor.b.convert_to<double>() *
                            std::sqrt(th.trig_factor.q.convert_to<double>());
  for (std::size_t i = 0; i < scan.pts.size(); ++i)
    for (std::size_t j = i + 1; j < scan.pts.size(); ++j) {
      const CrabPoint& x = scan.pts[i];
      const CrabPoint& y = scan.pts[j];
      const double rs = static_cast<double>(std::min(x.nsq, y.nsq));
      if (static_cast<double>(g2_norm_sq(x.w - y.w)) > (factor + 0.01) * rs + 1.0) continue;
      if (!trig_hypothesis(th, x.w, y.w)) continue;
      ++st.instances;
      if (!trig_conclusion(x.w, y.w)) {
        st.fail({x.w, y.w});
        return;
      }
    }
}

inline void run_plusrho(const Scan& scan, const Thresholds& th, RunState& st) {
  for (const CrabPoint& p : scan.pts) {
    if (!is_in_crab(p.w + kRho)) continue;
    st.bump(Rational(p.nsq));  // attained |lambda+rho|^2 over the unbounded hypothesis
    if (!plusrho_hypothesis(th, p.w)) continue;
    ++st.instances;
    if (!plusrho_conclusion(p.w)) {
      st.fail({p.w});
      return;
    }
  }
}

inline void run_crabdiff(const Scan& scan, const Thresholds& th, RunState& st) {
  for (int line = 0; line < kNumCrabLines; ++line) {
    for (int ia : scan.on_line[line]) {
      const Weight a = scan.pts[ia].w;
      for (int ic : scan.on_line[line]) {
        const Weight b = a + scan.pts[ic].w;  // b - a = c on the same line
        if (!crabdiff_hypothesis(a, b)) continue;
        ++st.instances;
        if (is_in_crab(b) && !on_crab_line(line, b))
          st.bump(Rational(g2_norm_sq(b + kRho)));
        if (!crabdiff_conclusion(th, a, b)) {
          st.fail({a, b});
          return;
        }
      }
    }
  }
}

inline void run_dichotomy(const Scan& scan, const Thresholds& th, RunState& st) {
  for (const CrabPoint& mu : scan.pts) {
    const bool twenty = is_twenty_weight(mu.w);
    const int sing_line = twenty ? singular_line_of(mu.w) : -1;
    for (const CrabPoint& lam : scan.pts) {
      if (mu.w == lam.w || !detail::g2_ext_vanishes(mu.w, lam.w)) continue;
      ++st.instances;
      if (twenty && !on_crab_line(sing_line, lam.w)) st.bump(Rational(lam.nsq));
      if (!dichotomy_conclusion(th, mu.w, lam.w)) {
        st.fail({mu.w, lam.w});
        return;
      }
    }
  }
}

inline void run_baa(const Scan& scan, const Thresholds& th, RunState& st) {
  for (int line = 0; line < kNumCrabLines; ++line) {
    for (int i1 : scan.on_line[line]) {
      for (int i2 : scan.on_line[line]) {
        const Weight a1 = scan.pts[i1].w, a2 = scan.pts[i2].w;
        if (a1 == a2 || !detail::g2_ext_vanishes(a1, a2)) continue;
        for (const CrabPoint& b : scan.pts) {
          if (!baa_hypothesis(b.w, a1, a2)) continue;
          ++st.instances;
          for (Weight x : {b.w, a1, a2}) st.bump(Rational(g2_norm_sq(x + kRho)));
          if (!baa_conclusion(th, b.w, a1, a2)) {
            st.fail({b.w, a1, a2});
            return;
          }
        }
      }
    }
  }
}

inline void run_aab(const Scan& scan, const Thresholds& th, RunState& st) {
  // extremal: the largest per-instance minimum distance, i.e. the least
  // near-bound that would still make the conclusion hold everywhere.
  for (int line = 0; line < kNumCrabLines; ++line) {
    for (int i1 : scan.on_line[line]) {
      for (int i2 : scan.on_line[line]) {
        const Weight a1 = scan.pts[i1].w, a2 = scan.pts[i2].w;
        if (a1 == a2 || !detail::g2_ext_vanishes(a1, a2)) continue;
        for (const CrabPoint& b : scan.pts) {
          if (!aab_hypothesis(a1, a2, b.w)) continue;
          ++st.instances;
          long long best = g2_norm_sq(a1 + kRho);
          best = std::min(best, g2_norm_sq(a2 + kRho));
          best = std::min(best, b.nsq);
          st.bump(Rational(best));
          if (!aab_conclusion(th, a1, a2, b.w)) {
            st.fail({a1, a2, b.w});
            return;
          }
        }
      }
    }
  }
}

/// Far flags for every scan point under the active threshold, so the
/// quadratic-irrational comparison leaves the hot loops.
inline std::vector<char> far_flags(const Scan& scan, const Thresholds& th) {
  std::vector<char> flags(scan.pts.size());
  for (std::size_t i = 0; i < scan.pts.size(); ++i)
    flags[i] = rational_gt(Rational(scan.pts[i].nsq), th.far_bound) ? 1 : 0;
  return flags;
}

inline void run_aba(const Scan& scan, const Thresholds& th, RunState& st) {
  const std::vector<char> far = far_flags(scan, th);
  for (int line = 0; line < kNumCrabLines; ++line) {
    for (int i1 : scan.on_line[line]) {
      if (!far[i1]) continue;
      for (int i2 : scan.on_line[line]) {
        if (!far[i2] || i1 == i2) continue;
        const Weight a1 = scan.pts[i1].w, a2 = scan.pts[i2].w;
        const unsigned shared = scan.pts[i1].mask & scan.pts[i2].mask;
        if (!detail::g2_ext_vanishes(a1, a2)) continue;
        for (std::size_t ib = 0; ib < scan.pts.size(); ++ib) {
          const CrabPoint& b = scan.pts[ib];
          if (!far[ib] || (b.mask & shared) != 0 || b.w == a1 || b.w == a2) continue;
          if (!detail::g2_ext_vanishes(a1, b.w) || !detail::g2_ext_vanishes(b.w, a2)) continue;
          ++st.instances;
          if (!aba_conclusion(scan, a1, b.w, a2)) {
            for (const CrabPoint& p : scan.pts)
              if (aba_extension_works(a1, b.w, a2, p.w)) {
                st.fail({a1, b.w, a2, p.w});
                return;
              }
          }
        }
      }
    }
  }
}

inline void run_triplet(const Scan& scan, const Thresholds& th, RunState& st) {
  const std::vector<char> far = far_flags(scan, th);
  for (int line = 0; line < kNumCrabLines; ++line) {
    for (int i1 : scan.on_line[line]) {
      if (!far[i1]) continue;
      for (int i2 : scan.on_line[line]) {
        if (!far[i2] || i1 == i2) continue;
        const Weight a1 = scan.pts[i1].w, a2 = scan.pts[i2].w;
        const unsigned shared = scan.pts[i1].mask & scan.pts[i2].mask;
        for (std::size_t ib = 0; ib < scan.pts.size(); ++ib) {
          const CrabPoint& b = scan.pts[ib];
          if (!far[ib] || (b.mask & shared) != 0 || b.w == a1 || b.w == a2) continue;
          ++st.instances;
          if (!triplet_conclusion(scan, a1, a2, b.w)) {
            st.fail({a1, a2, b.w});
            return;
          }
        }
      }
    }
  }
}

inline void run_mirrorfc(const Scan& scan, const Thresholds& th, RunState& st) {
  for (const CrabPoint& lam : scan.pts) {
    if (lam.w == Weight{-1, -1}) continue;
    for (const CrabPoint& mu : scan.pts) {
      if (lam.w == mu.w || !detail::g2_ext_vanishes(lam.w, mu.w)) continue;
      if (!mirrorfc_hypothesis(lam.w, mu.w)) continue;
      ++st.instances;
      st.bump(Rational(mu.nsq));
      if (!mirrorfc_conclusion(th, lam.w, mu.w)) {
        st.fail({lam.w, mu.w});
        return;
      }
    }
  }
}

}  // namespace falsify_detail

/// Re-verifies a counterexample tuple against the lemma predicate: true iff
/// the hypothesis holds and the conclusion fails (a genuine witness).
inline bool counterexample_reverifies(std::string_view lemma, const std::vector<Weight>& t,
                                      const Rational& radius_sq, bool mutated = false) {
  using namespace falsify_detail;
  const Thresholds th = mutated ? mutated_thresholds(lemma) : Thresholds{};
  if (lemma == "pts20")
    return t.size() == 2 && pts20_hypothesis(t[0], t[1]) && !pts20_conclusion(th, t[0], t[1]);
  if (lemma == "lmp")
    return t.size() == 2 && pts20_hypothesis(t[0], t[1]) && !lmp_conclusion(th, t[0], t[1]);
  if (lemma == "trig")
    return t.size() == 2 && trig_hypothesis(th, t[0], t[1]) && !trig_conclusion(t[0], t[1]);
  if (lemma == "plusrho")
    return t.size() == 1 && plusrho_hypothesis(th, t[0]) && !plusrho_conclusion(t[0]);
  if (lemma == "crabdiff")
    return t.size() == 2 && crabdiff_hypothesis(t[0], t[1]) &&
           !crabdiff_conclusion(th, t[0], t[1]);
  if (lemma == "dichotomy")
    return t.size() == 2 && dichotomy_hypothesis(t[0], t[1]) &&
           !dichotomy_conclusion(th, t[0], t[1]);
  if (lemma == "baa")
    return t.size() == 3 && baa_hypothesis(t[0], t[1], t[2]) &&
           !baa_conclusion(th, t[0], t[1], t[2]);
  if (lemma == "aab")
    return t.size() == 3 && aab_hypothesis(t[0], t[1], t[2]) &&
           !aab_conclusion(th, t[0], t[1], t[2]);
  if (lemma == "aba")
    return t.size() == 4 && aba_hypothesis(th, t[0], t[1], t[2]) &&
           aba_extension_works(t[0], t[1], t[2], t[3]);
  if (lemma == "triplet") {
    if (t.size() != 3) return false;
    const Scan scan = build_scan(radius_sq);
    return triplet_hypothesis(th, t[0], t[1], t[2]) && !triplet_conclusion(scan, t[0], t[1], t[2]);
  }
  if (lemma == "mirrorfc")
    return t.size() == 2 && mirrorfc_hypothesis(t[0], t[1]) &&
           !mirrorfc_conclusion(th, t[0], t[1]);
  throw std::invalid_argument("unknown lemma id: " + std::string(lemma));
}

/// Bounded-exhaustive falsification of one lemma over all lattice instances
/// whose crab-resident weights satisfy |w + rho|^2 <= radius_sq.  Returns the
/// first counterexample in canonical enumeration order, if any.
inline FalsifierResult falsify(std::string_view lemma, const Rational& radius_sq, int jobs = 1,
                               bool mutated = false) {
  using namespace falsify_detail;
  (void)jobs;  // the scans are small enough to run on one thread
  const auto t0 = std::chrono::steady_clock::now();
  const Thresholds th = mutated ? mutated_thresholds(lemma) : Thresholds{};
  const Scan scan = build_scan(radius_sq);

  RunState st;
  if (lemma == "pts20") {
    run_pair_on_lines(scan, th, /*lmp_mode=*/false, st);
  } else if (lemma == "lmp") {
    run_pair_on_lines(scan, th, /*lmp_mode=*/true, st);
  } else if (lemma == "trig") {
    run_trig(scan, th, st);
  } else if (lemma == "plusrho") {
    run_plusrho(scan, th, st);
  } else if (lemma == "crabdiff") {
    run_crabdiff(scan, th, st);
  } else if (lemma == "dichotomy") {
    run_dichotomy(scan, th, st);
  } else if (lemma == "baa") {
    run_baa(scan, th, st);
  } else if (lemma == "aab") {
    run_aab(scan, th, st);
  } else if (lemma == "aba") {
    run_aba(scan, th, st);
  } else if (lemma == "triplet") {
    run_triplet(scan, th, st);
  } else if (lemma == "mirrorfc") {
    run_mirrorfc(scan, th, st);
  } else {
    throw std::invalid_argument("unknown lemma id: " + std::string(lemma));
  }

  FalsifierResult res;
  res.lemma = std::string(lemma);
  res.radius_sq = radius_sq;
  res.instances_checked = st.instances;
  res.counterexample = st.counterexample;
  res.mutated = mutated;
  if (st.extremal >= 0) res.extremal = st.extremal;
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  if (res.counterexample &&
      !counterexample_reverifies(lemma, *res.counterexample, radius_sq, mutated))
    throw std::logic_error("falsify: counterexample failed re-verification");
  return res;
}

inline FalsifierResult falsify_mutated(std::string_view lemma, const Rational& radius_sq,
                                       int jobs = 1) {
  return falsify(lemma, radius_sq, jobs, /*mutated=*/true);
}

}  // namespace rank2ec
