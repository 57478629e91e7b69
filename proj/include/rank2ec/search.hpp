#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rank2ec/crab.hpp"
#include "rank2ec/exceptional.hpp"
#include "rank2ec/root_system.hpp"
#include "rank2ec/weight.hpp"

namespace rank2ec {

struct SearchReport {
  std::string fact;
  long long candidate_count = 0;
  long long maximal_collection_count = 0;
  int max_length = 0;
  std::vector<Collection> violations;
  std::optional<Weight> line_root;  // set for the per-line reports
  std::chrono::milliseconds elapsed{0};
};

namespace detail {

template <class Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

inline bool g2_singular(Weight w) {
  return w.a == 0 || w.b == 0 || w.a + 3 * w.b == 0 || 2 * w.a + 3 * w.b == 0 ||
         w.a + w.b == 0 || w.a + 2 * w.b == 0;
}

/// Ext*(L(b), L(c)) = 0 in the G2 lattice, inlined for the search loops.
inline bool g2_ext_vanishes(Weight b, Weight c) { return g2_singular(c - b + kRho); }

/// Depth-first enumeration in the order of the published procedure: at each
/// node pick every remaining candidate in list order, then keep only the
/// later candidates d with d - c + rho singular.  A chain is emitted when the
/// pool runs dry, which is exactly maximality relative to the pool.
///
/// on_node(prefix) is invoked for every tree node (prefix includes the fixed
/// stem); on_maximal(prefix) for every emitted chain.  scratch must hold one
/// slot per possible depth before the call: references into it are live
/// across the recursion, so it must never reallocate.
template <class OnMaximal, class OnNode>
void g2_dfs(std::vector<Weight>& prefix, const std::vector<Weight>& pool,
            std::vector<std::vector<Weight>>& scratch, std::size_t depth, OnMaximal&& on_maximal,
            OnNode&& on_node) {
  on_node(prefix);
  if (pool.empty()) {
    on_maximal(prefix);
    return;
  }
  std::vector<Weight>& next = scratch[depth];
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Weight c = pool[i];
    next.clear();
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (j != i && g2_ext_vanishes(c, pool[j])) next.push_back(pool[j]);
    prefix.push_back(c);
    g2_dfs(prefix, next, scratch, depth + 1, on_maximal, on_node);
    prefix.pop_back();
  }
}

struct SubtreeStats {
  long long maximal = 0;
  int max_length = 0;
};

}  // namespace detail

/// All maximal exceptional chains extending `prefix` by candidates from
/// `candidates`, in the canonical depth-first order.  Counts are ordered:
/// two chains through the same weights in different orders are distinct.
inline std::vector<Collection> find_collections(const RootSystemData& rs,
                                                const Collection& prefix,
                                                const std::vector<Weight>& candidates,
                                                int jobs = 1) {
  if (prefix.order != OrderKind::total)
    throw std::invalid_argument("find_collections: prefix must be totally ordered");
  {
    std::set<Weight> seen(prefix.weights.begin(), prefix.weights.end());
    for (Weight c : candidates)
      if (!seen.insert(c).second)
        throw std::invalid_argument("find_collections: candidates must be distinct and disjoint "
                                    "from the prefix");
  }
  for (Weight c : candidates) {
    Collection ext = prefix;
    ext.weights.push_back(c);
    if (!is_exceptional(rs, ext))
      throw std::invalid_argument("find_collections: appending " + to_string(c) +
                                  " to the prefix is not exceptional");
  }
  if (rs.kind != Kind::G2) {
    // The generic path shares the G2 loop via the singularity test of rs.
    std::vector<Collection> out;
    std::vector<Weight> stack = prefix.weights;
    auto rec = [&](auto&& self, const std::vector<Weight>& pool) -> void {
      if (pool.empty()) {
        out.push_back({OrderKind::total, stack, {}});
        return;
      }
      for (std::size_t i = 0; i < pool.size(); ++i) {
        std::vector<Weight> next;
        for (std::size_t j = 0; j < pool.size(); ++j)
          if (j != i && ext_vanishes(rs, pool[i], pool[j])) next.push_back(pool[j]);
        stack.push_back(pool[i]);
        self(self, next);
        stack.pop_back();
      }
    };
    rec(rec, candidates);
    return out;
  }

  if (jobs <= 1 || candidates.size() < 2) {
    std::vector<Collection> out;
    std::vector<Weight> stack = prefix.weights;
    std::vector<std::vector<Weight>> scratch(candidates.size() + 1);
    detail::g2_dfs(
        stack, candidates, scratch, 0,
        [&](const std::vector<Weight>& chain) { out.push_back({OrderKind::total, chain, {}}); },
        [](const std::vector<Weight>&) {});
    return out;
  }

  // Split on the first-level candidate: each worker owns disjoint subtrees
  // and the per-slot results concatenate back into depth-first order.
  const int n = static_cast<int>(candidates.size());
  std::vector<std::vector<Collection>> slots(n);
  detail::parallel_for(n, jobs, [&](int i) {
    const Weight c = candidates[i];
    std::vector<Weight> pool;
    for (int j = 0; j < n; ++j)
      if (j != i && detail::g2_ext_vanishes(c, candidates[j])) pool.push_back(candidates[j]);
    std::vector<Weight> stack = prefix.weights;
    stack.push_back(c);
    std::vector<std::vector<Weight>> scratch(pool.size() + 1);
    detail::g2_dfs(
        stack, pool, scratch, 0,
        [&](const std::vector<Weight>& chain) {
          slots[i].push_back({OrderKind::total, chain, {}});
        },
        [](const std::vector<Weight>&) {});
  });
  std::vector<Collection> out;
  for (auto& s : slots) {
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    s.clear();
  }
  return out;
}

/// The exhaustive run over all 445 non-far crab weights: counts the maximal
/// exceptional chains starting at 0 and the longest chain seen (the leading
/// 0 included in the length).
inline SearchReport fact_nodmz(int jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.fact = "nodmz";
  const std::vector<Weight>& cands = non_far_crab_weights();
  rep.candidate_count = static_cast<long long>(cands.size());

  const int n = static_cast<int>(cands.size());
  std::vector<detail::SubtreeStats> stats(n);
  detail::parallel_for(n, jobs, [&](int i) {
    const Weight c = cands[i];
    std::vector<Weight> pool;
    for (int j = 0; j < n; ++j)
      if (j != i && detail::g2_ext_vanishes(c, cands[j])) pool.push_back(cands[j]);
    std::vector<Weight> stack{Weight{0, 0}, c};
    std::vector<std::vector<Weight>> scratch(pool.size() + 1);
    detail::SubtreeStats& st = stats[i];
    detail::g2_dfs(
        stack, pool, scratch, 0,
        [&](const std::vector<Weight>& chain) {
          ++st.maximal;
          st.max_length = std::max(st.max_length, static_cast<int>(chain.size()));
        },
        [](const std::vector<Weight>&) {});
  });
  for (const auto& st : stats) {
    rep.maximal_collection_count += st.maximal;
    rep.max_length = std::max(rep.max_length, st.max_length);
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return rep;
}

/// Fact "close": on the same tree as fact_nodmz, every node of depth 9 or 10
/// (the leading 0 counted) that keeps at most 2 weights per crab line and
/// leaves some line empty must have all its nonzero weights within
/// |l + rho|^2 <= 25.  Violating chains are reported.
inline SearchReport fact_close(int jobs = 1) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.fact = "close";
  const std::vector<Weight>& cands = non_far_crab_weights();
  rep.candidate_count = static_cast<long long>(cands.size());

  auto check_node = [](const std::vector<Weight>& chain, std::vector<Collection>& out) {
    if (chain.size() != 9 && chain.size() != 10) return;
    int per_line[kNumCrabLines] = {0, 0, 0, 0, 0, 0};
    for (std::size_t i = 1; i < chain.size(); ++i) {
      // -rho counts on all six lines by convention.
      const unsigned mask = crab_line_mask(chain[i]);
      for (int l = 0; l < kNumCrabLines; ++l)
        if (mask & (1u << l)) ++per_line[l];
    }
    bool empty_line = false;
    for (int l = 0; l < kNumCrabLines; ++l) {
      if (per_line[l] > 2) return;  // filter: every line carries <= 2
      if (per_line[l] == 0) empty_line = true;
    }
    if (!empty_line) return;  // filter: some line carries none
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (g2_norm_sq(chain[i] + kRho) > 25) {
        out.push_back({OrderKind::total, chain, {}});
        return;
      }
  };

  const int n = static_cast<int>(cands.size());
  std::vector<std::vector<Collection>> violations(n);
  std::vector<detail::SubtreeStats> stats(n);
  detail::parallel_for(n, jobs, [&](int i) {
    const Weight c = cands[i];
    std::vector<Weight> pool;
    for (int j = 0; j < n; ++j)
      if (j != i && detail::g2_ext_vanishes(c, cands[j])) pool.push_back(cands[j]);
    std::vector<Weight> stack{Weight{0, 0}, c};
    std::vector<std::vector<Weight>> scratch(pool.size() + 1);
    detail::g2_dfs(
        stack, pool, scratch, 0,
        [&](const std::vector<Weight>& chain) {
          ++stats[i].maximal;
          stats[i].max_length = std::max(stats[i].max_length, static_cast<int>(chain.size()));
        },
        [&](const std::vector<Weight>& chain) { check_node(chain, violations[i]); });
  });
  for (int i = 0; i < n; ++i) {
    rep.maximal_collection_count += stats[i].maximal;
    rep.max_length = std::max(rep.max_length, stats[i].max_length);
    rep.violations.insert(rep.violations.end(), violations[i].begin(), violations[i].end());
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return rep;
}

/// Fact "forty": per crab line, exhaust the exceptional chains 0, l2, ..., ln
/// drawn from the twenty and mirror twenty weights that lie on the singular
/// or mirror singular line parallel to that crab line; report the longest
/// chain (leading 0 counted).
inline std::vector<SearchReport> fact_forty() {
  std::vector<SearchReport> reports;
  for (int line = 0; line < kNumCrabLines; ++line) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.fact = "forty";
    rep.line_root = g2().positive_roots[line];

    std::set<Weight> cands;
    for (Weight w : twenty_weights())
      if (on_singular_line(line, w) || on_mirror_singular_line(line, w)) cands.insert(w);
    for (Weight w : mirror_twenty_weights())
      if (on_singular_line(line, w) || on_mirror_singular_line(line, w)) cands.insert(w);
    const std::vector<Weight> pool(cands.begin(), cands.end());
    rep.candidate_count = static_cast<long long>(pool.size());

    std::vector<Weight> stack{Weight{0, 0}};
    std::vector<std::vector<Weight>> scratch(pool.size() + 1);
    int deepest = 1;
    long long maximal = 0;
    detail::g2_dfs(
        stack, pool, scratch, 0, [&](const std::vector<Weight>&) { ++maximal; },
        [&](const std::vector<Weight>& chain) {
          deepest = std::max(deepest, static_cast<int>(chain.size()));
        });
    rep.maximal_collection_count = maximal;
    rep.max_length = deepest;
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    reports.push_back(std::move(rep));
  }
  return reports;
}

/// Per crab line: the largest number of collection weights that can sit on
/// the line.  The first on-line weight l2 ranges over a fundamental window
/// near -rho (positions further out translate back by the line period), and
/// every later on-line weight must differ from l2 by one of the twenty
/// weights on the parallel singular line.
inline std::vector<SearchReport> maxpts_search() {
  // Window bound (3*sqrt(3) + |rho|)^2 = 34 + 6*sqrt(21).
  const QuadraticValue window_sq{Rational(34), Rational(6), Rational(21)};
  std::vector<SearchReport> reports;
  for (int line = 0; line < kNumCrabLines; ++line) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.fact = "maxpts";
    rep.line_root = g2().positive_roots[line];

    std::vector<Weight> deltas;
    for (Weight w : twenty_weights())
      if (on_singular_line(line, w)) deltas.push_back(w);

    int best = 0;
    long long positions = 0;
    for (Weight base : walk_line_points(Weight{-1, -1}, line_direction(line), window_sq)) {
      ++positions;
      std::vector<Weight> pool;
      for (Weight d : deltas)
        if (detail::g2_ext_vanishes(base, base + d)) pool.push_back(base + d);
      std::vector<Weight> stack{Weight{0, 0}, base};
      std::vector<std::vector<Weight>> scratch(pool.size() + 1);
      int deepest = static_cast<int>(stack.size());
      detail::g2_dfs(
          stack, pool, scratch, 0, [](const std::vector<Weight>&) {},
          [&](const std::vector<Weight>& chain) {
            deepest = std::max(deepest, static_cast<int>(chain.size()));
          });
      best = std::max(best, deepest - 1);  // weights on the line: drop the leading 0
    }
    rep.candidate_count = positions;
    rep.max_length = best;
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace rank2ec
