#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rank2ec/root_system.hpp"
#include "rank2ec/weight.hpp"
#include "rank2ec/weyl.hpp"

namespace rank2ec {

/// Ill-formed collection input (duplicate weights, missing Weyl indexing).
/// Kept distinct from a plain `false` so callers can tell bad input from a
/// genuine Ext non-vanishing.
struct CollectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OrderKind { total, weak_bruhat };

/// An ordered list of weights, either totally ordered or indexed by Weyl
/// elements under the left weak Bruhat order (weyl_words aligned with
/// weights, reduced words in bracket notation).
struct Collection {
  OrderKind order = OrderKind::total;
  std::vector<Weight> weights;
  std::vector<std::vector<int>> weyl_words;
};

inline void require_distinct(const Collection& c) {
  for (std::size_t i = 0; i < c.weights.size(); ++i)
    for (std::size_t j = i + 1; j < c.weights.size(); ++j)
      if (c.weights[i] == c.weights[j])
        throw CollectionError("collection has a repeated weight " + to_string(c.weights[i]));
}

/// Ext*(L(lam), L(lam')) = 0 iff lam' - lam + rho is singular.
inline bool ext_vanishes(const RootSystemData& rs, Weight lam, Weight lam_prime) {
  return is_singular(rs, lam_prime - lam + rs.rho);
}

inline bool is_exceptional(const RootSystemData& rs, const Collection& c) {
  if (c.order != OrderKind::total)
    throw std::invalid_argument("is_exceptional: expects a totally ordered collection");
  require_distinct(c);
  for (std::size_t i = 0; i < c.weights.size(); ++i)
    for (std::size_t j = i + 1; j < c.weights.size(); ++j)
      if (!ext_vanishes(rs, c.weights[i], c.weights[j])) return false;
  return true;
}

/// All comparable Weyl pairs (w < w' in left weak order) whose attached
/// weights violate the vanishing criterion; indices into weyl_group(rs).
inline std::vector<std::pair<int, int>> po_exceptional_failures(const RootSystemData& rs,
                                                                const Collection& c) {
  if (c.order != OrderKind::weak_bruhat)
    throw std::invalid_argument("po_exceptional_failures: expects a weak-Bruhat collection");
  if (c.weyl_words.size() != c.weights.size())
    throw CollectionError("collection lacks a Weyl index for each weight");
  require_distinct(c);

  const auto& group = weyl_group(rs);
  std::vector<Weight> by_element(group.size());
  std::vector<bool> assigned(group.size(), false);
  for (std::size_t i = 0; i < c.weights.size(); ++i) {
    const int idx = element_index(rs, element_from_word(rs, c.weyl_words[i]).matrix);
    if (assigned[idx]) throw CollectionError("collection assigns two weights to one Weyl element");
    by_element[idx] = c.weights[i];
    assigned[idx] = true;
  }
  for (bool a : assigned)
    if (!a) throw CollectionError("collection does not cover the whole Weyl group");

  std::vector<std::pair<int, int>> failures;
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = 0; j < group.size(); ++j) {
      if (i == j || !left_weak_leq(group[i], group[j])) continue;
      if (!ext_vanishes(rs, by_element[i], by_element[j]))
        failures.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return failures;
}

inline bool is_po_exceptional(const RootSystemData& rs, const Collection& c) {
  return po_exceptional_failures(rs, c).empty();
}

/// Subtract mu from every weight, preserving the order.
inline Collection translate(const Collection& c, Weight mu) {
  if (c.order != OrderKind::total)
    throw std::invalid_argument("translate: expects a totally ordered collection");
  Collection out = c;
  for (auto& w : out.weights) w = w - mu;
  return out;
}

/// (l_1,...,l_n) -> (-l_n,...,-l_1).
inline Collection reverse_negate(const Collection& c) {
  if (c.order != OrderKind::total)
    throw std::invalid_argument("reverse_negate: expects a totally ordered collection");
  Collection out = c;
  out.weights.clear();
  for (auto it = c.weights.rbegin(); it != c.weights.rend(); ++it) out.weights.push_back(-*it);
  return out;
}

}  // namespace rank2ec
