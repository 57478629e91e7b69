#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rank2ec/crab.hpp"

using namespace rank2ec;

namespace {

/// Box-scan oracle: all lattice points with g2_norm_sq(w + rho) <= bound,
/// found by brute force over a rectangle that safely contains the ellipse.
std::vector<Weight> box_scan(long long bound, bool (*pred)(Weight)) {
  std::vector<Weight> out;
  const int extent = 3 * static_cast<int>(std::sqrt(static_cast<double>(bound))) + 4;
  for (int a = -extent; a <= extent; ++a)
    for (int b = -extent; b <= extent; ++b) {
      const Weight w{a, b};
      if (g2_norm_sq(w + kRho) <= bound && pred(w)) out.push_back(w);
    }
  return out;
}

}  // namespace

TEST_CASE("crab membership") {
  CHECK(is_in_crab(Weight{-1, -1}));
  CHECK_FALSE(is_in_crab(Weight{0, 0}));
  CHECK(is_in_crab(Weight{-1, 1}));
}

TEST_CASE("crab lines through a weight") {
  CHECK(crab_lines_of(Weight{-1, -1}).size() == 6);
  CHECK(crab_lines_of(Weight{0, 0}).empty());
  const auto lines = crab_lines_of(Weight{0, -2});
  REQUIRE(lines.size() == 1);
  CHECK(g2().positive_roots[lines[0]] == Weight{3, -1});
  CHECK(g2().coroots[lines[0]] == CorootFunctional{1, 1});
}

TEST_CASE("the twenty weights") {
  const auto& tw = twenty_weights();
  CHECK(tw.size() == 20);
  CHECK(is_twenty_weight(Weight{0, -2}));
  CHECK_FALSE(is_twenty_weight(Weight{-1, -1}));  // -rho is regular
  for (Weight w : tw) {
    CHECK(is_singular(g2(), w));
    CHECK(is_in_crab(w));
    CHECK(g2_norm_sq(w) <= 27);
    CHECK(g2_norm_sq(w + kRho) <= 27);
  }
  // Exactly one singular line and one crab line through each.
  for (Weight w : tw) {
    int nsing = 0;
    for (int i = 0; i < kNumCrabLines; ++i)
      if (on_singular_line(i, w)) ++nsing;
    CHECK(nsing == 1);
    CHECK(crab_lines_of(w).size() == 1);
  }
}

TEST_CASE("the mirror twenty weights agree with a box scan") {
  const auto& mw = mirror_twenty_weights();
  CHECK(std::binary_search(mw.begin(), mw.end(), Weight{-1, -3}));
  CHECK_FALSE(std::binary_search(mw.begin(), mw.end(), Weight{0, 0}));

  const auto scanned =
      box_scan(64, [](Weight w) { return is_in_crab(w) && is_in_crab(w + kRho); });
  CHECK(mw == scanned);
  // Every member is within 3*sqrt(3) of -rho, so the radius-8 scan is
  // exhaustive.
  for (Weight w : mw) CHECK(g2_norm_sq(w + kRho) <= 27);
  // The mirror set is the reflection of the twenty weights through -rho.
  std::set<Weight> reflected;
  for (Weight w : twenty_weights()) reflected.insert(Weight{-2, -2} - w);
  CHECK(std::set<Weight>(mw.begin(), mw.end()) == reflected);
}

TEST_CASE("proximity classes") {
  CHECK(classify(Weight{-1, -1}) == ProximityClass::Near);
  CHECK(classify(Weight{30, 0}) == ProximityClass::Near);
  CHECK(classify(Weight{50, 0}) == ProximityClass::Far);
  // |(41,1)|^2 = 1807 sits between 42^2 and (42+3sqrt3)^2.
  CHECK(classify(Weight{40, 0}) == ProximityClass::Middle);
  CHECK(g2_norm_sq(Weight{31, 1}) == 1057);
  CHECK(g2_norm_sq(Weight{51, 1}) == 2757);
}

TEST_CASE("singular and mirror singular lines") {
  for (int i = 0; i < kNumCrabLines; ++i) {
    CHECK(on_singular_line(i, Weight{0, 0}));
    CHECK(on_mirror_singular_line(i, Weight{-2, -2}));
  }
  CHECK(on_singular_line(0, Weight{0, -2}));  // functional (1,0)
  CHECK_FALSE(on_singular_line(1, Weight{0, -2}));
}

TEST_CASE("non-far crab weights: the 445 candidates") {
  const auto& pts = non_far_crab_weights();
  CHECK(pts.size() == 445);
  CHECK(std::binary_search(pts.begin(), pts.end(), Weight{-1, -1}));
  CHECK_FALSE(std::binary_search(pts.begin(), pts.end(), Weight{0, 0}));
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (Weight w : pts) {
    CHECK(is_in_crab(w));
    CHECK(classify(w) != ProximityClass::Far);
    CHECK(is_in_crab(Weight{-2, -2} - w));  // reflection through -rho stays in the crab
  }

  const auto scanned = box_scan(2227, [](Weight w) { return is_in_crab(w); });
  CHECK(pts == scanned);
}

TEST_CASE("per-line candidate counts follow the direction norms") {
  std::map<long long, std::set<std::size_t>> counts_by_step;
  for (int line = 0; line < kNumCrabLines; ++line) {
    const auto pts = walk_line_points(Weight{-1, -1}, line_direction(line), far_threshold_sq());
    counts_by_step[g2_norm_sq(line_direction(line))].insert(pts.size());
  }
  // Lines with the same primitive step length carry the same number of
  // non-far lattice points (the sign symmetry of the diagram).
  REQUIRE(counts_by_step.size() == 2);
  for (const auto& [step, sizes] : counts_by_step) CHECK(sizes.size() == 1);
  CHECK(counts_by_step[1].count(95) == 1);
  CHECK(counts_by_step[3].count(55) == 1);
}

TEST_CASE("classification is monotone along each crab line") {
  for (int line = 0; line < kNumCrabLines; ++line) {
    const Weight d = line_direction(line);
    bool seen_far = false;
    for (int t = 0; t <= 60; ++t) {
      const Weight w = Weight{-1, -1} + t * d;
      const bool far = classify(w) == ProximityClass::Far;
      if (seen_far) CHECK(far);
      seen_far = seen_far || far;
    }
  }
}
