#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "rank2ec/root_system.hpp"
#include "rank2ec/weyl.hpp"

using namespace rank2ec;

namespace {
const Kind kAllKinds[] = {Kind::A2, Kind::A1xA1, Kind::B2, Kind::G2};
}

TEST_CASE("root system data is pinned") {
  const auto& a2 = build(Kind::A2);
  CHECK(a2.simple_roots[0] == Weight{2, -1});
  CHECK(a2.simple_roots[1] == Weight{-1, 2});
  CHECK(a2.gram[0][0] == Rational(2, 3));
  CHECK(a2.gram[0][1] == Rational(1, 3));

  const auto& b2 = build(Kind::B2);
  CHECK(b2.simple_roots[1] == Weight{-2, 2});
  CHECK(b2.coroots == std::vector<CorootFunctional>{{1, 0}, {0, 1}, {1, 2}, {1, 1}});

  const auto& g2 = build(Kind::G2);
  CHECK(g2.simple_roots[0] == Weight{2, -1});
  CHECK(g2.rho == Weight{1, 1});
  CHECK(norm_sq(g2, g2.rho) == Rational(7));
  CHECK(g2.coroots ==
        std::vector<CorootFunctional>{{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}});

  CHECK(build(Kind::A1xA1).coroots == std::vector<CorootFunctional>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(parse_kind("f4"), std::invalid_argument);
}

TEST_CASE("positive roots match their coroot functionals") {
  // alpha^vee(lambda) = 2(alpha,lambda)/(alpha,alpha), checked over a box.
  for (Kind k : kAllKinds) {
    const auto& rs = build(k);
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
      const Weight alpha = rs.positive_roots[i];
      const Rational len = norm_sq(rs, alpha);
      for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b) {
          const Weight lam{a, b};
          REQUIRE(Rational(2) * inner_product(rs, alpha, lam) ==
                  len * Rational(rs.coroots[i](lam)));
        }
    }
  }
}

TEST_CASE("weyl group enumeration matches the bracket lists") {
  using W = std::vector<std::vector<int>>;
  auto words = [](Kind k) {
    W out;
    for (const auto& w : weyl_group(build(k))) out.push_back(w.word);
    return out;
  };
  CHECK(words(Kind::A2) == W{{}, {1}, {2}, {2, 1}, {1, 2}, {1, 2, 1}});
  CHECK(words(Kind::A1xA1) == W{{}, {1}, {2}, {1, 2}});
  CHECK(words(Kind::B2) ==
        W{{}, {1}, {2}, {2, 1}, {1, 2}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}});
  CHECK(words(Kind::G2) == W{{},
                             {1},
                             {2},
                             {2, 1},
                             {1, 2},
                             {1, 2, 1},
                             {2, 1, 2},
                             {2, 1, 2, 1},
                             {1, 2, 1, 2},
                             {1, 2, 1, 2, 1},
                             {2, 1, 2, 1, 2},
                             {1, 2, 1, 2, 1, 2}});
  CHECK(weyl_group(build(Kind::A2)).front().matrix == kIdentityMat);
}

TEST_CASE("reflections behave as pinned") {
  const auto& g2 = build(Kind::G2);
  CHECK(reflect(g2, 1, Weight{1, 0}) == Weight{-1, 1});
  CHECK(reflect(build(Kind::A2), 2, kRho) == Weight{2, -1});
  for (Kind k : kAllKinds) {
    const auto& rs = build(k);
    CHECK(reflect(rs, 1, Weight{0, 0}) == Weight{0, 0});
    CHECK(reflect(rs, 2, Weight{0, 0}) == Weight{0, 0});
  }
  CHECK_THROWS_AS(reflect(g2, 3, kRho), std::invalid_argument);
}

TEST_CASE("reflections are involutions and words compose") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coord(-9, 9), gen(1, 2), len(0, 6);
  for (Kind k : kAllKinds) {
    const auto& rs = build(k);
    for (int iter = 0; iter < 200; ++iter) {
      const Weight lam{coord(rng), coord(rng)};
      for (int i : {1, 2}) CHECK(reflect(rs, i, reflect(rs, i, lam)) == lam);

      std::vector<int> word;
      for (int l = len(rng); l > 0; --l) word.push_back(gen(rng));
      Weight step = lam;
      for (auto it = word.rbegin(); it != word.rend(); ++it) step = reflect(rs, *it, step);
      CHECK(apply(element_from_word(rs, word), lam) == step);
    }
  }
}

TEST_CASE("weyl action on pinned examples") {
  const auto& g2 = build(Kind::G2);
  const auto& group = weyl_group(g2);
  CHECK(apply(group.front(), Weight{5, -3}) == Weight{5, -3});
  CHECK(apply(longest_element(g2), kRho) == Weight{-1, -1});
  CHECK(apply(element_from_word(build(Kind::A2), {1}), Weight{1, 0}) == Weight{-1, 1});
}

TEST_CASE("longest elements act as pinned") {
  CHECK(longest_element(build(Kind::G2)).matrix == Mat2{-1, 0, 0, -1});
  CHECK(longest_element(build(Kind::B2)).matrix == Mat2{-1, 0, 0, -1});
  // A2: (a, b) -> (-b, -a).
  CHECK(longest_element(build(Kind::A2)).matrix == Mat2{0, -1, -1, 0});
}

TEST_CASE("singularity and dominance") {
  const auto& g2 = build(Kind::G2);
  CHECK(is_singular(g2, Weight{0, 0}));
  CHECK_FALSE(is_singular(g2, kRho));
  CHECK(is_singular(build(Kind::B2), Weight{-2, 1}));
  CHECK(is_dominant(Weight{0, 0}));
  CHECK(is_dominant(kRho));
  CHECK_FALSE(is_dominant(Weight{-1, 1}));
}

TEST_CASE("norms through the gram matrix") {
  const auto& g2 = build(Kind::G2);
  CHECK(norm_sq(g2, kRho) == Rational(7));
  CHECK(norm_sq(g2, Weight{0, 0}) == Rational(0));
  CHECK(norm_sq(g2, Weight{0, -2}) == Rational(12));
  CHECK(norm_sq(build(Kind::A2), Weight{1, 0}) == Rational(2, 3));
}

TEST_CASE("left weak Bruhat order") {
  const auto& a2 = build(Kind::A2);
  const auto& group = weyl_group(a2);
  for (const auto& w : group) CHECK(left_weak_leq(group.front(), w));
  const auto& s1 = element_from_word(a2, {1});
  const auto& s2 = element_from_word(a2, {2});
  const auto& s2s1 = element_from_word(a2, {2, 1});
  CHECK(left_weak_leq(s1, s2s1));  // [2,1] = s2 * [1]
  CHECK_FALSE(left_weak_leq(s2, s2s1));
  CHECK_FALSE(left_weak_leq(s1, s2));
  CHECK_THROWS_AS(left_weak_leq(s1, element_from_word(build(Kind::B2), {1})),
                  std::invalid_argument);
}
