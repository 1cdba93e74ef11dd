#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slices/braid.hpp"

using namespace slices;

TEST_CASE("reduced braids and dg basics") {
  auto a1 = RootSystem::build("A1");
  auto s1 = WeylElement::simple(a1, 1);
  auto b = PositiveBraid::reduced(s1);
  CHECK(b.factor_count() == 1);
  CHECK(b.dg_factor() == s1);
  CHECK(b.dg_complement().empty());

  auto sq = b * b;
  CHECK(sq.factor_count() == 2);
  CHECK(sq.dg_factor() == s1);

  CHECK(PositiveBraid::identity(a1).empty());
  CHECK(PositiveBraid::reduced(WeylElement::identity(a1)).empty());
  CHECK_THROWS_AS(PositiveBraid::identity(a1).dg_complement(), std::invalid_argument);
}

TEST_CASE("normal form condition holds on every adjacent pair") {
  auto b3 = RootSystem::build("B3");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> simple(1, 3);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<WeylElement> factors;
    int k = 1 + int(rng() % 4);
    for (int i = 0; i < k; ++i) {
      std::vector<int> word;
      int len = 1 + int(rng() % 6);
      for (int j = 0; j < len; ++j) word.push_back(simple(rng));
      factors.push_back(WeylElement::from_word(b3, word));
    }
    auto b = PositiveBraid::from_factors(b3, Twist(*b3), factors);
    auto nf = b.dgn();
    int total = 0;
    for (const auto& f : factors) total += f.length();
    CHECK(b.total_length() == total);
    for (size_t j = 0; j + 1 < nf.size(); ++j) {
      const auto& left = nf[j];
      const auto& right = nf[j + 1];
      for (int s = 1; s <= 3; ++s)
        if (left.right_descent(s)) CHECK(right.left_descent(s));
    }
  }
}

TEST_CASE("normalization is independent of the splitting (randomized)") {
  // Chunks of a reduced word are reduced, so any contiguous chunking of a
  // reduced word of w presents the same braid b_w.
  for (const char* label : {"A3", "B3"}) {
    auto sys = RootSystem::build(label);
    auto all = enumerate_weyl(sys);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int rep = 0; rep < 40; ++rep) {
      // Product of a few elements, to get braids with several factors.
      std::vector<int> letters;
      PositiveBraid expect = PositiveBraid::identity(sys);
      for (int piece = 0; piece < 2; ++piece) {
        const auto& w = all[pick(rng)];
        for (int v : w.word()) letters.push_back(v);
        expect = expect * PositiveBraid::reduced(w);
      }
      // Random chunkings into letterwise-reduced pieces: split only at
      // points where the chunk stays reduced.
      auto split = [&](std::mt19937_64& r) {
        std::vector<WeylElement> fs;
        size_t at = 0;
        while (at < letters.size()) {
          size_t take = 1 + r() % 4;
          while (take > 0) {
            std::vector<int> chunk(letters.begin() + at,
                                   letters.begin() + std::min(at + take, letters.size()));
            auto el = WeylElement::from_word(sys, chunk);
            if (el.length() == int(chunk.size())) {
              fs.push_back(el);
              at += chunk.size();
              break;
            }
            --take;
          }
        }
        return PositiveBraid::from_factors(sys, Twist(*sys), fs);
      };
      auto b1 = split(rng);
      auto b2 = split(rng);
      CHECK(b1 == b2);
      CHECK(b1 == expect);
    }
  }
}

TEST_CASE("normal form is idempotent") {
  auto b3 = RootSystem::build("B3");
  auto w = WeylElement::from_word(b3, {2, 3, 2, 1});
  auto b = PositiveBraid::reduced(w).pow(3);
  auto again = PositiveBraid::from_factors(b3, b.twist(), b.dgn());
  CHECK(b == again);
}

TEST_CASE("A6 element: powers already in normal form") {
  auto a6 = RootSystem::build("A6");
  auto w = WeylElement::from_word(a6, {2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 3, 2});
  auto bw = PositiveBraid::reduced(w);
  for (int i = 1; i <= 5; ++i) {
    auto p = bw.pow(i);
    CHECK(p.factor_count() == i);
    for (const auto& f : p.dgn()) CHECK(f == w);
  }
}

TEST_CASE("B3 example: DGN of powers of w and its inverse") {
  auto b3 = RootSystem::build("B3");
  auto w = WeylElement::from_word(b3, {1, 2, 3, 1, 2});
  auto wi = w.inverse();
  auto s1 = WeylElement::simple(b3, 1);
  for (int d = 2; d <= 6; ++d) {
    auto p = PositiveBraid::reduced(w).pow(d);
    CHECK(p.factor_count() == d);
    for (const auto& f : p.dgn()) CHECK(f == w);

    auto q = PositiveBraid::reduced(wi).pow(d);
    auto nf = q.dgn();
    REQUIRE(int(nf.size()) == d);
    CHECK(nf.front() == wi * s1);
    CHECK(nf.back() == s1 * wi);
    // Middle factors are the cyclic shift s1 w^-1 s1; the factor product
    // then telescopes to w^-d. (d-2 copies of w^-1 itself would not.)
    for (int j = 1; j + 1 < d; ++j) CHECK(nf[j] == s1 * wi * s1);
  }
}

TEST_CASE("A3 Coxeter stabilizes at the longest element") {
  auto a3 = RootSystem::build("A3");
  auto w = WeylElement::from_word(a3, {3, 2, 1});
  auto b3 = PositiveBraid::reduced(w).pow(3);
  CHECK(b3.dg_factor() == WeylElement::longest(a3));
  CHECK(dg_stabilized(w) == WeylElement::longest(a3));
  CHECK(dg_stabilized(WeylElement::identity(a3)).is_identity());
  // A single reflection stabilizes immediately: DG(b_{s1}^d) = s1.
  CHECK(dg_stabilized(WeylElement::from_word(a3, {1})) == WeylElement::simple(a3, 1));
}

TEST_CASE("B3: DG(b_w^2) = w_o s_3 for w = s2 s3 s2 s1") {
  auto b3 = RootSystem::build("B3");
  auto w = WeylElement::from_word(b3, {2, 3, 2, 1});
  auto dg = PositiveBraid::reduced(w).pow(2).dg_factor();
  CHECK(dg == WeylElement::longest(b3) * WeylElement::simple(b3, 3));
}

TEST_CASE("longest element is the Garside factor of its own square") {
  auto b3 = RootSystem::build("B3");
  auto w0 = WeylElement::longest(b3);
  auto p = PositiveBraid::reduced(w0).pow(2);
  auto nf = p.dgn();
  REQUIRE(nf.size() == 2);
  CHECK(nf[0] == w0);
  CHECK(nf[1] == w0);
}

TEST_CASE("DG monotonicity in d (exhaustive rank <= 3)") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
    auto sys = RootSystem::build(label);
    for (const auto& w : enumerate_weyl(sys)) {
      auto bw = PositiveBraid::reduced(w);
      RootSet prev = sys->empty_set();
      for (int d = 1; d <= 6; ++d) {
        RootSet cur = bw.pow(d).dg_factor().inversion_set();
        CHECK(prev.subset_of(cur));
        prev = cur;
      }
    }
  }
}

TEST_CASE("inverse corollary: DG(b_w^d) >= y iff DG(b_{w^-1}^d) >= y") {
  // Needs R_y nimble for w on top of y >= w^-1 (a bare y >= w^-1 fails at
  // d = 1, e.g. y = w^-1 = s2 s1 for w = s1 s2).
  for (const char* label : {"A2", "B2", "A3", "B3"}) {
    auto sys = RootSystem::build(label);
    auto all = enumerate_weyl(sys);
    for (const auto& w : all) {
      auto wi = w.inverse();
      for (const auto& y : all) {
        if (!weak_leq(wi, y)) continue;
        // R_y nimble for w: y >= w and y >= y w^-1.
        if (!weak_leq(w, y) || !weak_leq(y * wi, y)) continue;
        for (int d = 1; d <= 6; ++d) {
          bool lhs = weak_leq(y, PositiveBraid::reduced(w).pow(d).dg_factor());
          bool rhs = weak_leq(y, PositiveBraid::reduced(wi).pow(d).dg_factor());
          CHECK(lhs == rhs);
        }
      }
    }
  }
  // Elliptic elements: the braid-power bound is the longest element, and the
  // equation transfers between w and w^-1.
  for (const char* label : {"A2", "B2", "A3", "B3", "G2"}) {
    auto sys = RootSystem::build(label);
    auto w0 = WeylElement::longest(sys);
    for (const auto& w : enumerate_weyl(sys)) {
      if (!w.is_elliptic()) continue;
      auto wi = w.inverse();
      for (int d = 1; d <= 6; ++d) {
        bool lhs = PositiveBraid::reduced(w).pow(d).dg_factor() == w0;
        bool rhs = PositiveBraid::reduced(wi).pow(d).dg_factor() == w0;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("braid multiplication commutes twists leftward") {
  auto a3 = RootSystem::build("A3");
  Twist flip = Twist::flip(*a3);
  auto w = WeylElement::from_word(a3, flip, {1, 2});
  auto b = PositiveBraid::reduced(w);
  auto sq = b * b;
  CHECK(sq.twist().is_identity());
  // (flip . x)^2 = flip^2 (flip^-1 x flip) x = (flip x flip) x.
  auto conj = w.untwisted().conjugate_by_twist(flip);
  auto expect = PositiveBraid::from_factors(
      a3, Twist(*a3), {conj, w.untwisted()});
  CHECK(sq == expect);
}
