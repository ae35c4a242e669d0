#include "dealmix/pair_stats.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "dealmix/error.hpp"

namespace dealmix {
namespace {

constexpr int kB = 0;
constexpr int kR = 1;

TEST(WStatistic, RedBlackExample) {
  const Deck d = Deck::parse("BRRRBBBBRR", 2);
  EXPECT_EQ(w_statistic(d, kB, kR), 1);
  EXPECT_EQ(w_statistic(d, kR, kB), -1);
  EXPECT_EQ(w_statistic(Deck::parse("BBBRRR", 2), kB, kR), 1);
  EXPECT_THROW(w_statistic(d, kB, kB), InvalidInput);
}

TEST(ZStatistic, RedBlackExample) {
  const Deck d = Deck::parse("BRRRBBBBRR", 2);
  EXPECT_EQ(z_statistic(d, kB, kR), 1);
  EXPECT_EQ(z_statistic(d, kR, kB), -1);
  EXPECT_EQ(z_statistic(Deck::parse("BBBRRRRR", 2), kB, kR), 15);
  EXPECT_THROW(z_statistic(d, kR, kR), InvalidInput);
}

TEST(ZStatistic, AntisymmetricAndMatchesQuadraticCount) {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> colour(0, 2);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> cards(20);
    for (auto& c : cards) c = colour(gen);
    EXPECT_EQ(z_statistic(cards, 0, 2), -z_statistic(cards, 2, 0));
    if (trial % 50 == 0) {
      EXPECT_EQ(z_statistic(cards, 1, 2), testing::pair_difference(cards, 1, 2));
      EXPECT_EQ(w_statistic(cards, 1, 2), testing::digraph_difference(cards, 1, 2));
    }
  }
}

TEST(ZPositional, HandEvaluation) {
  // black positions 1,5,6,7,8: 9 + 1 - 1 - 3 - 5
  EXPECT_EQ(z_positional(Deck::parse("BRRRBBBBRR", 2), kB, kR), 1);
  // lone x on top pairs with every later card
  EXPECT_EQ(z_positional(Deck::parse("BRRRRR", 2), kB, kR), 5);
}

TEST(ZPositional, TermsCarryThePositionParity) {
  const std::vector<int> cards = {0, 2, 1, 2, 0, 0, 2, 1, 1, 2};
  const auto terms = positional_terms(cards, 0, 1);
  const int others = 4;
  for (const auto& t : terms) {
    const int c = cards[static_cast<std::size_t>(t.position - 1)];
    if (c == 2) continue;
    // before + after = others on an x/y position, so before - after has the parity of others
    EXPECT_EQ(((t.u + 2 * t.position) % 2 + 2) % 2, others % 2);
    EXPECT_LE(std::llabs(t.u + 2 * t.position), static_cast<long long>(cards.size()));
  }
}

TEST(ZPositional, ExhaustiveSmallDecksTwoAndThreeColours) {
  for (int n = 1; n <= 8; ++n) {
    for (int colours : {2, 3}) {
      std::vector<int> cards(static_cast<std::size_t>(n), 0);
      while (true) {
        for (int x = 0; x < colours; ++x) {
          for (int y = 0; y < colours; ++y) {
            if (x != y) {
              ASSERT_EQ(z_positional(cards, x, y), z_statistic(cards, x, y));
            }
          }
        }
        int i = 0;
        while (i < n && ++cards[static_cast<std::size_t>(i)] == colours) cards[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST(DealingZ, CanonicalClosedForms) {
  for (int players = 2; players <= 6; ++players) {
    for (int s = 1; s <= 15; ++s) {
      const auto ordered = DealingMethod::ordered(players, s);
      const auto cyclic = DealingMethod::cyclic(players, s);
      const auto bf = DealingMethod::back_and_forth(players, s);
      for (int j = 0; j < players; ++j) {
        for (int i = 0; i < players; ++i) {
          const int first = dealt_first(cyclic, j, i);
          EXPECT_EQ(dealing_z(ordered, j, i), s * s * first);
          EXPECT_EQ(dealing_z(cyclic, j, i), s * first);
          EXPECT_EQ(dealing_z(bf, j, i), s % 2 == 0 ? 0 : first);
          EXPECT_EQ(dealing_z(bf, j, i), -dealing_z(bf, i, j));
        }
      }
      const auto matrix = dealing_z_matrix(bf);
      for (int j = 0; j < players; ++j) {
        for (int i = 0; i < players; ++i) EXPECT_EQ(matrix[j][i], dealing_z(bf, j, i));
      }
    }
  }
}

TEST(DealingZ, DiagonalIsZero) { EXPECT_EQ(dealing_z(DealingMethod::ordered(4, 13), 2, 2), 0); }

TEST(PositionSum, BridgeDeals) {
  const std::vector<std::pair<DealingMethod, std::vector<std::int64_t>>> cases = {
      {DealingMethod::ordered(4, 13), {91, 260, 429, 598}},
      {DealingMethod::cyclic(4, 13), {325, 338, 351, 364}},
      {DealingMethod::back_and_forth(4, 13), {343, 344, 345, 346}},
  };
  for (const auto& [method, sums] : cases) {
    for (int p = 0; p < 4; ++p) EXPECT_EQ(position_sum(method, p), sums[static_cast<std::size_t>(p)]);
  }
}

TEST(PositionSum, AddsUpToAllPositions) {
  std::mt19937 gen(3);
  for (int players = 2; players <= 5; ++players) {
    for (int s = 1; s <= 7; ++s) {
      auto seq = DealingMethod::cyclic(players, s).assignment();
      std::shuffle(seq.begin(), seq.end(), gen);
      const DealingMethod method(players, seq);
      std::int64_t total = 0;
      for (int p = 0; p < players; ++p) total += position_sum(method, p);
      const std::int64_t n = players * s;
      EXPECT_EQ(total, n * (n + 1) / 2);
    }
  }
}

TEST(PositionTerm, ClosedFormsMatchSequences) {
  EXPECT_EQ(closed_form_position_term(CanonicalDealing::kOrdered, 4, 13, 0), Rational(39));
  EXPECT_EQ(position_term(DealingMethod::ordered(4, 13), 0), Rational(39));
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(closed_form_position_term(CanonicalDealing::kCyclic, 4, 5, i), Rational(3 - 2 * i));
    EXPECT_EQ(closed_form_position_term(CanonicalDealing::kBackAndForth, 4, 6, i), Rational(0));
  }
  for (int players = 2; players <= 6; ++players) {
    for (int s = 1; s <= 15; ++s) {
      for (auto kind : {CanonicalDealing::kOrdered, CanonicalDealing::kCyclic, CanonicalDealing::kBackAndForth}) {
        const auto method = DealingMethod::canonical(kind, players, s);
        for (int i = 0; i < players; ++i) {
          EXPECT_EQ(position_term(method, i), closed_form_position_term(kind, players, s, i))
              << canonical_name(kind) << " l=" << players << " s=" << s << " i=" << i;
        }
      }
    }
  }
  EXPECT_THROW(parse_canonical("zigzag"), InvalidInput);
}

TEST(DealingMethod, ParseAndPrint) {
  const auto m = DealingMethod::parse("NESWWSEN", 4);
  EXPECT_EQ(m, DealingMethod::back_and_forth(4, 2));
  EXPECT_EQ(m.str(), "NESWWSEN");
  EXPECT_EQ(DealingMethod::parse("1234", 4), DealingMethod::cyclic(4, 1));
  EXPECT_EQ(DealingMethod::back_and_forth(3, 3).str(), "123321123");
  EXPECT_THROW(DealingMethod::parse("1123", 2), InvalidInput);
  EXPECT_THROW(DealingMethod::parse("112", 2), InvalidInput);
  EXPECT_THROW(DealingMethod::parse("NNEX", 2), InvalidInput);
}

}  // namespace
}  // namespace dealmix
