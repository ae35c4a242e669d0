#include "dealmix/shuffle_exact.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "dealmix/error.hpp"
#include "dealmix/pair_stats.hpp"

namespace dealmix {
namespace {

TEST(Permutation, DescentsAndApply) {
  const Permutation pi = Permutation::from_one_based(std::vector<int>{4, 3, 1, 2, 5});
  EXPECT_EQ(descents(pi), 2);
  const std::vector<int> initial = {1, 2, 3, 4, 5};
  EXPECT_EQ(permute(pi, std::span<const int>(initial)), (std::vector<int>{3, 4, 2, 1, 5}));
  const std::vector<int> other = {2, 5, 4, 3, 1};
  EXPECT_EQ(permute(pi, std::span<const int>(other)), (std::vector<int>{4, 3, 5, 2, 1}));
  EXPECT_EQ(descents(Permutation::identity(7)), 0);
  EXPECT_EQ(descents(Permutation::from_one_based(std::vector<int>{6, 5, 4, 3, 2, 1})), 5);
  EXPECT_EQ(permute(Permutation::identity(5), std::span<const int>(other)), other);
  const std::vector<int> short_seq = {1, 2};
  EXPECT_THROW(permute(pi, std::span<const int>(short_seq)), InvalidInput);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0}), InvalidInput);
}

TEST(Permutation, RankRoundTrip) {
  for (std::uint64_t r = 0; r < 720; ++r) {
    const auto pi = Permutation::unrank(6, r);
    ASSERT_EQ(pi.rank(), r);
    ASSERT_EQ(pi.then(pi.inverse()), Permutation::identity(6));
  }
  EXPECT_EQ(Permutation::unrank(4, 0), Permutation::identity(4));
}

TEST(BayerDiaconis, ThreeCardsRiffle) {
  EXPECT_EQ(bayer_diaconis_prob(3, 0, 2), Rational(1, 2));
  EXPECT_EQ(bayer_diaconis_prob(3, 1, 2), Rational(1, 8));
  EXPECT_EQ(bayer_diaconis_prob(3, 2, 2), Rational(0));
  // Eulerian numbers 1, 4, 1
  EXPECT_EQ(bayer_diaconis_prob(3, 0, 2) + Rational(4) * bayer_diaconis_prob(3, 1, 2) + bayer_diaconis_prob(3, 2, 2),
            Rational(1));
}

TEST(BayerDiaconis, DegenerateShuffles) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(bayer_diaconis_prob(n, 0, 1), Rational(1));
    for (int d = 1; d < n; ++d) EXPECT_EQ(bayer_diaconis_prob(n, d, 1), Rational(0));
  }
  for (std::int64_t a : {1, 2, 7, 1000}) EXPECT_EQ(bayer_diaconis_prob(1, 0, a), Rational(1));
  EXPECT_THROW(bayer_diaconis_prob(3, 3, 2), InvalidInput);
  EXPECT_THROW(bayer_diaconis_prob(3, -1, 2), InvalidInput);
}

TEST(Transition, TwoCards) {
  const Deck rb = Deck::parse("RB", 2);
  const Deck br = Deck::parse("BR", 2);
  EXPECT_EQ(transition_probability(rb, br, 2), Rational(1, 4));
  EXPECT_EQ(transition_probability(rb, rb, 2), Rational(3, 4));
  EXPECT_EQ(first_order_coefficient_oracle(br, rb), Rational(-1, 2));
  EXPECT_EQ(first_order_coefficient_oracle(br, br), Rational(1, 2));
  EXPECT_EQ(c1_formula(br, rb), Rational(-1, 2));
  const Deck mono = Deck::parse("BBBB", 2);
  EXPECT_EQ(first_order_coefficient_oracle(mono, mono), Rational(0));
  EXPECT_EQ(c1_formula(mono, mono), Rational(0));
}

TEST(Transition, OneShuffleIsIdentity) {
  const Deck d = Deck::parse("BRGBRG", 2);
  for (const auto& target : rearrangements(d)) {
    EXPECT_EQ(transition_probability(d, target, 1), target == d ? Rational(1) : Rational(0));
  }
}

TEST(Transition, Errors) {
  EXPECT_THROW(transition_probability(Deck::parse("BR", 2), Deck::parse("BRRB", 2), 2), InvalidInput);
  const Deck big = Deck::parse("BRBRBRBRBRBR", 2);
  EXPECT_THROW(transition_probability(big, big, 2), ScaleExceeded);
  EXPECT_NO_THROW(transition_probability(big, big, 2, OracleLimits{12}));
}

TEST(Transition, NormalisedAndCoefficientsSumToZero) {
  for (const char* text : {"BBRR", "BRGB", "BRBRBR", "BBRRGG", "BRGGRB", "BBBRRRRG", "BRGBRGBR"}) {
    const Deck d = Deck::parse(text, 2);
    std::uint64_t block_permutations = 1;
    for (int c : d.composition().counts())
      block_permutations *= static_cast<std::uint64_t>(to_int64(factorial(static_cast<unsigned>(c))));
    Rational coefficient_sum;
    std::vector<Rational> totals(4);
    const std::int64_t as[] = {1, 2, 3, 16};
    for (const auto& target : rearrangements(d)) {
      const auto table = descent_table(d, target);
      EXPECT_EQ(table.total(), block_permutations);
      for (std::size_t k = 0; k < 4; ++k) totals[k] += transition_probability(table, as[k]);
      coefficient_sum += first_order_coefficient(table);
    }
    for (const auto& t : totals) EXPECT_EQ(t, Rational(1)) << text;
    EXPECT_EQ(coefficient_sum, Rational(0)) << text;
  }
}

TEST(Transition, BlockEnumerationAgreesWithAllPermutations) {
  const Deck d = Deck::parse("BRGBRB", 2);
  const int n = d.size();
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  std::map<std::vector<int>, std::vector<std::uint64_t>> tables;
  do {
    std::vector<int> target(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      target[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = d[static_cast<std::size_t>(i)];
    auto& t = tables[target];
    t.resize(static_cast<std::size_t>(n));
    ++t[static_cast<std::size_t>(descents(pi))];
  } while (std::next_permutation(pi.begin(), pi.end()));
  for (const auto& target : rearrangements(d)) EXPECT_EQ(descent_table(d, target).counts, tables.at(target.cards()));
}

TEST(C1Formula, MatchesOracleOnAllPairsUpToEightCards) {
  for (const char* text : {"BR", "BRRB", "BBRR", "BRGB", "BRGBRG", "BBRRGG", "BBBRRRRG", "BRGBRGBR", "BBRRRGGG"}) {
    const Deck base = Deck::parse(text, 2);
    for (const auto& from : rearrangements(base)) {
      for (const auto& to : rearrangements(base)) {
        ASSERT_EQ(c1_formula(from, to), first_order_coefficient_oracle(from, to)) << from.str() << " -> " << to.str();
      }
    }
  }
}

TEST(C1Formula, RandomThreeColourPairs) {
  std::mt19937_64 gen(5);
  const DeckComposition comp({3, 3, 2}, 2, 4);
  std::vector<int> a = Deck::ordered(comp).cards();
  std::vector<int> b = a;
  for (int trial = 0; trial < 300; ++trial) {
    std::shuffle(a.begin(), a.end(), gen);
    std::shuffle(b.begin(), b.end(), gen);
    const Deck from(comp, a);
    const Deck to(comp, b);
    ASSERT_EQ(c1_formula(from, to), first_order_coefficient_oracle(from, to));
  }
}

TEST(HandVariation, OneShuffleLeavesTheDealtHand) {
  for (const char* text : {"BBRR", "BRGBRG", "BBBRRRGG"}) {
    const Deck d = Deck::parse(text, 2);
    const auto method = DealingMethod::cyclic(2, d.size() / 2);
    const Rational pi = stationary_probability(d.composition(), deal(d, method));
    EXPECT_EQ(exact_hand_variation_distance(d, method, 1), Rational(1) - pi) << text;
  }
}

TEST(HandVariation, SingleColourIsAlwaysMixed) {
  const Deck d = Deck::parse("BBBBBB", 3);
  for (std::int64_t a : {1, 2, 5})
    EXPECT_EQ(exact_hand_variation_distance(d, DealingMethod::cyclic(3, 2), a), Rational(0));
}

TEST(HandVariation, OracleCoefficientMatchesAllPermutationEnumeration) {
  for (const char* text : {"BBRR", "BRRB", "BRGBRG", "BBRGGR"}) {
    const Deck d = Deck::parse(text, 2);
    for (auto kind : {CanonicalDealing::kOrdered, CanonicalDealing::kCyclic, CanonicalDealing::kBackAndForth}) {
      const auto method = DealingMethod::canonical(kind, 2, d.size() / 2);
      EXPECT_EQ(HandDistributionOracle(d, method).first_order_coefficient(),
                testing::first_order_by_all_permutations(d.cards(), d.composition().colors(), 2, method.assignment()));
    }
  }
}

TEST(HandVariation, ConvergesToFirstOrderTerm) {
  const Deck d = Deck::parse("BBRR", 2);
  const HandDistributionOracle oracle(d, DealingMethod::ordered(2, 2));
  const Rational limit = oracle.first_order_coefficient();
  Rational previous_gap = (Rational(2) * oracle.variation_distance(2) - limit).abs();
  for (int j = 2; j <= 12; ++j) {
    const std::int64_t a = std::int64_t{1} << j;
    const Rational gap = (Rational(a) * oracle.variation_distance(a) - limit).abs();
    EXPECT_LT(gap, previous_gap);
    previous_gap = gap;
  }
}

TEST(ShuffleComposition, ProductLaw) {
  for (int n = 1; n <= 5; ++n) {
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 3}, {3, 4}}) {
      const auto first = shuffle_distribution(n, a);
      const auto second = shuffle_distribution(n, b);
      EXPECT_EQ(convolve(n, first, second), shuffle_distribution(n, a * b));
    }
  }
}

}  // namespace
}  // namespace dealmix
