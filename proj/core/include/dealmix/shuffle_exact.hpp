#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "dealmix/dealing_method.hpp"
#include "dealmix/deck.hpp"
#include "dealmix/error.hpp"
#include "dealmix/rational.hpp"

namespace dealmix {

// Bijection of {0..n-1}; the object in position i moves to position mapping()[i].
class Permutation {
 public:
  explicit Permutation(std::vector<int> mapping);
  static Permutation identity(int n);
  // Mapping written with 1-based images, e.g. {4,3,1,2,5}.
  static Permutation from_one_based(std::span<const int> images);
  // Rank in the lexicographic order of all permutations of size n (0 .. n!-1).
  static Permutation unrank(int n, std::uint64_t rank);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator[](std::size_t i) const { return mapping_[i]; }
  const std::vector<int>& mapping() const { return mapping_; }

  std::uint64_t rank() const;
  Permutation inverse() const;
  // First *this, then `next`.
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> mapping_;
};

// #{i : pi(i) > pi(i+1)}
int descents(const Permutation& pi);
int descents(std::span<const int> mapping);

// out[pi(i)] = seq[i]
template <typename T>
std::vector<T> permute(const Permutation& pi, std::span<const T> seq);

// (1/a^n) C(a + n - d - 1, n): probability of one particular permutation with d descents
// under an a-shuffle of n cards.
Rational bayer_diaconis_prob(int n, int d, std::int64_t a);

// Size caps for the brute-force routines. They refuse larger inputs with ScaleExceeded.
struct OracleLimits {
  int max_deck_size = 10;
};

// b_d: how many permutations transforming D into D' have d descents.
struct DescentTable {
  int n = 0;
  std::vector<std::uint64_t> counts;  // indexed by d, size n

  std::uint64_t total() const;
};

// Visits every permutation pi with D'[pi(i)] = D[i], permuting positions within colour
// blocks only. The mapping span is reused between calls.
void for_each_transforming_permutation(const Deck& from, const Deck& to,
                                       const std::function<void(std::span<const int>)>& visit,
                                       const OracleLimits& limits = {});

DescentTable descent_table(const Deck& from, const Deck& to, const OracleLimits& limits = {});

Rational transition_probability(const DescentTable& table, std::int64_t a);
Rational transition_probability(const Deck& from, const Deck& to, std::int64_t a, const OracleLimits& limits = {});

// 1/a coefficient of the exact transition probability, from the descent table:
// sum_d b_d * n((n-1)/2 - d) / n!.
Rational first_order_coefficient(const DescentTable& table);
Rational first_order_coefficient_oracle(const Deck& from, const Deck& to, const OracleLimits& limits = {});

// Closed form: n/(2N) * sum_{a<b} W(D,a,b) Z(D',a,b) / (n_a n_b).
Rational c1_formula(const Deck& from, const Deck& to);

// Every distinct rearrangement of the deck, lexicographic.
std::vector<Deck> rearrangements(const Deck& deck);

// Exact hand distribution after an a-shuffle and a deal, by full enumeration of the
// rearrangements D' of a small deck. Descent tables are computed once, so the distribution
// can be evaluated for many values of a.
class HandDistributionOracle {
 public:
  HandDistributionOracle(const Deck& deck, const DealingMethod& method, const OracleLimits& limits = {});

  const std::vector<HandProfile>& profiles() const { return profiles_; }

  // P_a(omega) for each profile, aligned with profiles().
  std::vector<Rational> hand_probabilities(std::int64_t a) const;

  // (1/2) sum_omega |P_a(omega) - Pi(omega)|
  Rational variation_distance(std::int64_t a) const;

  // (1/2) sum_omega |sum_{D' -> omega} c_1(D, D')| with c_1 from the descent tables.
  Rational first_order_coefficient() const;
  // sum_{D' -> omega} c_1(D, D'), aligned with profiles().
  std::vector<Rational> first_order_terms() const;

 private:
  DeckComposition composition_;
  std::vector<HandProfile> profiles_;
  std::vector<Rational> stationary_;
  // For each profile, the summed descent table of all D' dealt into it.
  std::vector<std::vector<std::uint64_t>> grouped_descents_;
};

Rational exact_hand_variation_distance(const Deck& deck, const DealingMethod& method, std::int64_t a,
                                       const OracleLimits& limits = {});

// Distribution of the a-shuffle on S_n, indexed by Permutation::rank(). n <= 8.
std::vector<Rational> shuffle_distribution(int n, std::int64_t a);
// Distribution of "first, then second" for two distributions on S_n.
std::vector<Rational> convolve(int n, std::span<const Rational> first, std::span<const Rational> second);

template <typename T>
std::vector<T> permute(const Permutation& pi, std::span<const T> seq) {
  if (static_cast<int>(seq.size()) != pi.size()) {
    throw InvalidInput("apply: permutation and sequence lengths differ");
  }
  std::vector<T> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out[static_cast<std::size_t>(pi[i])] = seq[i];
  return out;
}

}  // namespace dealmix
