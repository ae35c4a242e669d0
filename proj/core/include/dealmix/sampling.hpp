#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dealmix/dealing_method.hpp"
#include "dealmix/deck.hpp"
#include "dealmix/rational.hpp"
#include "dealmix/shuffle_exact.hpp"

namespace dealmix {

// SplitMix64. Small, seedable, and cheap to construct, so every sample gets its own
// stream derived from (seed, sample index).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent stream for sample `index` of a run seeded with `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  // Uniform in [0, bound), bound >= 1, identical on every platform.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct ShuffleSample {
  std::uint64_t seed = 0;
  std::uint64_t a = 2;
  Deck deck;
};

// One a-shuffle (GSR with a packets): every final position draws a packet label uniformly;
// packet c consists of the next block of cards of the original deck, dealt in order to the
// positions labelled c. The returned permutation sends original position i to its new position.
Permutation sample_a_shuffle_permutation(int n, std::uint64_t a, SplitMix64& rng);

Deck sample_a_shuffle(const Deck& deck, std::uint64_t a, std::uint64_t seed);
Deck sample_a_shuffle(const ShuffleSample& sample);

struct SimulationOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  // The exact variation distance is added when the deck is within these limits.
  OracleLimits limits{};
};

struct SimulationResult {
  std::vector<HandProfile> profiles;       // every hand, lexicographic
  std::vector<std::uint64_t> frequencies;  // aligned with profiles
  std::vector<Rational> stationary;        // aligned with profiles
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Rational empirical_distance;  // (1/2) sum |freq/samples - Pi|
  std::optional<Rational> exact_distance;
};

SimulationResult simulate_hand_distribution(const Deck& deck, const DealingMethod& method, std::uint64_t a,
                                            const SimulationOptions& options = {});

// Empirical frequency of every permutation of n distinct cards, indexed by Permutation::rank().
std::vector<std::uint64_t> sample_permutation_counts(int n, std::uint64_t a, std::uint64_t samples, std::uint64_t seed,
                                                     unsigned threads = 1);

}  // namespace dealmix
