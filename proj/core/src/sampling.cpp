#include "dealmix/sampling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "dealmix/error.hpp"
#include "dealmix/parallel.hpp"

namespace dealmix {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kBlock = 4096;

}  // namespace

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ index));
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Lemire's multiply-and-reject.
  std::uint64_t x = (*this)();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Permutation sample_a_shuffle_permutation(int n, std::uint64_t a, SplitMix64& rng) {
  if (a < 1) throw InvalidInput("a-shuffle needs a >= 1");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (a == 1) return Permutation(std::move(order));
  std::vector<std::uint64_t> label(static_cast<std::size_t>(n));
  for (auto& l : label) l = rng.below(a);
  // Final positions grouped by packet label, ascending within a packet; the k-th card of
  // the original deck lands on the k-th of them.
  std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    return label[static_cast<std::size_t>(lhs)] < label[static_cast<std::size_t>(rhs)];
  });
  return Permutation(std::move(order));
}

Deck sample_a_shuffle(const Deck& deck, std::uint64_t a, std::uint64_t seed) {
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  const Permutation pi = sample_a_shuffle_permutation(deck.size(), a, rng);
  return Deck(deck.composition(), permute(pi, std::span<const int>(deck.cards())));
}

Deck sample_a_shuffle(const ShuffleSample& sample) { return sample_a_shuffle(sample.deck, sample.a, sample.seed); }

SimulationResult simulate_hand_distribution(const Deck& deck, const DealingMethod& method, std::uint64_t a,
                                            const SimulationOptions& options) {
  const auto& comp = deck.composition();
  if (options.samples < 1) throw InvalidInput("simulation needs at least one sample");
  if (a < 1) throw InvalidInput("a-shuffle needs a >= 1");
  if (method.players() != comp.players() || method.size() != deck.size()) {
    throw InvalidInput("dealing method " + method.str() + " does not fit deck " + deck.str());
  }
  SimulationResult result;
  result.samples = options.samples;
  result.seed = options.seed;
  result.profiles = enumerate_hand_profiles(comp);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < result.profiles.size(); ++i) {
    index.emplace(result.profiles[i].flat(), i);
    result.stationary.push_back(stationary_probability(comp, result.profiles[i]));
  }

  const std::uint64_t blocks = (options.samples + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> per_block(blocks);
  parallel_for(blocks, options.threads, [&](std::size_t block, unsigned) {
    std::vector<std::uint64_t> counts(result.profiles.size(), 0);
    std::vector<int> shuffled(static_cast<std::size_t>(deck.size()));
    const std::uint64_t begin = block * kBlock;
    const std::uint64_t end = std::min(options.samples, begin + kBlock);
    for (std::uint64_t sample = begin; sample < end; ++sample) {
      SplitMix64 rng = SplitMix64::stream(options.seed, sample);
      const Permutation pi = sample_a_shuffle_permutation(deck.size(), a, rng);
      for (int t = 0; t < deck.size(); ++t)
        shuffled[static_cast<std::size_t>(pi[static_cast<std::size_t>(t)])] = deck[static_cast<std::size_t>(t)];
      ++counts[index.at(deal(shuffled, comp.colors(), method).flat())];
    }
    per_block[block] = std::move(counts);
  });

  result.frequencies.assign(result.profiles.size(), 0);
  for (const auto& counts : per_block) {
    for (std::size_t i = 0; i < counts.size(); ++i) result.frequencies[i] += counts[i];
  }
  Rational distance;
  const Rational total(static_cast<std::int64_t>(options.samples));
  for (std::size_t i = 0; i < result.profiles.size(); ++i) {
    distance += (Rational(static_cast<std::int64_t>(result.frequencies[i])) / total - result.stationary[i]).abs();
  }
  result.empirical_distance = distance / Rational(2);
  if (deck.size() <= options.limits.max_deck_size && a <= static_cast<std::uint64_t>(INT64_MAX)) {
    result.exact_distance = exact_hand_variation_distance(deck, method, static_cast<std::int64_t>(a), options.limits);
  }
  return result;
}

std::vector<std::uint64_t> sample_permutation_counts(int n, std::uint64_t a, std::uint64_t samples, std::uint64_t seed,
                                                     unsigned threads) {
  if (n < 1 || n > 10) throw ScaleExceeded("permutation counting supports 1 <= n <= 10");
  const auto size = static_cast<std::size_t>(to_int64(factorial(static_cast<unsigned>(n))));
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> per_block(blocks);
  parallel_for(blocks, threads, [&](std::size_t block, unsigned) {
    std::vector<std::uint64_t> counts(size, 0);
    const std::uint64_t begin = block * kBlock;
    const std::uint64_t end = std::min(samples, begin + kBlock);
    for (std::uint64_t sample = begin; sample < end; ++sample) {
      SplitMix64 rng = SplitMix64::stream(seed, sample);
      ++counts[sample_a_shuffle_permutation(n, a, rng).rank()];
    }
    per_block[block] = std::move(counts);
  });
  std::vector<std::uint64_t> out(size, 0);
  for (const auto& counts : per_block) {
    for (std::size_t i = 0; i < size; ++i) out[i] += counts[i];
  }
  return out;
}

}  // namespace dealmix
