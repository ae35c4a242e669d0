#include "dealmix/shuffle_exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dealmix/error.hpp"
#include "dealmix/pair_stats.hpp"

namespace dealmix {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (int image : mapping_) {
    if (image < 0 || image >= static_cast<int>(mapping_.size()) || hit[static_cast<std::size_t>(image)]) {
      throw InvalidInput("not a permutation");
    }
    hit[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> mapping(static_cast<std::size_t>(n));
  std::iota(mapping.begin(), mapping.end(), 0);
  return Permutation(std::move(mapping));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> mapping(images.begin(), images.end());
  for (int& m : mapping) --m;
  return Permutation(std::move(mapping));
}

std::uint64_t Permutation::rank() const {
  const auto n = mapping_.size();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller_after += mapping_[j] < mapping_[i];
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  if (rank != 0) throw InvalidInput("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> mapping;
  mapping.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
    mapping.push_back(*it);
    pool.erase(it);
  }
  return Permutation(std::move(mapping));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[static_cast<std::size_t>(mapping_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw InvalidInput("composing permutations of different sizes");
  std::vector<int> out(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) out[i] = next.mapping_[static_cast<std::size_t>(mapping_[i])];
  return Permutation(std::move(out));
}

int descents(std::span<const int> mapping) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < mapping.size(); ++i) d += mapping[i] > mapping[i + 1];
  return d;
}

int descents(const Permutation& pi) { return descents(pi.mapping()); }

Rational bayer_diaconis_prob(int n, int d, std::int64_t a) {
  if (n < 1) throw InvalidInput("deck size must be positive");
  if (d < 0 || d > n - 1)
    throw InvalidInput("descent count " + std::to_string(d) + " out of range for n = " + std::to_string(n));
  if (a < 1) throw InvalidInput("a-shuffle needs a >= 1");
  return Rational(binomial(a + n - d - 1, n), power(BigInt(static_cast<long>(a)), static_cast<unsigned>(n)));
}

std::uint64_t DescentTable::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

namespace {

void check_pair(const Deck& from, const Deck& to, const OracleLimits& limits) {
  if (from.composition().counts() != to.composition().counts()) {
    throw InvalidInput("decks " + from.str() + " and " + to.str() + " are not rearrangements of each other");
  }
  if (from.size() > limits.max_deck_size) {
    throw ScaleExceeded("oracle scale exceeded: deck of " + std::to_string(from.size()) + " cards, cap is " +
                        std::to_string(limits.max_deck_size));
  }
}

std::vector<std::vector<int>> positions_by_color(const std::vector<int>& cards, int colors) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(colors));
  for (std::size_t t = 0; t < cards.size(); ++t) out[static_cast<std::size_t>(cards[t])].push_back(static_cast<int>(t));
  return out;
}

}  // namespace

void for_each_transforming_permutation(const Deck& from, const Deck& to,
                                       const std::function<void(std::span<const int>)>& visit,
                                       const OracleLimits& limits) {
  check_pair(from, to, limits);
  const int colors = from.composition().colors();
  const auto src = positions_by_color(from.cards(), colors);
  auto dst = positions_by_color(to.cards(), colors);  // permuted in place, block by block
  std::vector<int> mapping(static_cast<std::size_t>(from.size()));
  while (true) {
    for (int c = 0; c < colors; ++c) {
      const auto& s = src[static_cast<std::size_t>(c)];
      const auto& d = dst[static_cast<std::size_t>(c)];
      for (std::size_t m = 0; m < s.size(); ++m) mapping[static_cast<std::size_t>(s[m])] = d[m];
    }
    visit(mapping);
    int c = 0;
    while (c < colors) {
      auto& d = dst[static_cast<std::size_t>(c)];
      if (std::next_permutation(d.begin(), d.end())) break;
      ++c;  // block wrapped back to sorted order; carry
    }
    if (c == colors) return;
  }
}

DescentTable descent_table(const Deck& from, const Deck& to, const OracleLimits& limits) {
  DescentTable table;
  table.n = from.size();
  table.counts.assign(static_cast<std::size_t>(table.n), 0);
  for_each_transforming_permutation(
      from, to, [&](std::span<const int> mapping) { ++table.counts[static_cast<std::size_t>(descents(mapping))]; },
      limits);
  return table;
}

Rational transition_probability(const DescentTable& table, std::int64_t a) {
  if (a < 1) throw InvalidInput("a-shuffle needs a >= 1");
  BigInt total = 0;
  for (int d = 0; d < table.n; ++d) {
    const auto b = table.counts[static_cast<std::size_t>(d)];
    if (b) total += BigInt(static_cast<unsigned long>(b)) * binomial(a + table.n - d - 1, table.n);
  }
  return Rational(total, power(BigInt(static_cast<long>(a)), static_cast<unsigned>(table.n)));
}

Rational transition_probability(const Deck& from, const Deck& to, std::int64_t a, const OracleLimits& limits) {
  return transition_probability(descent_table(from, to, limits), a);
}

Rational first_order_coefficient(const DescentTable& table) {
  const std::int64_t n = table.n;
  BigInt total = 0;
  for (std::int64_t d = 0; d < n; ++d) {
    const auto b = table.counts[static_cast<std::size_t>(d)];
    total += BigInt(static_cast<unsigned long>(b)) * BigInt(static_cast<long>(n * (n - 1 - 2 * d)));
  }
  return Rational(total, 2 * factorial(static_cast<unsigned>(n)));
}

Rational first_order_coefficient_oracle(const Deck& from, const Deck& to, const OracleLimits& limits) {
  return first_order_coefficient(descent_table(from, to, limits));
}

Rational c1_formula(const Deck& from, const Deck& to) {
  const auto& comp = from.composition();
  if (comp.counts() != to.composition().counts()) {
    throw InvalidInput("decks " + from.str() + " and " + to.str() + " are not rearrangements of each other");
  }
  Rational sum;
  for (int a = 0; a < comp.colors(); ++a) {
    for (int b = a + 1; b < comp.colors(); ++b) {
      const std::int64_t w = w_statistic(from, a, b);
      if (w == 0) continue;
      sum += Rational(w * z_statistic(to, a, b), static_cast<std::int64_t>(comp.count(a)) * comp.count(b));
    }
  }
  return sum * Rational(BigInt(comp.deck_size()), 2 * comp.arrangements());
}

std::vector<Deck> rearrangements(const Deck& deck) {
  std::vector<int> cards = deck.cards();
  std::sort(cards.begin(), cards.end());
  std::vector<Deck> out;
  do {
    out.emplace_back(deck.composition(), cards);
  } while (std::next_permutation(cards.begin(), cards.end()));
  return out;
}

HandDistributionOracle::HandDistributionOracle(const Deck& deck, const DealingMethod& method,
                                               const OracleLimits& limits)
    : composition_(deck.composition()) {
  if (deck.size() > limits.max_deck_size) {
    throw ScaleExceeded("oracle scale exceeded: deck of " + std::to_string(deck.size()) + " cards, cap is " +
                        std::to_string(limits.max_deck_size));
  }
  if (method.players() != composition_.players() || method.size() != deck.size()) {
    throw InvalidInput("dealing method " + method.str() + " does not fit deck " + deck.str());
  }
  profiles_ = enumerate_hand_profiles(composition_);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < profiles_.size(); ++i) {
    index.emplace(profiles_[i].flat(), i);
    stationary_.push_back(stationary_probability(composition_, profiles_[i]));
  }
  const auto n = static_cast<std::size_t>(deck.size());
  grouped_descents_.assign(profiles_.size(), std::vector<std::uint64_t>(n, 0));
  for (const Deck& target : rearrangements(deck)) {
    const DescentTable table = descent_table(deck, target, limits);
    auto& group = grouped_descents_[index.at(deal(target, method).flat())];
    for (std::size_t d = 0; d < n; ++d) group[d] += table.counts[d];
  }
}

std::vector<Rational> HandDistributionOracle::hand_probabilities(std::int64_t a) const {
  if (a < 1) throw InvalidInput("a-shuffle needs a >= 1");
  const int n = composition_.deck_size();
  std::vector<BigInt> weight(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) weight[static_cast<std::size_t>(d)] = binomial(a + n - d - 1, n);
  const BigInt scale = power(BigInt(static_cast<long>(a)), static_cast<unsigned>(n));
  std::vector<Rational> out;
  out.reserve(profiles_.size());
  for (const auto& group : grouped_descents_) {
    BigInt total = 0;
    for (std::size_t d = 0; d < group.size(); ++d) {
      if (group[d]) total += BigInt(static_cast<unsigned long>(group[d])) * weight[d];
    }
    out.emplace_back(total, scale);
  }
  return out;
}

Rational HandDistributionOracle::variation_distance(std::int64_t a) const {
  const auto probs = hand_probabilities(a);
  Rational total;
  for (std::size_t i = 0; i < probs.size(); ++i) total += (probs[i] - stationary_[i]).abs();
  return total / Rational(2);
}

std::vector<Rational> HandDistributionOracle::first_order_terms() const {
  std::vector<Rational> out;
  out.reserve(grouped_descents_.size());
  for (const auto& group : grouped_descents_) {
    DescentTable table{composition_.deck_size(), group};
    out.push_back(dealmix::first_order_coefficient(table));
  }
  return out;
}

Rational HandDistributionOracle::first_order_coefficient() const {
  Rational total;
  for (const auto& term : first_order_terms()) total += term.abs();
  return total / Rational(2);
}

Rational exact_hand_variation_distance(const Deck& deck, const DealingMethod& method, std::int64_t a,
                                       const OracleLimits& limits) {
  return HandDistributionOracle(deck, method, limits).variation_distance(a);
}

std::vector<Rational> shuffle_distribution(int n, std::int64_t a) {
  if (n < 1 || n > 8) throw ScaleExceeded("shuffle_distribution supports 1 <= n <= 8");
  const auto count = static_cast<std::uint64_t>(to_int64(factorial(static_cast<unsigned>(n))));
  std::vector<Rational> by_descents;
  for (int d = 0; d < n; ++d) by_descents.push_back(bayer_diaconis_prob(n, d, a));
  std::vector<Rational> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r)
    out.push_back(by_descents[static_cast<std::size_t>(descents(Permutation::unrank(n, r)))]);
  return out;
}

std::vector<Rational> convolve(int n, std::span<const Rational> first, std::span<const Rational> second) {
  const auto count = static_cast<std::size_t>(to_int64(factorial(static_cast<unsigned>(n))));
  if (first.size() != count || second.size() != count) throw InvalidInput("distribution size is not n!");
  std::vector<Permutation> perms;
  perms.reserve(count);
  for (std::size_t r = 0; r < count; ++r) perms.push_back(Permutation::unrank(n, r));
  std::vector<Rational> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (first[i].is_zero()) continue;
    for (std::size_t j = 0; j < count; ++j) {
      if (second[j].is_zero()) continue;
      out[perms[i].then(perms[j]).rank()] += first[i] * second[j];
    }
  }
  return out;
}

}  // namespace dealmix
