#include "dealmix/pair_stats.hpp"

#include "dealmix/error.hpp"

namespace dealmix {
namespace {

void require_distinct(int x, int y) {
  if (x == y) throw InvalidInput("pair statistics need two different colours");
}

}  // namespace

std::int64_t w_statistic(std::span<const int> cards, int x, int y) {
  require_distinct(x, y);
  std::int64_t w = 0;
  for (std::size_t t = 0; t + 1 < cards.size(); ++t) {
    if (cards[t] == x && cards[t + 1] == y) ++w;
    if (cards[t] == y && cards[t + 1] == x) --w;
  }
  return w;
}

std::int64_t w_statistic(const Deck& deck, int x, int y) { return w_statistic(deck.cards(), x, y); }

std::int64_t z_statistic(std::span<const int> cards, int x, int y) {
  require_distinct(x, y);
  std::int64_t z = 0;
  std::int64_t seen_x = 0;
  std::int64_t seen_y = 0;
  for (int c : cards) {
    if (c == x) {
      z -= seen_y;
      ++seen_x;
    } else if (c == y) {
      z += seen_x;
      ++seen_y;
    }
  }
  return z;
}

std::int64_t z_statistic(const Deck& deck, int x, int y) { return z_statistic(deck.cards(), x, y); }

std::vector<PositionalTerm> positional_terms(std::span<const int> cards, int x, int y) {
  require_distinct(x, y);
  std::int64_t others_total = 0;
  for (int c : cards) others_total += (c != x && c != y);
  std::vector<PositionalTerm> terms;
  terms.reserve(cards.size());
  std::int64_t before = 0;
  for (std::size_t t = 0; t < cards.size(); ++t) {
    const bool other = cards[t] != x && cards[t] != y;
    const std::int64_t after = others_total - before - (other ? 1 : 0);
    const int position = static_cast<int>(t) + 1;
    terms.push_back({position, before - after - 2 * position});
    if (other) ++before;
  }
  return terms;
}

std::int64_t z_positional(std::span<const int> cards, int x, int y) {
  const auto n = static_cast<std::int64_t>(cards.size());
  std::int64_t z = 0;
  for (const auto& term : positional_terms(cards, x, y)) {
    if (cards[static_cast<std::size_t>(term.position - 1)] == x) z += n + 1 + term.u;
  }
  return z;
}

std::int64_t z_positional(const Deck& deck, int x, int y) { return z_positional(deck.cards(), x, y); }

std::int64_t dealing_z(const DealingMethod& method, int j, int i) {
  if (j == i) return 0;
  std::int64_t z = 0;
  std::int64_t seen_j = 0;
  std::int64_t seen_i = 0;
  for (int p : method.assignment()) {
    if (p == j) {
      z -= seen_i;
      ++seen_j;
    } else if (p == i) {
      z += seen_j;
      ++seen_i;
    }
  }
  return z;
}

std::vector<std::vector<std::int64_t>> dealing_z_matrix(const DealingMethod& method) {
  const int players = method.players();
  std::vector<std::vector<std::int64_t>> z(static_cast<std::size_t>(players),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(players), 0));
  // seen[p]: cards dealt to p so far
  std::vector<std::int64_t> seen(static_cast<std::size_t>(players), 0);
  for (int p : method.assignment()) {
    for (int q = 0; q < players; ++q) {
      if (q == p) continue;
      z[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] += seen[static_cast<std::size_t>(q)];
      z[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] -= seen[static_cast<std::size_t>(q)];
    }
    ++seen[static_cast<std::size_t>(p)];
  }
  return z;
}

int dealt_first(const DealingMethod& method, int j, int i) {
  if (j == i) return 0;
  return method.positions_of(j).front() < method.positions_of(i).front() ? 1 : -1;
}

std::int64_t position_sum(const DealingMethod& method, int player) {
  if (player < 0 || player >= method.players()) throw InvalidInput("no such player");
  std::int64_t sum = 0;
  for (int pos : method.positions_of(player)) sum += pos;
  return sum;
}

Rational position_term(const DealingMethod& method, int player) {
  const std::int64_t s = method.hand_size();
  return Rational(static_cast<std::int64_t>(method.size()) + 1) - Rational(2 * position_sum(method, player), s);
}

Rational closed_form_position_term(CanonicalDealing kind, int players, int hand_size, int player) {
  if (player < 0 || player >= players) throw InvalidInput("no such player");
  // (l - 2i + 1) with i 1-based
  const std::int64_t spread = players - 2 * (player + 1) + 1;
  switch (kind) {
    case CanonicalDealing::kOrdered:
      return Rational(hand_size * spread);
    case CanonicalDealing::kCyclic:
      return Rational(spread);
    case CanonicalDealing::kBackAndForth:
      return hand_size % 2 == 0 ? Rational(0) : Rational(spread, hand_size);
  }
  throw InvalidInput("unknown dealing kind");
}

}  // namespace dealmix
