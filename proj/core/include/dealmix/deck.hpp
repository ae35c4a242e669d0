#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dealmix/rational.hpp"

namespace dealmix {

class DealingMethod;

// Colour multiplicities of a deck of players * hand_size cards.
//
// Colours are 0-based indices ordered as they appear in the initial ordered deck,
// so "colour a precedes colour b" is simply a < b. Every colour must be present.
class DeckComposition {
 public:
  DeckComposition(std::vector<int> counts, int players, int hand_size);

  int colors() const { return static_cast<int>(counts_.size()); }
  int players() const { return players_; }
  int hand_size() const { return hand_size_; }
  int deck_size() const { return players_ * hand_size_; }
  int count(int color) const { return counts_.at(static_cast<std::size_t>(color)); }
  const std::vector<int>& counts() const { return counts_; }

  // N: number of distinct arrangements of the deck, (l s)! / prod p_i!.
  BigInt arrangements() const;

  // "26,26"
  std::string str() const;

  friend bool operator==(const DeckComposition&, const DeckComposition&) = default;

 private:
  std::vector<int> counts_;
  int players_;
  int hand_size_;
};

// Concrete card sequence; cards()[t] is the colour of the card at (0-based) position t.
class Deck {
 public:
  Deck(DeckComposition composition, std::vector<int> cards);

  // The initial ordered deck: all colour-0 cards, then colour 1, ...
  static Deck ordered(const DeckComposition& composition);

  // Letters (B, R, G, then the remaining A..Z) or comma-separated 1-based colour indices.
  // The number of colours is the largest index used; each colour in between must occur.
  static Deck parse(std::string_view text, int players);

  const DeckComposition& composition() const { return composition_; }
  const std::vector<int>& cards() const { return cards_; }
  int size() const { return static_cast<int>(cards_.size()); }
  int operator[](std::size_t position) const { return cards_[position]; }

  // Letter form when every colour has a letter, comma form otherwise.
  std::string str() const;

  friend bool operator==(const Deck&, const Deck&) = default;

 private:
  DeckComposition composition_;
  std::vector<int> cards_;
};

// Letter used for a colour in the deck text format: B, R, G, A, C, D, E, F, H, ...
char color_letter(int color);
// Inverse of color_letter; -1 for characters that are not colour letters.
int color_from_letter(char letter);

// Hand of every player: counts(color, player) cards of that colour held by that player.
class HandProfile {
 public:
  HandProfile(int colors, int players);
  HandProfile(int colors, int players, std::vector<int> flat_counts);

  int colors() const { return colors_; }
  int players() const { return players_; }
  int count(int color, int player) const { return counts_[static_cast<std::size_t>(color * players_ + player)]; }
  int& at(int color, int player) { return counts_[static_cast<std::size_t>(color * players_ + player)]; }
  // Row-major colour x player.
  const std::vector<int>& flat() const { return counts_; }

  int player_total(int player) const;
  int color_total(int color) const;
  // Cards of player `player` that are neither colour x nor colour y.
  int others(int x, int y, int player) const { return player_total(player) - count(x, player) - count(y, player); }

  // Throws InvalidInput unless rows sum to the colour counts and columns to the hand size.
  void validate(const DeckComposition& composition) const;

  std::string str() const;

  friend bool operator==(const HandProfile&, const HandProfile&) = default;
  friend auto operator<=>(const HandProfile& a, const HandProfile& b) { return a.counts_ <=> b.counts_; }

 private:
  int colors_;
  int players_;
  std::vector<int> counts_;
};

namespace detail {

template <typename Visit>
void enumerate_rows(const DeckComposition& comp, int color, std::vector<int>& capacity, HandProfile& profile,
                    Visit& visit) {
  const int players = comp.players();
  if (color == comp.colors() - 1) {
    for (int j = 0; j < players; ++j) profile.at(color, j) = capacity[static_cast<std::size_t>(j)];
    visit(static_cast<const HandProfile&>(profile));
    return;
  }
  // suffix[j]: capacity of players j..end
  std::vector<int> suffix(static_cast<std::size_t>(players) + 1, 0);
  for (int j = players - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + capacity[static_cast<std::size_t>(j)];

  auto place = [&](auto&& self, int player, int remaining) -> void {
    if (player == players) {
      enumerate_rows(comp, color + 1, capacity, profile, visit);
      return;
    }
    const int cap = capacity[static_cast<std::size_t>(player)];
    const int lo = std::max(0, remaining - suffix[static_cast<std::size_t>(player) + 1]);
    const int hi = std::min(cap, remaining);
    for (int c = lo; c <= hi; ++c) {
      profile.at(color, player) = c;
      capacity[static_cast<std::size_t>(player)] = cap - c;
      self(self, player + 1, remaining - c);
    }
    capacity[static_cast<std::size_t>(player)] = cap;
  };
  place(place, 0, comp.count(color));
}

}  // namespace detail

// Visits every hand profile of the composition exactly once, in lexicographic order of the
// row-major (colour x player) count matrix. The profile passed to `visit` is reused between
// calls; copy it to keep it.
template <typename Visit>
void for_each_hand_profile(const DeckComposition& comp, Visit&& visit) {
  HandProfile profile(comp.colors(), comp.players());
  std::vector<int> capacity(static_cast<std::size_t>(comp.players()), comp.hand_size());
  detail::enumerate_rows(comp, 0, capacity, profile, visit);
}

// Admissible colour-0 rows in lexicographic order. Together with
// for_each_hand_profile_with_leading_row this partitions the enumeration into ordered shards.
std::vector<std::vector<int>> leading_rows(const DeckComposition& comp);

template <typename Visit>
void for_each_hand_profile_with_leading_row(const DeckComposition& comp, std::span<const int> leading, Visit&& visit) {
  HandProfile profile(comp.colors(), comp.players());
  std::vector<int> capacity(static_cast<std::size_t>(comp.players()), comp.hand_size());
  if (comp.colors() == 1) {
    detail::enumerate_rows(comp, 0, capacity, profile, visit);
    return;
  }
  for (int j = 0; j < comp.players(); ++j) {
    profile.at(0, j) = leading[static_cast<std::size_t>(j)];
    capacity[static_cast<std::size_t>(j)] -= leading[static_cast<std::size_t>(j)];
  }
  detail::enumerate_rows(comp, 1, capacity, profile, visit);
}

std::vector<HandProfile> enumerate_hand_profiles(const DeckComposition& comp);
std::uint64_t count_hand_profiles(const DeckComposition& comp);

// Pi(omega) = s!^l / (l s)! * prod_i p_i! / prod_{i,j} counts[i][j]!
Rational stationary_probability(const DeckComposition& comp, const HandProfile& profile);

// Number of arrangements D' that a dealing method turns into `profile`: s!^l / prod counts[i][j]!.
// The value does not depend on the method; it is only checked for shape.
BigInt count_decks_for_profile(const DeckComposition& comp, const HandProfile& profile, const DealingMethod& method);
BigInt count_decks_for_profile(const DeckComposition& comp, const HandProfile& profile);

HandProfile deal(const Deck& deck, const DealingMethod& method);
// Same as deal() on a raw colour sequence; `colors` fixes the number of rows.
HandProfile deal(std::span<const int> cards, int colors, const DealingMethod& method);

}  // namespace dealmix
