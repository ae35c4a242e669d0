#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dealmix {

enum class CanonicalDealing { kOrdered, kCyclic, kBackAndForth };

// Assignment of deck positions to players: the t-th card off the shuffled deck goes to
// player assignment()[t]. Players are 0-based here and 1-based in text (N,E,S,W for four
// players). Every player receives exactly hand_size() cards.
class DealingMethod {
 public:
  DealingMethod(int players, std::vector<int> assignment);

  // Player 0 takes the first s cards, player 1 the next s, ...
  static DealingMethod ordered(int players, int hand_size);
  // 1 2 ... l 1 2 ... l ...
  static DealingMethod cyclic(int players, int hand_size);
  // 1 .. l l .. 1 1 .. l ..., cut after l*s cards (odd s ends on a forward pass).
  static DealingMethod back_and_forth(int players, int hand_size);
  static DealingMethod canonical(CanonicalDealing kind, int players, int hand_size);

  // Player symbols: N,E,S,W when players == 4, otherwise 1-9 then A-Z (10, 11, ...).
  // Digits are accepted for four players as well.
  static DealingMethod parse(std::string_view text, int players);

  int players() const { return players_; }
  int hand_size() const { return hand_size_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  int player_at(int position) const { return assignment_[static_cast<std::size_t>(position)]; }
  const std::vector<int>& assignment() const { return assignment_; }

  // 1-based positions dealt to `player`, ascending (the i_t of the player).
  const std::vector<int>& positions_of(int player) const { return positions_[static_cast<std::size_t>(player)]; }

  // Same players, relabelled so that players appear in order of their first card.
  DealingMethod canonical_labels() const;
  DealingMethod with_swapped_positions(int first, int second) const;

  std::string str() const;

  friend bool operator==(const DealingMethod& a, const DealingMethod& b) {
    return a.players_ == b.players_ && a.assignment_ == b.assignment_;
  }
  friend auto operator<=>(const DealingMethod& a, const DealingMethod& b) { return a.assignment_ <=> b.assignment_; }

 private:
  int players_;
  int hand_size_;
  std::vector<int> assignment_;
  std::vector<std::vector<int>> positions_;
};

char player_symbol(int player, int players);
std::string_view canonical_name(CanonicalDealing kind);
// "ordered", "cyclic" or "backforth"; InvalidInput otherwise.
CanonicalDealing parse_canonical(std::string_view name);

}  // namespace dealmix
