#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dealmix/dealing_method.hpp"
#include "dealmix/deck.hpp"
#include "dealmix/rational.hpp"

namespace dealmix {

// W(D,x,y): #x-y digraphs minus #y-x digraphs.
std::int64_t w_statistic(std::span<const int> cards, int x, int y);
std::int64_t w_statistic(const Deck& deck, int x, int y);

// Z(D,x,y): #x-y pairs minus #y-x pairs (pairs need not be adjacent).
std::int64_t z_statistic(std::span<const int> cards, int x, int y);
std::int64_t z_statistic(const Deck& deck, int x, int y);

// U(i) for a 1-based position: other cards before minus other cards after, minus 2i,
// where "other" means neither x nor y.
struct PositionalTerm {
  int position;
  std::int64_t u;
};

std::vector<PositionalTerm> positional_terms(std::span<const int> cards, int x, int y);

// Z(D,x,y) rebuilt one x-card at a time: sum over x positions i of (n + 1 + U(i)).
std::int64_t z_positional(std::span<const int> cards, int x, int y);
std::int64_t z_positional(const Deck& deck, int x, int y);

// Z(j,i) of the dealing sequence: #(j before i) position pairs minus #(i before j). 0 when j == i.
std::int64_t dealing_z(const DealingMethod& method, int j, int i);
// All Z(j,i), row j, column i.
std::vector<std::vector<std::int64_t>> dealing_z_matrix(const DealingMethod& method);

// +1 when j gets its first card before i, -1 when i does, 0 for j == i.
int dealt_first(const DealingMethod& method, int j, int i);

// Sum of the 1-based positions dealt to `player`.
std::int64_t position_sum(const DealingMethod& method, int player);

// l s + 1 - 2 * position_sum / s, from the concrete sequence.
Rational position_term(const DealingMethod& method, int player);

// The same quantity for a canonical method, from its closed form (player is 0-based).
Rational closed_form_position_term(CanonicalDealing kind, int players, int hand_size, int player);

}  // namespace dealmix
