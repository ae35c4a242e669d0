#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dealmix/dealing_method.hpp"
#include "dealmix/deck.hpp"
#include "dealmix/rational.hpp"

namespace dealmix {

struct HandTerm {
  HandProfile profile;
  // The quantity inside the absolute value for this hand:
  // sum over colour pairs a<b of W(D,a,b) * sum_{D' -> omega} Z(D',a,b) / (n_a n_b).
  Rational inner;
};

// Leading 1/a coefficient of ||P_a - Pi|| over hands.
struct CoefficientReport {
  DeckComposition composition;
  std::string method;
  Rational coefficient;
  // Sum of the signed inner terms over all hands; zero for a correct computation.
  Rational signed_total;
  std::uint64_t hands = 0;
  std::optional<std::vector<HandTerm>> per_hand;
};

struct EngineOptions {
  bool keep_per_hand = false;
  unsigned threads = 1;
};

// n / (4N): converts sum_omega |inner(omega)| into the variation-distance coefficient.
Rational variation_prefactor(const DeckComposition& comp);

// sum over all D' dealt into `profile` of Z(D', x, y), in closed form:
// count(omega) * sum_i x_i (l s + 1 - 2 S_i / s + sum_{j != i} o_j Z(j,i) / s^2),
// with S_i the position sum of player i and o_j the cards of player j that are neither x nor y.
Rational sum_z_over_profile(const DeckComposition& comp, const HandProfile& profile, const DealingMethod& method, int x,
                            int y);

// Initial deck in colour order; only consecutive colour pairs contribute.
CoefficientReport leading_coefficient_ordered(const DeckComposition& comp, const DealingMethod& method,
                                              const EngineOptions& options = {});

// Any initial deck; every colour pair with W(D,a,b) != 0 contributes.
CoefficientReport leading_coefficient_arbitrary(const Deck& deck, const DealingMethod& method,
                                                const EngineOptions& options = {});

// Two colours, four players, `cards` cards of which `black` come first in the initial deck:
// s / (b (n-b) C(n,b)) * sum_omega | prod_j C(s,b_j) * ((n+1) b - (2/s) sum_j b_j S_j) |.
Rational two_type_closed_form(int black, int cards, const DealingMethod& method);

}  // namespace dealmix
