#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dealmix/coefficient.hpp"
#include "dealmix/dealing_method.hpp"
#include "dealmix/deck.hpp"
#include "dealmix/rational.hpp"

namespace dealmix {

// 52-card four-player sequence whose position sums are 344, 345, 344, 345.
inline constexpr std::string_view kConjecturedSequence = "SNEWWSENNEWSWSENNESWWSENNESWWSENNESWWSENNESWWSENNESW";

// The sequence above, validated on first use (52 symbols, 13 per player).
const DealingMethod& conjectured_method();

// Named generators: ordered, cyclic, backforth, conjectured, or seq:<symbols>. A bare
// symbol string is accepted as a custom sequence too.
class MethodCatalog {
 public:
  static DealingMethod make(std::string_view spec, int players, int hand_size);
  static std::vector<std::string> names();
};

// sum_i |S_i - (l s + 1) s / 2|: distance of the position sums from their common mean.
Rational conjecture_metric(const DealingMethod& method);

struct MethodRow {
  std::string spec;
  DealingMethod method;
  CoefficientReport report;
};

// One report per method over the same composition. Ratios are left to the caller.
std::vector<MethodRow> compare_methods(const DeckComposition& comp, const std::vector<std::string>& specs,
                                       const EngineOptions& options = {});
std::vector<MethodRow> compare_methods(const DeckComposition& comp, const std::vector<DealingMethod>& methods,
                                       const EngineOptions& options = {});

struct GridCell {
  int black;
  int red;
  int green;
  Rational coefficient;
  Rational signed_total;
};

// Ordered three-colour decks (black, red, green) of `cards` cards, four players, every
// b, r, g >= 1; cells in (b, r) lexicographic order.
std::vector<GridCell> grid_three_types(int cards, const DealingMethod& method, unsigned threads = 1);

struct SweepRow {
  int black;
  std::vector<Rational> coefficients;  // one per method
};

// Ordered two-colour decks with b = 1 .. cards-1, four players.
std::vector<SweepRow> two_type_sweep(int cards, const std::vector<DealingMethod>& methods, unsigned threads = 1);

enum class SearchObjective { kCoefficient, kMetric };
enum class SearchStrategy { kExhaustive, kLocal, kAnneal };

SearchObjective parse_objective(std::string_view name);
SearchStrategy parse_strategy(std::string_view name);

struct SearchRequest {
  DeckComposition composition;
  SearchObjective objective = SearchObjective::kMetric;
  SearchStrategy strategy = SearchStrategy::kLocal;
  // Objective evaluations for local/anneal; ignored by exhaustive.
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
  // Exhaustive search is limited to decks of at most this many cards.
  int exhaustive_cap = 16;
};

struct SearchResult {
  DealingMethod best;
  Rational score;
  std::uint64_t evaluations = 0;
  // Other sequences seen with the best score (canonical labels, lexicographic, capped).
  std::vector<DealingMethod> co_optimal;
};

// Lower objective is better; ties go to the lexicographically smaller sequence.
SearchResult search_dealing(const SearchRequest& request);

// Objective value of a method; the coefficient objective uses the ordered initial deck.
Rational search_objective_value(const DeckComposition& comp, SearchObjective objective, const DealingMethod& method);

}  // namespace dealmix
