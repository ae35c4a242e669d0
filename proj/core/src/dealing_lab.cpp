#include "dealmix/dealing_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dealmix/error.hpp"
#include "dealmix/pair_stats.hpp"
#include "dealmix/parallel.hpp"
#include "dealmix/sampling.hpp"

namespace dealmix {
namespace {

constexpr std::size_t kMaxCoOptimal = 64;

}  // namespace

const DealingMethod& conjectured_method() {
  static const DealingMethod method = [] {
    if (kConjecturedSequence.size() != 52) throw std::logic_error("conjectured sequence must have 52 symbols");
    DealingMethod m = DealingMethod::parse(kConjecturedSequence, 4);
    if (m.hand_size() != 13) throw std::logic_error("conjectured sequence must give 13 cards to each player");
    return m;
  }();
  return method;
}

DealingMethod MethodCatalog::make(std::string_view spec, int players, int hand_size) {
  DealingMethod method = [&] {
    if (spec == "ordered") return DealingMethod::ordered(players, hand_size);
    if (spec == "cyclic") return DealingMethod::cyclic(players, hand_size);
    if (spec == "backforth") return DealingMethod::back_and_forth(players, hand_size);
    if (spec == "conjectured") {
      if (players != 4 || hand_size != 13) {
        throw InvalidInput("the conjectured sequence is defined for 4 players x 13 cards only");
      }
      return conjectured_method();
    }
    if (spec.starts_with("seq:")) return DealingMethod::parse(spec.substr(4), players);
    if (spec.empty()) throw InvalidInput("empty method spec");
    return DealingMethod::parse(spec, players);
  }();
  if (method.players() != players || method.hand_size() != hand_size) {
    throw InvalidInput("method '" + std::string(spec) + "' deals " + std::to_string(method.size()) +
                       " cards; expected " + std::to_string(players) + " x " + std::to_string(hand_size));
  }
  return method;
}

std::vector<std::string> MethodCatalog::names() { return {"ordered", "cyclic", "backforth", "conjectured"}; }

Rational conjecture_metric(const DealingMethod& method) {
  const std::int64_t s = method.hand_size();
  // mean position sum (l s + 1) s / 2, kept doubled to stay integral
  const std::int64_t twice_mean = (static_cast<std::int64_t>(method.size()) + 1) * s;
  std::int64_t twice_total = 0;
  for (int p = 0; p < method.players(); ++p) twice_total += std::abs(2 * position_sum(method, p) - twice_mean);
  return Rational(twice_total, 2);
}

std::vector<MethodRow> compare_methods(const DeckComposition& comp, const std::vector<DealingMethod>& methods,
                                       const EngineOptions& options) {
  std::vector<MethodRow> rows;
  for (const auto& method : methods) {
    rows.push_back({method.str(), method, leading_coefficient_ordered(comp, method, options)});
  }
  return rows;
}

std::vector<MethodRow> compare_methods(const DeckComposition& comp, const std::vector<std::string>& specs,
                                       const EngineOptions& options) {
  std::vector<MethodRow> rows;
  for (const auto& spec : specs) {
    DealingMethod method = MethodCatalog::make(spec, comp.players(), comp.hand_size());
    auto report = leading_coefficient_ordered(comp, method, options);
    rows.push_back({spec, std::move(method), std::move(report)});
  }
  return rows;
}

std::vector<GridCell> grid_three_types(int cards, const DealingMethod& method, unsigned threads) {
  if (cards < 4 || cards % 4 != 0) throw InvalidInput("grid needs a multiple of 4 cards");
  const int s = cards / 4;
  if (method.players() != 4 || method.hand_size() != s) throw InvalidInput("grid needs a four-player method");
  std::vector<GridCell> cells;
  for (int b = 1; b <= cards - 2; ++b) {
    for (int r = 1; b + r <= cards - 1; ++r) cells.push_back({b, r, cards - b - r, Rational(0), Rational(0)});
  }
  parallel_for(cells.size(), threads, [&](std::size_t i, unsigned) {
    auto& cell = cells[i];
    const DeckComposition comp({cell.black, cell.red, cell.green}, 4, s);
    const auto report = leading_coefficient_ordered(comp, method);
    cell.coefficient = report.coefficient;
    cell.signed_total = report.signed_total;
  });
  return cells;
}

std::vector<SweepRow> two_type_sweep(int cards, const std::vector<DealingMethod>& methods, unsigned threads) {
  if (cards < 4 || cards % 4 != 0) throw InvalidInput("sweep needs a multiple of 4 cards");
  const int s = cards / 4;
  std::vector<SweepRow> rows;
  for (int b = 1; b <= cards - 1; ++b) rows.push_back({b, std::vector<Rational>(methods.size())});
  parallel_for(rows.size(), threads, [&](std::size_t i, unsigned) {
    auto& row = rows[i];
    const DeckComposition comp({row.black, cards - row.black}, 4, s);
    for (std::size_t m = 0; m < methods.size(); ++m) {
      row.coefficients[m] = leading_coefficient_ordered(comp, methods[m]).coefficient;
    }
  });
  return rows;
}

SearchObjective parse_objective(std::string_view name) {
  if (name == "coefficient") return SearchObjective::kCoefficient;
  if (name == "metric") return SearchObjective::kMetric;
  throw InvalidInput("unknown search objective '" + std::string(name) + "'");
}

SearchStrategy parse_strategy(std::string_view name) {
  if (name == "exhaustive") return SearchStrategy::kExhaustive;
  if (name == "local") return SearchStrategy::kLocal;
  if (name == "anneal") return SearchStrategy::kAnneal;
  throw InvalidInput("unknown search strategy '" + std::string(name) + "'");
}

Rational search_objective_value(const DeckComposition& comp, SearchObjective objective, const DealingMethod& method) {
  if (objective == SearchObjective::kMetric) return conjecture_metric(method);
  return leading_coefficient_ordered(comp, method).coefficient;
}

namespace {

class Incumbent {
 public:
  Incumbent(DealingMethod method, Rational score) : best_(std::move(method)), score_(std::move(score)) {
    co_optimal_.insert(best_.canonical_labels());
  }

  void offer(const DealingMethod& method, const Rational& score) {
    if (score < score_) {
      best_ = method;
      score_ = score;
      co_optimal_.clear();
      co_optimal_.insert(method.canonical_labels());
    } else if (score == score_) {
      if (method < best_) best_ = method;
      if (co_optimal_.size() < kMaxCoOptimal) co_optimal_.insert(method.canonical_labels());
    }
  }

  SearchResult result(std::uint64_t evaluations) const {
    return {best_, score_, evaluations, std::vector<DealingMethod>(co_optimal_.begin(), co_optimal_.end())};
  }

  const Rational& score() const { return score_; }

 private:
  DealingMethod best_;
  Rational score_;
  std::set<DealingMethod> co_optimal_;
};

SearchResult exhaustive_search(const SearchRequest& request) {
  const auto& comp = request.composition;
  if (comp.deck_size() > request.exhaustive_cap) {
    throw ScaleExceeded("exhaustive search is limited to " + std::to_string(request.exhaustive_cap) +
                        " positions; deck has " + std::to_string(comp.deck_size()));
  }
  const int players = comp.players();
  const int s = comp.hand_size();
  const int n = comp.deck_size();
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::vector<int> left(static_cast<std::size_t>(players), s);
  std::optional<Incumbent> incumbent;
  std::uint64_t evaluations = 0;
  // Sequences with players labelled in order of first appearance, generated lexicographically.
  auto fill = [&](auto&& self, int t, int used) -> void {
    if (t == n) {
      DealingMethod method(players, seq);
      const Rational score = search_objective_value(comp, request.objective, method);
      ++evaluations;
      if (!incumbent) {
        incumbent.emplace(std::move(method), score);
      } else {
        incumbent->offer(method, score);
      }
      return;
    }
    for (int p = 0; p < std::min(players, used + 1); ++p) {
      if (left[static_cast<std::size_t>(p)] == 0) continue;
      --left[static_cast<std::size_t>(p)];
      seq[static_cast<std::size_t>(t)] = p;
      self(self, t + 1, std::max(used, p + 1));
      ++left[static_cast<std::size_t>(p)];
    }
  };
  fill(fill, 0, 0);
  return incumbent->result(evaluations);
}

// Swap of two positions dealt to different players.
std::pair<int, int> propose_swap(const DealingMethod& method, SplitMix64& rng) {
  const auto n = static_cast<std::uint64_t>(method.size());
  while (true) {
    const int u = static_cast<int>(rng.below(n));
    const int v = static_cast<int>(rng.below(n));
    if (method.player_at(u) != method.player_at(v)) return {std::min(u, v), std::max(u, v)};
  }
}

SearchResult stochastic_search(const SearchRequest& request) {
  const auto& comp = request.composition;
  DealingMethod current = DealingMethod::back_and_forth(comp.players(), comp.hand_size());
  Rational current_score = search_objective_value(comp, request.objective, current);
  Incumbent incumbent(current, current_score);
  SplitMix64 rng = SplitMix64::stream(request.seed, 0);
  const bool anneal = request.strategy == SearchStrategy::kAnneal;
  const double start_temperature = std::max(1e-12, 0.05 * current_score.to_double());
  for (std::uint64_t step = 0; step < request.budget; ++step) {
    const auto [u, v] = propose_swap(current, rng);
    DealingMethod candidate = current.with_swapped_positions(u, v);
    const Rational score = search_objective_value(comp, request.objective, candidate);
    bool accept = score <= current_score;
    if (!accept && anneal) {
      const double progress = static_cast<double>(step) / static_cast<double>(request.budget);
      const double temperature = start_temperature * (1.0 - progress) + 1e-15;
      const double delta = (score - current_score).to_double();
      const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      accept = u01 < std::exp(-delta / temperature);
    }
    incumbent.offer(candidate, score);
    if (accept) {
      current = std::move(candidate);
      current_score = score;
    }
  }
  return incumbent.result(request.budget);
}

}  // namespace

SearchResult search_dealing(const SearchRequest& request) {
  if (request.strategy == SearchStrategy::kExhaustive) return exhaustive_search(request);
  return stochastic_search(request);
}

}  // namespace dealmix
