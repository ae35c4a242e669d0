#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include "dealmix/coefficient.hpp"
#include "dealmix/dealing_lab.hpp"
#include "dealmix/error.hpp"
#include "dealmix/parallel.hpp"
#include "dealmix/sampling.hpp"
#include "dealmix/shuffle_exact.hpp"
#include "table.hpp"

namespace dealmix::cli {
namespace {

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> counts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InvalidInput("bad composition '" + text + "': expected comma-separated counts");
    }
    counts.push_back(value);
    start = end + 1;
  }
  return counts;
}

bool is_named(std::string_view spec) {
  for (const auto& name : MethodCatalog::names()) {
    if (spec == name) return true;
  }
  return false;
}

// Players implied by a literal sequence, or 0 for named methods.
int players_in_sequence(std::string_view spec) {
  if (is_named(spec)) return 0;
  if (spec.starts_with("seq:")) spec.remove_prefix(4);
  if (spec.empty()) return 0;
  if (spec.find_first_not_of("NESWnesw") == std::string_view::npos) return 4;
  int top = 0;
  for (char ch : spec) {
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (up >= '1' && up <= '9')
      top = std::max(top, up - '0');
    else if (up >= 'A' && up <= 'Z')
      top = std::max(top, 10 + (up - 'A'));
  }
  return top;
}

int resolve_players(const RunConfig& c, const std::vector<std::string>& method_specs) {
  if (c.players) return c.players;
  for (const auto& spec : method_specs) {
    if (const int p = players_in_sequence(spec); p >= 2) return p;
  }
  return 4;
}

Deck resolve_deck(const RunConfig& c, int players) {
  if (!c.deck.empty() && !c.composition.empty()) throw InvalidInput("give either --comp or --deck, not both");
  if (c.deck.empty() && c.composition.empty()) throw InvalidInput("a deck is required: --comp or --deck");
  if (!c.deck.empty()) {
    Deck deck = Deck::parse(c.deck, players);
    if (c.hand && c.hand != deck.composition().hand_size()) {
      throw InvalidInput("deck has " + std::to_string(deck.size()) + " cards, not " + std::to_string(players) + " x " +
                         std::to_string(c.hand));
    }
    return deck;
  }
  const auto counts = parse_counts(c.composition);
  int total = 0;
  for (int v : counts) total += v;
  int hand = c.hand;
  if (!hand) {
    if (total % players != 0) {
      throw InvalidInput("composition " + c.composition + " has " + std::to_string(total) + " cards, which " +
                         std::to_string(players) + " players cannot share equally");
    }
    hand = total / players;
  }
  return Deck::ordered(DeckComposition(counts, players, hand));
}

unsigned resolve_threads(const RunConfig& c) { return c.threads ? c.threads : threads_from_env(1); }

std::string f17(const Rational& r) { return r.float_str(); }

Table coeff(const RunConfig& c) {
  const int players = resolve_players(c, {c.method});
  const Deck deck = resolve_deck(c, players);
  const auto& comp = deck.composition();
  const DealingMethod method = MethodCatalog::make(c.method, players, comp.hand_size());
  const EngineOptions options{!c.per_hand.empty(), resolve_threads(c)};
  const bool ordered = deck == Deck::ordered(comp);
  const auto report = ordered ? leading_coefficient_ordered(comp, method, options)
                              : leading_coefficient_arbitrary(deck, method, options);
  Table t;
  for (const char* name : {"composition", "players", "hand", "initial", "method", "sequence"}) t.column(name, false);
  t.column("hands", true);
  t.column("coefficient", false);
  t.column("coefficient_float", true);
  t.column("signed_total", false);
  t.rows.push_back({comp.str(), std::to_string(players), std::to_string(comp.hand_size()),
                    ordered ? "ordered" : deck.str(), c.method, method.str(), std::to_string(report.hands),
                    report.coefficient.str(), f17(report.coefficient), report.signed_total.str()});
  if (!c.per_hand.empty()) {
    Table hands;
    hands.column("hand", false);
    hands.column("inner", false);
    hands.column("inner_float", true);
    for (const auto& term : *report.per_hand)
      hands.rows.push_back({term.profile.str(), term.inner.str(), f17(term.inner)});
    hands.notes.emplace_back("prefactor", variation_prefactor(comp).str());
    std::ofstream file(c.per_hand);
    if (!file) throw InvalidInput("cannot write " + c.per_hand);
    write_table(file, hands, OutputFormat::kCsv, to_string(c));
  }
  return t;
}

Table compare(const RunConfig& c) {
  const int players = resolve_players(c, c.methods);
  const Deck deck = resolve_deck(c, players);
  const auto& comp = deck.composition();
  const bool ordered = deck == Deck::ordered(comp);
  const EngineOptions options{false, resolve_threads(c)};
  Table t;
  for (const char* name : {"method", "sequence", "coefficient", "coefficient_float", "ratio_previous_over_this",
                           "ratio_previous_over_this_float"}) {
    t.column(name, std::string_view(name).ends_with("_float"));
  }
  std::optional<Rational> previous;
  for (const auto& spec : c.methods) {
    const DealingMethod method = MethodCatalog::make(spec, players, comp.hand_size());
    const Rational coefficient = ordered ? leading_coefficient_ordered(comp, method, options).coefficient
                                         : leading_coefficient_arbitrary(deck, method, options).coefficient;
    std::string ratio;
    std::string ratio_float;
    if (previous) {
      if (coefficient.is_zero()) {
        ratio_float = previous->is_zero() ? "nan" : "inf";
      } else {
        const Rational r = *previous / coefficient;
        ratio = r.str();
        ratio_float = f17(r);
      }
    }
    t.rows.push_back({spec, method.str(), coefficient.str(), f17(coefficient), ratio, ratio_float});
    previous = coefficient;
  }
  t.notes.emplace_back("composition", comp.str());
  t.notes.emplace_back("initial", ordered ? "ordered" : deck.str());
  return t;
}

Table grid3(const RunConfig& c) {
  if (c.cards % 4 != 0) throw InvalidInput("--cards must be a multiple of 4");
  const DealingMethod method = MethodCatalog::make(c.method, 4, c.cards / 4);
  Table t;
  t.column("b", true);
  t.column("r", true);
  t.column("num", false);
  t.column("den", false);
  t.column("float", true);
  for (const auto& cell : grid_three_types(c.cards, method, resolve_threads(c))) {
    t.rows.push_back({std::to_string(cell.black), std::to_string(cell.red), cell.coefficient.numerator().get_str(),
                      cell.coefficient.denominator().get_str(), f17(cell.coefficient)});
  }
  t.notes.emplace_back("sequence", method.str());
  return t;
}

Table sweep2(const RunConfig& c) {
  if (c.cards % 4 != 0) throw InvalidInput("--cards must be a multiple of 4");
  std::vector<DealingMethod> methods;
  for (const auto& spec : c.methods) methods.push_back(MethodCatalog::make(spec, 4, c.cards / 4));
  Table t;
  t.column("b", true);
  for (const auto& spec : c.methods) {
    t.column(spec, false);
    t.column(spec + "_float", true);
  }
  for (std::size_t m = 1; m < c.methods.size(); ++m) t.column(c.methods[m] + "_over_" + c.methods[0] + "_float", true);
  for (const auto& row : two_type_sweep(c.cards, methods, resolve_threads(c))) {
    std::vector<std::string> cells = {std::to_string(row.black)};
    for (const auto& v : row.coefficients) {
      cells.push_back(v.str());
      cells.push_back(f17(v));
    }
    for (std::size_t m = 1; m < row.coefficients.size(); ++m) {
      const Rational& base = row.coefficients[0];
      cells.push_back(base.is_zero() ? (row.coefficients[m].is_zero() ? "nan" : "inf")
                                     : f17(row.coefficients[m] / base));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table oracle(const RunConfig& c) {
  const int players = resolve_players(c, {c.method});
  const Deck deck = resolve_deck(c, players);
  const DealingMethod method = MethodCatalog::make(c.method, players, deck.composition().hand_size());
  const HandDistributionOracle exact(deck, method, OracleLimits{c.oracle_cap});
  const Rational coefficient = exact.first_order_coefficient();
  Table t;
  for (const char* name : {"a", "vd", "vd_float", "a_times_vd_float", "coefficient", "coefficient_float"}) {
    t.column(name, std::string_view(name) == "a" || std::string_view(name).ends_with("_float"));
  }
  for (const std::int64_t a : c.a) {
    const Rational vd = exact.variation_distance(a);
    t.rows.push_back(
        {std::to_string(a), vd.str(), f17(vd), f17(Rational(a) * vd), coefficient.str(), f17(coefficient)});
  }
  t.notes.emplace_back("deck", deck.str());
  t.notes.emplace_back("sequence", method.str());
  return t;
}

Table simulate(const RunConfig& c) {
  if (c.a.size() != 1) throw InvalidInput("simulate takes a single --a");
  const int players = resolve_players(c, {c.method});
  const Deck deck = resolve_deck(c, players);
  const DealingMethod method = MethodCatalog::make(c.method, players, deck.composition().hand_size());
  SimulationOptions options;
  options.samples = c.samples;
  options.seed = c.seed;
  options.threads = resolve_threads(c);
  options.limits = OracleLimits{c.oracle_cap};
  const auto a = static_cast<std::uint64_t>(c.a.front());
  const auto sim = simulate_hand_distribution(deck, method, a, options);
  std::optional<std::vector<Rational>> exact;
  if (sim.exact_distance) exact = HandDistributionOracle(deck, method, options.limits).hand_probabilities(c.a.front());
  Table t;
  t.column("hand", false);
  t.column("count", true);
  t.column("empirical_float", true);
  t.column("stationary", false);
  t.column("stationary_float", true);
  if (exact) {
    t.column("exact", false);
    t.column("exact_float", true);
  }
  const double n = static_cast<double>(sim.samples);
  for (std::size_t i = 0; i < sim.profiles.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(sim.frequencies[i]) / n);
    std::vector<std::string> row = {sim.profiles[i].str(), std::to_string(sim.frequencies[i]), buf,
                                    sim.stationary[i].str(), f17(sim.stationary[i])};
    if (exact) {
      row.push_back((*exact)[i].str());
      row.push_back(f17((*exact)[i]));
    }
    t.rows.push_back(std::move(row));
  }
  t.notes.emplace_back("seed", std::to_string(sim.seed));
  t.notes.emplace_back("samples", std::to_string(sim.samples));
  t.notes.emplace_back("empirical_distance", f17(sim.empirical_distance));
  if (sim.exact_distance) t.notes.emplace_back("exact_distance", sim.exact_distance->str());
  return t;
}

Table search(const RunConfig& c) {
  const int players = c.players ? c.players : 4;
  const Deck deck = resolve_deck(c, players);
  SearchRequest request{deck.composition()};
  request.objective = parse_objective(c.objective);
  request.strategy = parse_strategy(c.strategy);
  request.budget = c.budget;
  request.seed = c.seed;
  request.exhaustive_cap = c.search_cap;
  const auto result = search_dealing(request);
  Table t;
  for (const char* name : {"composition", "objective", "strategy", "seed", "evaluations", "sequence", "score",
                           "score_float", "co_optimal_found"}) {
    const std::string_view n(name);
    t.column(name, n == "seed" || n == "evaluations" || n == "score_float" || n == "co_optimal_found");
  }
  t.rows.push_back({deck.composition().str(), c.objective, c.strategy, std::to_string(c.seed),
                    std::to_string(result.evaluations), result.best.str(), result.score.str(), f17(result.score),
                    std::to_string(result.co_optimal.size())});
  return t;
}

}  // namespace

void run(const RunConfig& config, std::ostream& out) {
  static const std::map<std::string, std::function<Table(const RunConfig&)>> handlers = {
      {"coeff", coeff},   {"compare", compare},   {"grid3", grid3},   {"sweep2", sweep2},
      {"oracle", oracle}, {"simulate", simulate}, {"search", search},
  };
  const auto it = handlers.find(config.subcommand);
  if (it == handlers.end()) throw InvalidInput("unknown subcommand '" + config.subcommand + "'");
  const Table table = it->second(config);
  if (config.out.empty()) {
    write_table(out, table, config.format, to_string(config));
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw InvalidInput("cannot write " + config.out);
  write_table(file, table, config.format, to_string(config));
}

int run_and_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    run(config, out);
    return 0;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ScaleExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dealmix::cli
