#include "run_config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <sstream>

namespace dealmix::cli {
namespace {

struct Spec {
  const char* name;
  const char* help;
  std::vector<std::string> options;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = {
      {"coeff",
       "exact 1/a coefficient of the hand variation distance",
       {"comp", "deck", "players", "hand", "method", "per-hand", "threads", "out", "format"}},
      {"compare",
       "coefficients of several dealing methods on one deck",
       {"comp", "deck", "players", "hand", "methods", "threads", "out", "format"}},
      {"grid3", "three-colour grid of coefficients, four players", {"cards", "method", "threads", "out", "format"}},
      {"sweep2",
       "two-colour sweep over the number of black cards, four players",
       {"cards", "methods", "threads", "out", "format"}},
      {"oracle",
       "exact variation distance by enumeration, small decks",
       {"comp", "deck", "players", "hand", "method", "a", "oracle-cap", "out", "format"}},
      {"simulate",
       "Monte Carlo hand frequencies after an a-shuffle",
       {"comp", "deck", "players", "hand", "method", "a", "samples", "seed", "oracle-cap", "threads", "out", "format"}},
      {"search",
       "search for a dealing sequence with a low objective",
       {"comp", "players", "hand", "objective", "strategy", "budget", "seed", "search-cap", "out", "format"}},
  };
  return table;
}

const Spec& spec_for(const std::string& name) {
  for (const auto& s : specs()) {
    if (name == s.name) return s;
  }
  throw UsageError{2, "unknown subcommand '" + name + "'"};
}

bool reads(const Spec& spec, const std::string& option) {
  return std::find(spec.options.begin(), spec.options.end(), option) != spec.options.end();
}

const std::map<std::string, OutputFormat> kFormats = {{"csv", OutputFormat::kCsv}, {"json", OutputFormat::kJson}};

void add_options(CLI::App& sub, const Spec& spec, RunConfig& c) {
  auto has = [&](const char* o) { return reads(spec, o); };
  if (has("comp")) sub.add_option("--comp", c.composition, "colour counts, e.g. 26,26 (ordered deck)");
  if (has("deck")) sub.add_option("--deck", c.deck, "explicit deck, letters BRG... or 1-based indices");
  if (has("players"))
    sub.add_option("--players", c.players, "number of players (default 4, or from the sequence)")
        ->check(CLI::Range(2, 64));
  if (has("hand"))
    sub.add_option("--hand", c.hand, "cards per player (default deck size / players)")->check(CLI::Range(1, 100000));
  if (has("method")) sub.add_option("--method", c.method, "ordered|cyclic|backforth|conjectured|seq:<symbols>");
  if (has("methods")) sub.add_option("--methods", c.methods, "comma-separated method specs")->delimiter(',');
  if (has("cards")) sub.add_option("--cards", c.cards, "deck size, a multiple of 4")->check(CLI::Range(4, 100000));
  if (has("a"))
    sub.add_option("--a", c.a, "number of packets (comma-separated list for oracle)")
        ->delimiter(',')
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  if (has("samples"))
    sub.add_option("--samples", c.samples, "number of simulated shuffles")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  if (has("seed")) sub.add_option("--seed", c.seed, "random seed");
  if (has("oracle-cap"))
    sub.add_option("--oracle-cap", c.oracle_cap, "largest deck the exact oracle accepts")->check(CLI::Range(1, 12));
  if (has("objective"))
    sub.add_option("--objective", c.objective, "metric|coefficient")->check(CLI::IsMember({"metric", "coefficient"}));
  if (has("strategy"))
    sub.add_option("--strategy", c.strategy, "local|anneal|exhaustive")
        ->check(CLI::IsMember({"local", "anneal", "exhaustive"}));
  if (has("budget")) sub.add_option("--budget", c.budget, "objective evaluations for local/anneal");
  if (has("search-cap"))
    sub.add_option("--search-cap", c.search_cap, "largest deck for exhaustive search")->check(CLI::Range(1, 64));
  if (has("per-hand")) sub.add_option("--per-hand", c.per_hand, "also write per-hand inner terms to this CSV");
  if (has("threads"))
    sub.add_option("--threads", c.threads, "worker threads (default $DEALMIX_THREADS or 1)")
        ->check(CLI::Range(0u, 1024u));
  if (has("out")) sub.add_option("--out", c.out, "write the table here instead of stdout");
  if (has("format")) {
    sub.add_option("--format", c.format, "output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->option_text("csv|json");
  }
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string quoted(const std::string& value) {
  if (!value.empty() && value.find_first_of(" \t\"'\\") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

RunConfig run_parser(const std::function<void(CLI::App&)>& parse) {
  RunConfig config;
  CLI::App app{"dealmix: first-order mixing of riffle shuffles for hands dealt from repeated cards", "dealmix"};
  app.require_subcommand(1, 1);
  for (const auto& spec : specs()) add_options(*app.add_subcommand(spec.name, spec.help), spec, config);
  try {
    parse(app);
  } catch (const CLI::CallForHelp&) {
    throw UsageError{0, app.help(), true};
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError{0, app.help("", CLI::AppFormatMode::All), true};
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (!app.get_subcommands().empty()) message += "\n" + app.get_subcommands().front()->help();
    throw UsageError{2, message};
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (config.methods.empty()) {
    config.methods = config.subcommand == "sweep2" ? std::vector<std::string>{"backforth", "conjectured"}
                                                   : std::vector<std::string>{"ordered", "cyclic", "backforth"};
  }
  return config;
}

}  // namespace

std::vector<std::string> subcommands() {
  std::vector<std::string> out;
  for (const auto& s : specs()) out.emplace_back(s.name);
  return out;
}

std::string to_string(const RunConfig& c) {
  const Spec& spec = spec_for(c.subcommand);
  std::ostringstream os;
  os << c.subcommand;
  auto emit = [&](const char* option, const std::string& value) {
    if (reads(spec, option)) os << " --" << option << ' ' << quoted(value);
  };
  if (!c.composition.empty()) emit("comp", c.composition);
  if (!c.deck.empty()) emit("deck", c.deck);
  if (c.players) emit("players", std::to_string(c.players));
  if (c.hand) emit("hand", std::to_string(c.hand));
  emit("method", c.method);
  emit("methods", join(c.methods));
  emit("cards", std::to_string(c.cards));
  emit("a", join(c.a));
  emit("samples", std::to_string(c.samples));
  emit("seed", std::to_string(c.seed));
  emit("oracle-cap", std::to_string(c.oracle_cap));
  emit("objective", c.objective);
  emit("strategy", c.strategy);
  emit("budget", std::to_string(c.budget));
  emit("search-cap", std::to_string(c.search_cap));
  if (!c.per_hand.empty()) emit("per-hand", c.per_hand);
  emit("threads", std::to_string(c.threads));
  if (!c.out.empty()) emit("out", c.out);
  emit("format", c.format == OutputFormat::kJson ? "json" : "csv");
  return os.str();
}

RunConfig parse_run_config(const std::vector<std::string>& args) {
  return run_parser([&](CLI::App& app) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  });
}

RunConfig parse_run_config(const std::string& command_line) {
  return run_parser([&](CLI::App& app) { app.parse(command_line, false); });
}

}  // namespace dealmix::cli
