// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any fails.
// Usage: dealmix_acceptance [csv-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "dealmix/coefficient.hpp"
#include "dealmix/dealing_lab.hpp"
#include "dealmix/pair_stats.hpp"
#include "dealmix/sampling.hpp"
#include "dealmix/shuffle_exact.hpp"

using namespace dealmix;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Compositions whose normalisations criterion 10 re-checks.
std::vector<DeckComposition> g_exercised;
bool g_signed_totals_zero = true;

void note(const DeckComposition& comp, const CoefficientReport& report) {
  g_exercised.push_back(comp);
  if (!report.signed_total.is_zero()) g_signed_totals_zero = false;
}

std::vector<DealingMethod> canonical(int players, int s) {
  return {DealingMethod::ordered(players, s), DealingMethod::cyclic(players, s),
          DealingMethod::back_and_forth(players, s)};
}

Outcome c1_position_sums() {
  const std::vector<std::vector<std::int64_t>> want = {{91, 260, 429, 598}, {325, 338, 351, 364}, {343, 344, 345, 346}};
  const auto methods = canonical(4, 13);
  Outcome out;
  for (std::size_t m = 0; m < 3; ++m) {
    std::string got;
    for (int p = 0; p < 4; ++p) {
      const auto v = position_sum(methods[m], p);
      if (v != want[m][static_cast<std::size_t>(p)]) out.ok = false;
      got += (p ? "," : "") + std::to_string(v);
    }
    out.detail += (m ? " " : "") + std::string(canonical_name(static_cast<CanonicalDealing>(m))) + "=(" + got + ")";
  }
  return out;
}

Outcome c2_grid_anchor() {
  const DeckComposition comp({1, 1, 50}, 4, 13);
  const auto bf = leading_coefficient_ordered(comp, DealingMethod::back_and_forth(4, 13));
  const auto conj = leading_coefficient_ordered(comp, conjectured_method());
  note(comp, bf);
  note(comp, conj);
  Outcome out;
  out.ok = bf.coefficient == Rational(56, 1275) && conj.coefficient == Rational(76, 1275);
  out.detail = "backforth=" + bf.coefficient.str() + " conjectured=" + conj.coefficient.str();
  return out;
}

// Every ordered count vector of k positive parts summing to n.
void compositions(int n, int k, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& visit) {
  if (k == 1) {
    prefix.push_back(n);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    prefix.push_back(first);
    compositions(n - first, k - 1, prefix, visit);
    prefix.pop_back();
  }
}

Outcome c3_s_factor() {
  Outcome out;
  int cases = 0;
  int failures = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int players = 2; players <= 4; ++players) {
      for (int s = 2; s <= 5; ++s) {
        std::vector<int> prefix;
        compositions(players * s, k, prefix, [&](const std::vector<int>& counts) {
          const DeckComposition comp(counts, players, s);
          const auto ord = leading_coefficient_ordered(comp, DealingMethod::ordered(players, s));
          const auto cyc = leading_coefficient_ordered(comp, DealingMethod::cyclic(players, s));
          const auto bf = leading_coefficient_ordered(comp, DealingMethod::back_and_forth(players, s));
          note(comp, ord);
          note(comp, cyc);
          note(comp, bf);
          bool good = ord.coefficient == Rational(s) * cyc.coefficient;
          good = good && (s % 2 == 1 ? cyc.coefficient == Rational(s) * bf.coefficient : bf.coefficient.is_zero());
          ++cases;
          if (!good) {
            ++failures;
            if (out.detail.empty()) out.detail = "first failure " + comp.str() + "; ";
          }
        });
      }
    }
  }
  out.ok = failures == 0 && cases >= 50;
  out.detail += std::to_string(cases) + " compositions, " + std::to_string(failures) + " failures";
  return out;
}

Outcome c4_oracle() {
  const std::vector<const char*> decks = {
      "BR",       "BBRR",     "BRRB",     "RBRB",     "BBBRRR",   "BRBRBR",   "BBRRRR", "RBBBRR",
      "BBBBRRRR", "BRRBBRRB", "BBBRRRRR", "RRBRBBRB", "BRG",      "BRGB",     "BBRRGG", "BRGBRG",
      "GRBBRG",   "BBRGGG",   "BBBRRGGG", "BRGBRGBR", "GGRBBRRB", "BBRRGGGG",
  };
  Outcome out;
  int checks = 0;
  int failures = 0;
  for (const char* text : decks) {
    const int n = static_cast<int>(std::string(text).size());
    for (int players = 2; players <= 4; ++players) {
      if (n % players != 0 || n == players) continue;
      const Deck deck = Deck::parse(text, players);
      const auto& comp = deck.composition();
      const bool ordered = deck == Deck::ordered(comp);
      for (const auto& method : canonical(players, n / players)) {
        const Rational brute =
            testing::first_order_by_all_permutations(deck.cards(), comp.colors(), players, method.assignment());
        const auto engine =
            ordered ? leading_coefficient_ordered(comp, method) : leading_coefficient_arbitrary(deck, method);
        note(comp, engine);
        ++checks;
        if (engine.coefficient != brute) {
          ++failures;
          if (out.detail.empty()) out.detail = std::string("first failure ") + text + " " + method.str() + "; ";
        }
      }
    }
  }
  out.ok = failures == 0 && decks.size() >= 20;
  out.detail += std::to_string(decks.size()) + " decks, " + std::to_string(checks) + " deck/method checks, " +
                std::to_string(failures) + " failures";
  return out;
}

Outcome c5_asymptotics() {
  const Deck deck = Deck::parse("BBRR", 2);
  const auto method = DealingMethod::ordered(2, 2);
  const auto report = leading_coefficient_ordered(deck.composition(), method);
  note(deck.composition(), report);
  const HandDistributionOracle oracle(deck, method);
  const Rational coeff = report.coefficient;
  std::vector<Rational> gaps;
  Rational last;
  for (int j = 1; j <= 12; ++j) {
    const std::int64_t a = std::int64_t{1} << j;
    last = Rational(a) * oracle.variation_distance(a);
    gaps.push_back((last - coeff).abs());
  }
  // smallest j from which the gap decreases strictly through j = 12
  int from = 12;
  while (from > 1 && gaps[static_cast<std::size_t>(from - 2)] > gaps[static_cast<std::size_t>(from - 1)]) --from;
  const double rel = ((last - coeff).abs() / coeff).to_double();
  Outcome out;
  out.ok = from <= 10 && rel <= 0.02;
  char buf[160];
  std::snprintf(buf, sizeof buf, "coeff=%s a*VD(4096)=%.9f rel.err=%.3g, gap decreasing for j>=%d", coeff.str().c_str(),
                last.to_double(), rel, from);
  out.detail = buf;
  return out;
}

Outcome c6_sweep(const std::filesystem::path& csv_dir) {
  const std::vector<DealingMethod> methods = {DealingMethod::back_and_forth(4, 13), conjectured_method()};
  const auto rows = two_type_sweep(52, methods);
  Outcome out;
  int violations = 0;
  const auto path = csv_dir / "two_type_sweep.csv";
  std::ofstream csv(path);
  csv << "black,backforth,conjectured,ratio_conjectured_over_backforth\n";
  for (const auto& row : rows) {
    const Rational& bf = row.coefficients[0];
    const Rational& conj = row.coefficients[1];
    if (conj > bf) ++violations;
    // the ratio column is undefined when both coefficients vanish
    const std::string ratio = bf.is_zero() ? "nan" : Rational(conj / bf).float_str();
    csv << row.black << ',' << bf.str() << ',' << conj.str() << ',' << ratio << '\n';
    const DeckComposition comp({row.black, 52 - row.black}, 4, 13);
    note(comp, leading_coefficient_ordered(comp, methods[0]));
  }
  out.ok = violations == 0 && rows.size() == 51 && csv.good();
  out.detail =
      std::to_string(rows.size()) + " values of b, " + std::to_string(violations) + " violations, csv " + path.string();
  return out;
}

Outcome c7_positional() {
  Outcome out;
  std::uint64_t decks = 0;
  int failures = 0;
  for (int colours = 2; colours <= 3; ++colours) {
    for (int n = 1; n <= 8; ++n) {
      std::vector<int> cards(static_cast<std::size_t>(n), 0);
      while (true) {
        ++decks;
        for (int x = 0; x < colours; ++x) {
          for (int y = 0; y < colours; ++y) {
            if (x != y && z_positional(cards, x, y) != z_statistic(cards, x, y)) ++failures;
          }
        }
        int t = 0;
        while (t < n && ++cards[static_cast<std::size_t>(t)] == colours) cards[static_cast<std::size_t>(t++)] = 0;
        if (t == n) break;
      }
    }
  }
  std::mt19937_64 gen(20260101);
  std::vector<int> cards(52);
  for (int trial = 0; trial < 10000; ++trial) {
    const int colours = 2 + trial % 2;
    std::uniform_int_distribution<int> colour(0, colours - 1);
    for (int& c : cards) c = colour(gen);
    for (int x = 0; x < colours; ++x) {
      for (int y = 0; y < colours; ++y) {
        if (x != y && z_positional(cards, x, y) != z_statistic(cards, x, y)) ++failures;
      }
    }
  }
  out.ok = failures == 0;
  out.detail = std::to_string(decks) + " exhaustive decks + 10000 random 52-card decks, " + std::to_string(failures) +
               " mismatches";
  return out;
}

Outcome c8_composition() {
  Outcome out;
  int failures = 0;
  int checks = 0;
  const std::pair<std::int64_t, std::int64_t> pairs[] = {{2, 2}, {2, 3}, {3, 4}};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [a, b] : pairs) {
      const auto first = shuffle_distribution(n, a);
      const auto second = shuffle_distribution(n, b);
      const auto composed = convolve(n, first, second);
      const auto direct = shuffle_distribution(n, a * b);
      ++checks;
      if (composed != direct) ++failures;
    }
  }
  out.ok = failures == 0;
  out.detail =
      std::to_string(checks) + " (n, a, b) cases, per-permutation exact, " + std::to_string(failures) + " failures";
  return out;
}

Outcome c9_sampler() {
  constexpr int n = 6;
  constexpr std::uint64_t a = 4;
  constexpr std::uint64_t samples = 1000000;
  const auto counts = sample_permutation_counts(n, a, samples, 12345);
  std::size_t within = 0;
  std::size_t zero_hits = 0;
  for (std::uint64_t r = 0; r < counts.size(); ++r) {
    const double p = bayer_diaconis_prob(n, descents(Permutation::unrank(n, r)), a).to_double();
    const double freq = static_cast<double>(counts[r]) / static_cast<double>(samples);
    if (p == 0.0) {
      if (counts[r] == 0)
        ++within;
      else
        ++zero_hits;
      continue;
    }
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    if (std::abs(freq - p) <= 4.0 * se) ++within;
  }
  const double share = static_cast<double>(within) / static_cast<double>(counts.size());
  Outcome out;
  out.ok = share >= 0.99 && zero_hits == 0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu permutations within 4 SE (%.2f%%), seed 12345", within, counts.size(),
                100.0 * share);
  out.detail = buf;
  return out;
}

Outcome c10_normalisation() {
  std::size_t done = 0;
  bool pi_ok = true;
  std::vector<DeckComposition> seen;
  for (const auto& comp : g_exercised) {
    if (std::find(seen.begin(), seen.end(), comp) != seen.end()) continue;
    seen.push_back(comp);
    Rational total;
    for_each_hand_profile(comp, [&](const HandProfile& p) { total += stationary_probability(comp, p); });
    if (total != Rational(1)) pi_ok = false;
    ++done;
  }
  Outcome out;
  out.ok = pi_ok && g_signed_totals_zero && done > 0;
  out.detail = std::to_string(done) + " compositions: sum Pi " + (pi_ok ? "= 1" : "!= 1") + ", signed inner sums " +
               (g_signed_totals_zero ? "= 0" : "!= 0");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path csv_dir = argc > 1 ? argv[1] : ".";
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "position sums", 0.001, c1_position_sums},
      {2, "grid (1,1) rationals", 1.0, c2_grid_anchor},
      {3, "s-factor scaling", 60.0, c3_s_factor},
      {4, "oracle equivalence", 300.0, c4_oracle},
      {5, "asymptotic consistency", 60.0, c5_asymptotics},
      {6, "two-type dominance sweep", 30.0, [&] { return c6_sweep(csv_dir); }},
      {7, "positional Z equivalence", 60.0, c7_positional},
      {8, "shuffle composition law", 60.0, c8_composition},
      {9, "sampler validation", 60.0, c9_sampler},
      {10, "normalisations", 60.0, c10_normalisation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failed;
    std::printf("C%-2d %s  %-26s %9.3fs (budget %gs%s)  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, seconds,
                c.budget_seconds, in_time ? "" : ", exceeded", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
