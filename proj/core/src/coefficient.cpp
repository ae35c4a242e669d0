#include "dealmix/coefficient.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <type_traits>

#include "dealmix/error.hpp"
#include "dealmix/pair_stats.hpp"
#include "dealmix/parallel.hpp"

namespace dealmix {
namespace {

using Wide = __int128;

struct Overflow {};

std::size_t bit_length(const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

BigInt to_big(Wide value) {
  const bool negative = value < 0;
  // magnitude of INT128_MIN never occurs: every accumulated value is checked
  const unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-value) : static_cast<unsigned __int128>(value);
  BigInt out(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  out <<= 64;
  out += BigInt(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  return negative ? BigInt(-out) : out;
}

Wide to_wide(const BigInt& value) {
  if (bit_length(value) > 120) throw Overflow{};
  const bool negative = sgn(value) < 0;
  BigInt mag = abs(value);
  const BigInt low_mask = (BigInt(1) << 64) - 1;
  const BigInt low = mag & low_mask;
  const BigInt high = mag >> 64;
  const Wide out = (static_cast<Wide>(high.get_ui()) << 64) | static_cast<Wide>(low.get_ui());
  return negative ? -out : out;
}

struct Pair {
  int x;
  int y;
  std::int64_t w;  // W(D,x,y)
};

// Integer form of the per-hand sum, shared by every hand of one (composition, method, pairs):
//   inner(omega) = count(omega) * H(omega) / (s^2 L)
//   H(omega) = sum_pairs W * (L / (p_x p_y)) * G_xy(omega)
//   G_xy(omega) = sum_i x_i * ((l s + 1) s^2 - 2 s S_i + sum_{j != i} o_j Z(j,i))
// with L the lcm of the p_x p_y over contributing pairs.
template <typename Int>
class HandKernel {
 public:
  HandKernel(const DeckComposition& comp, const DealingMethod& method, const std::vector<Pair>& pairs)
      : players_(comp.players()), colors_(comp.colors()), hand_(comp.hand_size()) {
    const std::int64_t s = hand_;
    const auto z = dealing_z_matrix(method);
    zm_.resize(static_cast<std::size_t>(players_ * players_));
    for (int j = 0; j < players_; ++j) {
      for (int i = 0; i < players_; ++i) zm_[static_cast<std::size_t>(j * players_ + i)] = Int(z[j][i]);
    }
    for (int i = 0; i < players_; ++i) {
      base_.push_back(Int((static_cast<std::int64_t>(comp.deck_size()) + 1) * s * s - 2 * s * position_sum(method, i)));
    }
    BigInt lcm = 1;
    for (const auto& p : pairs) {
      if (p.w == 0) continue;
      lcm = big_lcm(lcm, BigInt(static_cast<long>(comp.count(p.x)) * comp.count(p.y)));
    }
    denominator_ = lcm * s * s;
    for (const auto& p : pairs) {
      if (p.w == 0) continue;
      const BigInt weight = lcm / (static_cast<long>(comp.count(p.x)) * comp.count(p.y)) * p.w;
      pairs_.push_back({p.x, p.y, convert(weight)});
    }
    binom_.resize(static_cast<std::size_t>((hand_ + 1) * (hand_ + 1)), Int(0));
    for (int m = 0; m <= hand_; ++m) {
      for (int c = 0; c <= m; ++c) binom_[static_cast<std::size_t>(m * (hand_ + 1) + c)] = convert(binomial(m, c));
    }
    others_.resize(static_cast<std::size_t>(players_));
  }

  const BigInt& denominator() const { return denominator_; }

  // count(omega) and H(omega)
  void evaluate(const HandProfile& profile, Int& count, Int& h) {
    count = Int(1);
    for (int j = 0; j < players_; ++j) {
      int rem = hand_;
      for (int c = 0; c < colors_; ++c) {
        const int k = profile.count(c, j);
        if (k != 0 && k != rem) count = mul(count, binom_[static_cast<std::size_t>(rem * (hand_ + 1) + k)]);
        rem -= k;
      }
    }
    h = Int(0);
    for (const auto& pair : pairs_) {
      for (int j = 0; j < players_; ++j) {
        others_[static_cast<std::size_t>(j)] = Int(hand_ - profile.count(pair.x, j) - profile.count(pair.y, j));
      }
      Int g(0);
      for (int i = 0; i < players_; ++i) {
        const int xi = profile.count(pair.x, i);
        if (xi == 0) continue;
        Int t = base_[static_cast<std::size_t>(i)];
        for (int j = 0; j < players_; ++j) {
          if (j != i) t += others_[static_cast<std::size_t>(j)] * zm_[static_cast<std::size_t>(j * players_ + i)];
        }
        g += Int(xi) * t;
      }
      h += pair.weight * g;
    }
  }

  static Int mul(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, Wide>) {
      return checked_mul(a, b);
    } else {
      return a * b;
    }
  }
  static Int add(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, Wide>) {
      return checked_add(a, b);
    } else {
      return a + b;
    }
  }
  static BigInt big(const Int& value) {
    if constexpr (std::is_same_v<Int, Wide>) {
      return to_big(value);
    } else {
      return value;
    }
  }

  // Conservative bound on |H| over all hands, for choosing the integer width.
  BigInt h_bound() const {
    BigInt row = 0;
    for (int i = 0; i < players_; ++i) {
      BigInt t = abs(big(base_[static_cast<std::size_t>(i)]));
      for (int j = 0; j < players_; ++j) t += BigInt(hand_) * abs(big(zm_[static_cast<std::size_t>(j * players_ + i)]));
      row += BigInt(hand_) * t;
    }
    BigInt bound = 0;
    for (const auto& p : pairs_) bound += abs(big(p.weight)) * row;
    return bound;
  }

 private:
  struct WeightedPair {
    int x;
    int y;
    Int weight;
  };

  static Int convert(const BigInt& v) {
    if constexpr (std::is_same_v<Int, Wide>) {
      return to_wide(v);
    } else {
      return v;
    }
  }

  int players_;
  int colors_;
  int hand_;
  std::vector<Int> zm_;
  std::vector<Int> base_;
  std::vector<WeightedPair> pairs_;
  std::vector<Int> binom_;
  std::vector<Int> others_;
  BigInt denominator_;
};

struct Totals {
  BigInt abs_sum = 0;
  BigInt signed_sum = 0;
  std::uint64_t hands = 0;
};

template <typename Int>
Totals accumulate_hands(const DeckComposition& comp, const DealingMethod& method, const std::vector<Pair>& pairs,
                        const EngineOptions& options, std::vector<HandTerm>* per_hand) {
  HandKernel<Int> prototype(comp, method, pairs);
  if constexpr (std::is_same_v<Int, Wide>) {
    if (bit_length(prototype.h_bound()) > 100) throw Overflow{};
  }
  const BigInt denominator = prototype.denominator();

  // Shards: one per admissible colour-0 row, processed in any order, combined in order.
  std::vector<std::vector<int>> shards = leading_rows(comp);
  const bool single = shards.empty();
  if (single) shards.emplace_back();
  struct ShardResult {
    BigInt abs_sum = 0;
    BigInt signed_sum = 0;
    std::uint64_t hands = 0;
    std::vector<HandTerm> terms;
  };
  std::vector<ShardResult> results(shards.size());

  parallel_for(shards.size(), options.threads, [&](std::size_t index, unsigned) {
    HandKernel<Int> kernel = prototype;
    Int abs_sum(0);
    Int signed_sum(0);
    Int count(0);
    Int h(0);
    ShardResult& out = results[index];
    auto visit = [&](const HandProfile& profile) {
      kernel.evaluate(profile, count, h);
      const Int term = HandKernel<Int>::mul(count, h);
      signed_sum = HandKernel<Int>::add(signed_sum, term);
      abs_sum = HandKernel<Int>::add(abs_sum, term < Int(0) ? Int(-term) : term);
      ++out.hands;
      if (per_hand) out.terms.push_back({profile, Rational(HandKernel<Int>::big(term), denominator)});
    };
    if (single) {
      for_each_hand_profile(comp, visit);
    } else {
      for_each_hand_profile_with_leading_row(comp, shards[index], visit);
    }
    out.abs_sum = HandKernel<Int>::big(abs_sum);
    out.signed_sum = HandKernel<Int>::big(signed_sum);
  });

  Totals totals;
  for (auto& r : results) {
    totals.abs_sum += r.abs_sum;
    totals.signed_sum += r.signed_sum;
    totals.hands += r.hands;
    if (per_hand) std::move(r.terms.begin(), r.terms.end(), std::back_inserter(*per_hand));
  }
  return totals;
}

void check_method(const DeckComposition& comp, const DealingMethod& method) {
  if (method.players() != comp.players() || method.hand_size() != comp.hand_size()) {
    throw InvalidInput("dealing method of " + std::to_string(method.players()) + " players x " +
                       std::to_string(method.hand_size()) + " cards does not match composition " + comp.str() +
                       " for " + std::to_string(comp.players()) + " players x " + std::to_string(comp.hand_size()));
  }
}

CoefficientReport run_engine(const DeckComposition& comp, const DealingMethod& method, const std::vector<Pair>& pairs,
                             const EngineOptions& options) {
  check_method(comp, method);
  CoefficientReport report{comp, method.str(), Rational(0), Rational(0), 0, std::nullopt};
  std::vector<HandTerm> terms;
  std::vector<HandTerm>* per_hand = options.keep_per_hand ? &terms : nullptr;

  const bool any_pair = std::any_of(pairs.begin(), pairs.end(), [](const Pair& p) { return p.w != 0; });
  BigInt denominator = BigInt(comp.hand_size()) * comp.hand_size();
  Totals totals;
  if (!any_pair) {
    // Single colour, or an initial deck with no adjacent colour change: every inner term is 0.
    for_each_hand_profile(comp, [&](const HandProfile& profile) {
      ++totals.hands;
      if (per_hand) per_hand->push_back({profile, Rational(0)});
    });
  } else {
    denominator = HandKernel<BigInt>(comp, method, pairs).denominator();
    try {
      totals = accumulate_hands<Wide>(comp, method, pairs, options, per_hand);
    } catch (const Overflow&) {
      terms.clear();
      totals = accumulate_hands<BigInt>(comp, method, pairs, options, per_hand);
    }
  }
  report.hands = totals.hands;
  report.signed_total = Rational(totals.signed_sum, denominator);
  report.coefficient = variation_prefactor(comp) * Rational(totals.abs_sum, denominator);
  if (per_hand) report.per_hand = std::move(terms);
  return report;
}

}  // namespace

Rational variation_prefactor(const DeckComposition& comp) {
  return Rational(BigInt(comp.deck_size()), 4 * comp.arrangements());
}

Rational sum_z_over_profile(const DeckComposition& comp, const HandProfile& profile, const DealingMethod& method, int x,
                            int y) {
  check_method(comp, method);
  profile.validate(comp);
  if (x == y) throw InvalidInput("sum_z_over_profile needs two different colours");
  if (x < 0 || y < 0 || x >= comp.colors() || y >= comp.colors()) throw InvalidInput("colour out of range");
  const std::int64_t s = comp.hand_size();
  const int players = comp.players();
  Rational total;
  for (int i = 0; i < players; ++i) {
    const int xi = profile.count(x, i);
    if (xi == 0) continue;
    Rational cross;
    for (int j = 0; j < players; ++j) {
      if (j == i) continue;
      cross += Rational(static_cast<std::int64_t>(profile.others(x, y, j)) * dealing_z(method, j, i));
    }
    total += Rational(xi) * (position_term(method, i) + cross / Rational(s * s));
  }
  return total * Rational(count_decks_for_profile(comp, profile));
}

CoefficientReport leading_coefficient_ordered(const DeckComposition& comp, const DealingMethod& method,
                                              const EngineOptions& options) {
  std::vector<Pair> pairs;
  for (int c = 0; c + 1 < comp.colors(); ++c) pairs.push_back({c, c + 1, 1});
  return run_engine(comp, method, pairs, options);
}

CoefficientReport leading_coefficient_arbitrary(const Deck& deck, const DealingMethod& method,
                                                const EngineOptions& options) {
  const auto& comp = deck.composition();
  std::vector<Pair> pairs;
  for (int a = 0; a < comp.colors(); ++a) {
    for (int b = a + 1; b < comp.colors(); ++b) pairs.push_back({a, b, w_statistic(deck, a, b)});
  }
  return run_engine(comp, method, pairs, options);
}

Rational two_type_closed_form(int black, int cards, const DealingMethod& method) {
  if (cards < 4 || cards % 4 != 0) throw InvalidInput("two-colour closed form needs a multiple of 4 cards");
  if (black < 1 || black > cards - 1) {
    throw InvalidInput("black count " + std::to_string(black) + " outside [1, " + std::to_string(cards - 1) + "]");
  }
  const int s = cards / 4;
  if (method.players() != 4 || method.hand_size() != s) throw InvalidInput("closed form needs a four-player method");
  std::int64_t sums[4];
  for (int j = 0; j < 4; ++j) sums[j] = position_sum(method, j);

  const DeckComposition comp({black, cards - black}, 4, s);
  BigInt total = 0;
  for_each_hand_profile(comp, [&](const HandProfile& p) {
    BigInt weight = 1;
    std::int64_t bracket = static_cast<std::int64_t>(cards + 1) * black * s;  // s * (n+1) b
    for (int j = 0; j < 4; ++j) {
      weight *= binomial(s, p.count(0, j));
      bracket -= 2 * p.count(0, j) * sums[j];
    }
    total += abs(weight * bracket);
  });
  // s / (b (n-b) C(n,b)) * total / s
  return Rational(total, BigInt(black) * (cards - black) * binomial(cards, black));
}

}  // namespace dealmix
