#include "dealmix/deck.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "dealmix/dealing_method.hpp"
#include "dealmix/error.hpp"

namespace dealmix {
namespace {

constexpr std::string_view kColorLetters = "BRGACDEFHIJKLMNOPQSTUVWXYZ";

}  // namespace

DeckComposition::DeckComposition(std::vector<int> counts, int players, int hand_size)
    : counts_(std::move(counts)), players_(players), hand_size_(hand_size) {
  if (counts_.empty()) throw InvalidInput("composition needs at least one colour");
  if (players_ < 2) throw InvalidInput("composition needs at least two players");
  if (hand_size_ < 1) throw InvalidInput("hand size must be positive");
  for (int c : counts_) {
    if (c < 1) throw InvalidInput("colour counts must be positive; drop absent colours (" + str() + ")");
  }
  const long total = std::accumulate(counts_.begin(), counts_.end(), 0L);
  if (total != static_cast<long>(players_) * hand_size_) {
    throw InvalidInput("colour counts " + str() + " sum to " + std::to_string(total) + ", but " +
                       std::to_string(players_) + " players x " + std::to_string(hand_size_) +
                       " cards = " + std::to_string(players_ * hand_size_));
  }
}

BigInt DeckComposition::arrangements() const {
  BigInt out = factorial(static_cast<unsigned>(deck_size()));
  for (int c : counts_) out /= factorial(static_cast<unsigned>(c));
  return out;
}

std::string DeckComposition::str() const {
  std::string out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  return out;
}

char color_letter(int color) {
  if (color < 0 || color >= static_cast<int>(kColorLetters.size())) return '?';
  return kColorLetters[static_cast<std::size_t>(color)];
}

int color_from_letter(char letter) {
  const auto pos = kColorLetters.find(letter);
  return pos == std::string_view::npos ? -1 : static_cast<int>(pos);
}

namespace {

std::vector<int> tally(const std::vector<int>& cards, int colors) {
  std::vector<int> counts(static_cast<std::size_t>(colors), 0);
  for (int c : cards) {
    if (c < 0 || c >= colors) throw InvalidInput("card colour " + std::to_string(c) + " out of range");
    ++counts[static_cast<std::size_t>(c)];
  }
  return counts;
}

}  // namespace

Deck::Deck(DeckComposition composition, std::vector<int> cards)
    : composition_(std::move(composition)), cards_(std::move(cards)) {
  if (static_cast<int>(cards_.size()) != composition_.deck_size()) {
    throw InvalidInput("deck has " + std::to_string(cards_.size()) + " cards, composition needs " +
                       std::to_string(composition_.deck_size()));
  }
  if (tally(cards_, composition_.colors()) != composition_.counts()) {
    throw InvalidInput("deck colour tallies do not match composition " + composition_.str());
  }
}

Deck Deck::ordered(const DeckComposition& composition) {
  std::vector<int> cards;
  cards.reserve(static_cast<std::size_t>(composition.deck_size()));
  for (int c = 0; c < composition.colors(); ++c) cards.insert(cards.end(), composition.count(c), c);
  return Deck(composition, std::move(cards));
}

Deck Deck::parse(std::string_view text, int players) {
  std::vector<int> cards;
  if (text.find(',') != std::string_view::npos ||
      (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0])))) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
        throw InvalidInput("bad colour index '" + std::string(token) + "' in deck");
      }
      cards.push_back(value - 1);
      start = end + 1;
    }
  } else {
    for (char ch : text) {
      const int c = color_from_letter(ch);
      if (c < 0) throw InvalidInput(std::string("bad colour letter '") + ch + "' in deck");
      cards.push_back(c);
    }
  }
  if (cards.empty()) throw InvalidInput("empty deck");
  if (players < 1 || cards.size() % static_cast<std::size_t>(players) != 0) {
    throw InvalidInput("deck of " + std::to_string(cards.size()) + " cards cannot be dealt to " +
                       std::to_string(players) + " players");
  }
  const int colors = *std::max_element(cards.begin(), cards.end()) + 1;
  std::vector<int> counts = tally(cards, colors);
  const int hand = static_cast<int>(cards.size()) / players;
  return Deck(DeckComposition(std::move(counts), players, hand), std::move(cards));
}

std::string Deck::str() const {
  std::string out;
  if (composition_.colors() <= static_cast<int>(kColorLetters.size())) {
    for (int c : cards_) out += color_letter(c);
    return out;
  }
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cards_[i] + 1);
  }
  return out;
}

HandProfile::HandProfile(int colors, int players)
    : colors_(colors), players_(players), counts_(static_cast<std::size_t>(colors * players), 0) {}

HandProfile::HandProfile(int colors, int players, std::vector<int> flat_counts)
    : colors_(colors), players_(players), counts_(std::move(flat_counts)) {
  if (static_cast<int>(counts_.size()) != colors * players) {
    throw InvalidInput("hand profile needs " + std::to_string(colors * players) + " entries");
  }
}

int HandProfile::player_total(int player) const {
  int total = 0;
  for (int i = 0; i < colors_; ++i) total += count(i, player);
  return total;
}

int HandProfile::color_total(int color) const {
  int total = 0;
  for (int j = 0; j < players_; ++j) total += count(color, j);
  return total;
}

void HandProfile::validate(const DeckComposition& comp) const {
  if (colors_ != comp.colors() || players_ != comp.players()) {
    throw InvalidInput("hand profile shape does not match composition " + comp.str());
  }
  for (int c : counts_) {
    if (c < 0) throw InvalidInput("hand profile has a negative count");
  }
  for (int i = 0; i < colors_; ++i) {
    if (color_total(i) != comp.count(i)) throw InvalidInput("hand profile colour row does not match composition");
  }
  for (int j = 0; j < players_; ++j) {
    if (player_total(j) != comp.hand_size()) throw InvalidInput("hand profile player column is not a full hand");
  }
}

std::string HandProfile::str() const {
  std::ostringstream os;
  for (int i = 0; i < colors_; ++i) {
    if (i) os << '|';
    for (int j = 0; j < players_; ++j) {
      if (j) os << ' ';
      os << count(i, j);
    }
  }
  return os.str();
}

std::vector<std::vector<int>> leading_rows(const DeckComposition& comp) {
  std::vector<std::vector<int>> rows;
  if (comp.colors() == 1) return rows;
  DeckComposition head({comp.count(0), comp.deck_size() - comp.count(0)}, comp.players(), comp.hand_size());
  for_each_hand_profile(head, [&](const HandProfile& p) {
    std::vector<int> row(static_cast<std::size_t>(comp.players()));
    for (int j = 0; j < comp.players(); ++j) row[static_cast<std::size_t>(j)] = p.count(0, j);
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<HandProfile> enumerate_hand_profiles(const DeckComposition& comp) {
  std::vector<HandProfile> out;
  for_each_hand_profile(comp, [&](const HandProfile& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_hand_profiles(const DeckComposition& comp) {
  std::uint64_t n = 0;
  for_each_hand_profile(comp, [&](const HandProfile&) { ++n; });
  return n;
}

BigInt count_decks_for_profile(const DeckComposition& comp, const HandProfile& profile) {
  profile.validate(comp);
  BigInt out = power(factorial(static_cast<unsigned>(comp.hand_size())), static_cast<unsigned>(comp.players()));
  for (int c : profile.flat()) out /= factorial(static_cast<unsigned>(c));
  return out;
}

BigInt count_decks_for_profile(const DeckComposition& comp, const HandProfile& profile, const DealingMethod& method) {
  if (method.players() != comp.players() || method.hand_size() != comp.hand_size()) {
    throw InvalidInput("dealing method " + method.str() + " does not match composition " + comp.str());
  }
  return count_decks_for_profile(comp, profile);
}

Rational stationary_probability(const DeckComposition& comp, const HandProfile& profile) {
  return Rational(count_decks_for_profile(comp, profile), comp.arrangements());
}

HandProfile deal(std::span<const int> cards, int colors, const DealingMethod& method) {
  if (static_cast<int>(cards.size()) != method.size()) {
    throw InvalidInput("deck of " + std::to_string(cards.size()) + " cards cannot be dealt by a method of length " +
                       std::to_string(method.size()));
  }
  HandProfile profile(colors, method.players());
  for (std::size_t t = 0; t < cards.size(); ++t) ++profile.at(cards[t], method.player_at(static_cast<int>(t)));
  return profile;
}

HandProfile deal(const Deck& deck, const DealingMethod& method) {
  return deal(deck.cards(), deck.composition().colors(), method);
}

}  // namespace dealmix
