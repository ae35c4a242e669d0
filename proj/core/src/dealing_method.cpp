#include "dealmix/dealing_method.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "dealmix/error.hpp"

namespace dealmix {
namespace {

constexpr std::string_view kCompass = "NESW";
constexpr std::string_view kSymbols = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

}  // namespace

DealingMethod::DealingMethod(int players, std::vector<int> assignment)
    : players_(players), hand_size_(0), assignment_(std::move(assignment)) {
  if (players_ < 1) throw InvalidInput("dealing method needs at least one player");
  if (assignment_.empty() || assignment_.size() % static_cast<std::size_t>(players_) != 0) {
    throw InvalidInput("dealing sequence of length " + std::to_string(assignment_.size()) +
                       " cannot give equal hands to " + std::to_string(players_) + " players");
  }
  hand_size_ = static_cast<int>(assignment_.size()) / players_;
  positions_.assign(static_cast<std::size_t>(players_), {});
  for (std::size_t t = 0; t < assignment_.size(); ++t) {
    const int p = assignment_[t];
    if (p < 0 || p >= players_)
      throw InvalidInput("dealing sequence names player " + std::to_string(p + 1) + " of " + std::to_string(players_));
    positions_[static_cast<std::size_t>(p)].push_back(static_cast<int>(t) + 1);
  }
  for (int p = 0; p < players_; ++p) {
    if (static_cast<int>(positions_[static_cast<std::size_t>(p)].size()) != hand_size_) {
      throw InvalidInput("player " + std::to_string(p + 1) + " receives " +
                         std::to_string(positions_[static_cast<std::size_t>(p)].size()) + " cards, expected " +
                         std::to_string(hand_size_));
    }
  }
}

DealingMethod DealingMethod::ordered(int players, int hand_size) {
  std::vector<int> seq;
  for (int p = 0; p < players; ++p) seq.insert(seq.end(), static_cast<std::size_t>(hand_size), p);
  return DealingMethod(players, std::move(seq));
}

DealingMethod DealingMethod::cyclic(int players, int hand_size) {
  std::vector<int> seq;
  for (int round = 0; round < hand_size; ++round) {
    for (int p = 0; p < players; ++p) seq.push_back(p);
  }
  return DealingMethod(players, std::move(seq));
}

DealingMethod DealingMethod::back_and_forth(int players, int hand_size) {
  std::vector<int> seq;
  for (int round = 0; round < hand_size; ++round) {
    for (int p = 0; p < players; ++p) seq.push_back(round % 2 == 0 ? p : players - 1 - p);
  }
  return DealingMethod(players, std::move(seq));
}

DealingMethod DealingMethod::canonical(CanonicalDealing kind, int players, int hand_size) {
  switch (kind) {
    case CanonicalDealing::kOrdered:
      return ordered(players, hand_size);
    case CanonicalDealing::kCyclic:
      return cyclic(players, hand_size);
    case CanonicalDealing::kBackAndForth:
      return back_and_forth(players, hand_size);
  }
  throw InvalidInput("unknown canonical dealing method");
}

DealingMethod DealingMethod::parse(std::string_view text, int players) {
  std::vector<int> seq;
  seq.reserve(text.size());
  for (char ch : text) {
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    int player = -1;
    if (players == 4 && kCompass.find(up) != std::string_view::npos) {
      player = static_cast<int>(kCompass.find(up));
    } else if (const auto pos = kSymbols.find(up); pos != std::string_view::npos) {
      player = static_cast<int>(pos);
    }
    if (player < 0 || player >= players) {
      throw InvalidInput(std::string("bad player symbol '") + ch + "' for " + std::to_string(players) + " players");
    }
    seq.push_back(player);
  }
  return DealingMethod(players, std::move(seq));
}

DealingMethod DealingMethod::canonical_labels() const {
  std::vector<int> relabel(static_cast<std::size_t>(players_), -1);
  int next = 0;
  std::vector<int> seq(assignment_.size());
  for (std::size_t t = 0; t < assignment_.size(); ++t) {
    int& label = relabel[static_cast<std::size_t>(assignment_[t])];
    if (label < 0) label = next++;
    seq[t] = label;
  }
  return DealingMethod(players_, std::move(seq));
}

DealingMethod DealingMethod::with_swapped_positions(int first, int second) const {
  std::vector<int> seq = assignment_;
  std::swap(seq.at(static_cast<std::size_t>(first)), seq.at(static_cast<std::size_t>(second)));
  return DealingMethod(players_, std::move(seq));
}

std::string DealingMethod::str() const {
  std::string out;
  out.reserve(assignment_.size());
  for (int p : assignment_) out += player_symbol(p, players_);
  return out;
}

char player_symbol(int player, int players) {
  if (players == 4) return kCompass[static_cast<std::size_t>(player)];
  return player < static_cast<int>(kSymbols.size()) ? kSymbols[static_cast<std::size_t>(player)] : '?';
}

std::string_view canonical_name(CanonicalDealing kind) {
  switch (kind) {
    case CanonicalDealing::kOrdered:
      return "ordered";
    case CanonicalDealing::kCyclic:
      return "cyclic";
    case CanonicalDealing::kBackAndForth:
      return "backforth";
  }
  return "?";
}

CanonicalDealing parse_canonical(std::string_view name) {
  if (name == "ordered") return CanonicalDealing::kOrdered;
  if (name == "cyclic") return CanonicalDealing::kCyclic;
  if (name == "backforth") return CanonicalDealing::kBackAndForth;
  throw InvalidInput("unknown dealing kind '" + std::string(name) + "'");
}

}  // namespace dealmix
