#include "spades/engine/card.h"

#include <stdexcept>

#include "spades/engine/seat.h"

namespace spades {
namespace {

constexpr std::string_view kRankChars = "23456789TJQKA";
constexpr std::string_view kSuitChars = "CDHS";
constexpr std::string_view kSeatChars = "NESW";

}  // namespace

char SuitChar(Suit suit) { return kSuitChars[static_cast<int>(suit)]; }
char RankChar(int rank) { return kRankChars[rank]; }

std::optional<Suit> SuitFromChar(char c) {
  auto pos = kSuitChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Suit>(pos);
}

std::optional<int> RankFromChar(char c) {
  auto pos = kRankChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<int>(pos);
}

Card Card::FromCode(std::string_view code) {
  if (code.size() != 2) throw std::invalid_argument("bad card code '" + std::string(code) + "'");
  auto r = RankFromChar(code[0]);
  auto s = SuitFromChar(code[1]);
  if (!r || !s) throw std::invalid_argument("bad card code '" + std::string(code) + "'");
  return Card(*s, *r);
}

std::string Card::ToCode() const { return std::string{RankChar(rank()), SuitChar(suit())}; }

CardSet CardSet::FromCodes(std::string_view codes) {
  CardSet set;
  std::size_t i = 0;
  while (i < codes.size()) {
    while (i < codes.size() && codes[i] == ' ') ++i;
    if (i >= codes.size()) break;
    std::size_t j = codes.find(' ', i);
    if (j == std::string_view::npos) j = codes.size();
    Card c = Card::FromCode(codes.substr(i, j - i));
    if (set.contains(c)) throw std::invalid_argument("duplicate card " + c.ToCode());
    set.insert(c);
    i = j;
  }
  return set;
}

std::vector<Card> CardSet::ToVector() const {
  std::vector<Card> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Card c : *this) out.push_back(c);
  return out;
}

std::string CardSet::ToString() const {
  std::string out;
  for (Card c : *this) {
    if (!out.empty()) out += ' ';
    out += c.ToCode();
  }
  return out;
}

char SeatChar(Seat s) { return kSeatChars[Index(s)]; }

std::optional<Seat> SeatFromChar(char c) {
  auto pos = kSeatChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return SeatAt(static_cast<int>(pos));
}

std::string_view PartnershipName(Partnership p) { return p == Partnership::kNorthSouth ? "NS" : "EW"; }

std::optional<Partnership> PartnershipFromName(std::string_view name) {
  if (name == "NS") return Partnership::kNorthSouth;
  if (name == "EW") return Partnership::kEastWest;
  return std::nullopt;
}

}  // namespace spades
