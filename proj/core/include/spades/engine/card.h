#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spades {

inline constexpr int kNumSuits = 4;
inline constexpr int kNumRanks = 13;
inline constexpr int kNumCards = 52;
inline constexpr int kHandSize = 13;

enum class Suit : std::uint8_t { kClubs = 0, kDiamonds = 1, kHearts = 2, kSpades = 3 };

inline constexpr std::array<Suit, kNumSuits> kAllSuits{Suit::kClubs, Suit::kDiamonds,
                                                       Suit::kHearts, Suit::kSpades};
inline constexpr std::array<Suit, 3> kSideSuits{Suit::kClubs, Suit::kDiamonds, Suit::kHearts};

// Ranks are 0-based: 0 is the deuce, 8 the ten, 12 the ace.
namespace rank {
inline constexpr int kTwo = 0;
inline constexpr int kFive = 3;
inline constexpr int kEight = 6;
inline constexpr int kNine = 7;
inline constexpr int kTen = 8;
inline constexpr int kJack = 9;
inline constexpr int kQueen = 10;
inline constexpr int kKing = 11;
inline constexpr int kAce = 12;
}  // namespace rank

char SuitChar(Suit suit);
char RankChar(int rank);
std::optional<Suit> SuitFromChar(char c);
std::optional<int> RankFromChar(char c);

class Card {
 public:
  constexpr Card() = default;
  constexpr Card(Suit suit, int rank)
      : index_(static_cast<std::uint8_t>(static_cast<int>(suit) * kNumRanks + rank)) {}

  static constexpr Card FromIndex(int index) {
    Card c;
    c.index_ = static_cast<std::uint8_t>(index);
    return c;
  }
  // Parses codes such as "QS" or "TD". Throws std::invalid_argument on junk.
  static Card FromCode(std::string_view code);

  constexpr int index() const { return index_; }
  constexpr Suit suit() const { return static_cast<Suit>(index_ / kNumRanks); }
  constexpr int rank() const { return index_ % kNumRanks; }
  constexpr bool is_spade() const { return suit() == Suit::kSpades; }

  std::string ToCode() const;

  friend constexpr bool operator==(Card, Card) = default;
  friend constexpr auto operator<=>(Card, Card) = default;

 private:
  std::uint8_t index_ = 0;
};

// A set of cards packed into the low 52 bits of a word; bit = suit * 13 + rank.
class CardSet {
 public:
  constexpr CardSet() = default;
  explicit constexpr CardSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr CardSet FullDeck() { return CardSet((std::uint64_t{1} << kNumCards) - 1); }
  static constexpr CardSet OfSuit(Suit suit) {
    return CardSet(std::uint64_t{0x1FFF} << (static_cast<int>(suit) * kNumRanks));
  }
  // Space separated card codes, e.g. "AS KS 2C".
  static CardSet FromCodes(std::string_view codes);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Card c) const { return (bits_ >> c.index()) & 1; }

  constexpr void insert(Card c) { bits_ |= std::uint64_t{1} << c.index(); }
  constexpr void erase(Card c) { bits_ &= ~(std::uint64_t{1} << c.index()); }

  constexpr CardSet InSuit(Suit suit) const { return CardSet(bits_ & OfSuit(suit).bits_); }
  constexpr int CountInSuit(Suit suit) const { return InSuit(suit).size(); }
  // Rank mask (13 bits) of the cards held in `suit`.
  constexpr std::uint16_t RankMask(Suit suit) const {
    return static_cast<std::uint16_t>((bits_ >> (static_cast<int>(suit) * kNumRanks)) & 0x1FFF);
  }

  // Lowest / highest card by index; the set must be non-empty.
  constexpr Card Lowest() const { return Card::FromIndex(std::countr_zero(bits_)); }
  constexpr Card Highest() const { return Card::FromIndex(63 - std::countl_zero(bits_)); }

  constexpr CardSet operator|(CardSet o) const { return CardSet(bits_ | o.bits_); }
  constexpr CardSet operator&(CardSet o) const { return CardSet(bits_ & o.bits_); }
  constexpr CardSet operator-(CardSet o) const { return CardSet(bits_ & ~o.bits_); }
  constexpr CardSet& operator|=(CardSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr CardSet& operator-=(CardSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(CardSet, CardSet) = default;

  class Iterator {
   public:
    constexpr explicit Iterator(std::uint64_t bits) : bits_(bits) {}
    constexpr Card operator*() const { return Card::FromIndex(std::countr_zero(bits_)); }
    constexpr Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    friend constexpr bool operator==(Iterator, Iterator) = default;

   private:
    std::uint64_t bits_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Card> ToVector() const;
  std::string ToString() const;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace spades
