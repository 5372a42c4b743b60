#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace spades {

// Clockwise order: North, East, South, West.
enum class Seat : std::uint8_t { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };
inline constexpr int kNumSeats = 4;
inline constexpr std::array<Seat, kNumSeats> kAllSeats{Seat::kNorth, Seat::kEast, Seat::kSouth,
                                                       Seat::kWest};

enum class Partnership : std::uint8_t { kNorthSouth = 0, kEastWest = 1 };

constexpr int Index(Seat s) { return static_cast<int>(s); }
constexpr int Index(Partnership p) { return static_cast<int>(p); }

constexpr Seat SeatAt(int i) { return static_cast<Seat>(((i % 4) + 4) % 4); }
constexpr Seat Next(Seat s) { return SeatAt(Index(s) + 1); }
constexpr Seat Previous(Seat s) { return SeatAt(Index(s) + 3); }
constexpr Seat PartnerOf(Seat s) { return SeatAt(Index(s) + 2); }
constexpr Partnership PartnershipOf(Seat s) { return static_cast<Partnership>(Index(s) % 2); }
constexpr Partnership Other(Partnership p) { return static_cast<Partnership>(1 - Index(p)); }
constexpr bool SameSide(Seat a, Seat b) { return PartnershipOf(a) == PartnershipOf(b); }

// Number of clockwise steps from `from` to `to` (0..3).
constexpr int Distance(Seat from, Seat to) { return (Index(to) - Index(from) + 4) % 4; }

char SeatChar(Seat s);
std::optional<Seat> SeatFromChar(char c);
std::string_view PartnershipName(Partnership p);
std::optional<Partnership> PartnershipFromName(std::string_view name);

}  // namespace spades
