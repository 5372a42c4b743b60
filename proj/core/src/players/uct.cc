#include "spades/players/uct.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "spades/engine/scoring.h"

namespace spades::players {
namespace {

struct HiddenSlots {
  std::vector<Seat> seats;
  std::vector<int> capacity;
  std::vector<Card> cards;
  std::vector<unsigned> allowed;  // per card, bit i = seats[i] may hold it
};

HiddenSlots Slots(const RoundState& state, Seat seat) {
  HiddenSlots h;
  CardSet pool;
  for (Seat s : kAllSeats) {
    if (s == seat) continue;
    h.seats.push_back(s);
    h.capacity.push_back(state.hand(s).size());
    pool |= state.hand(s);
  }
  h.cards = pool.ToVector();
  for (Card c : h.cards) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < h.seats.size(); ++i) {
      if (!state.KnownVoid(h.seats[i], c.suit())) mask |= 1U << i;
    }
    h.allowed.push_back(mask);
  }
  return h;
}

std::array<CardSet, kNumSeats> WithOwnHand(const RoundState& state, Seat seat) {
  std::array<CardSet, kNumSeats> hands{};
  hands[Index(seat)] = state.hand(seat);
  return hands;
}

void Enumerate(const HiddenSlots& h, std::size_t i, std::vector<int>& cap,
               std::array<CardSet, kNumSeats>& hands,
               std::vector<std::array<CardSet, kNumSeats>>& out, std::size_t limit, bool& overflow) {
  if (overflow) return;
  if (i == h.cards.size()) {
    if (out.size() >= limit) {
      overflow = true;
      return;
    }
    out.push_back(hands);
    return;
  }
  for (std::size_t k = 0; k < h.seats.size(); ++k) {
    if (cap[k] == 0 || !((h.allowed[i] >> k) & 1U)) continue;
    --cap[k];
    hands[Index(h.seats[k])].insert(h.cards[i]);
    Enumerate(h, i + 1, cap, hands, out, limit, overflow);
    hands[Index(h.seats[k])].erase(h.cards[i]);
    ++cap[k];
  }
}

}  // namespace

std::array<CardSet, kNumSeats> SampleHiddenHands(const RoundState& state, Seat seat, Rng& rng) {
  const HiddenSlots h = Slots(state, seat);
  std::vector<std::size_t> order(h.cards.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    rng.Shuffle(order.begin(), order.end());
    // Most constrained cards first keeps dead ends rare.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(h.allowed[a]) < std::popcount(h.allowed[b]);
    });
    auto hands = WithOwnHand(state, seat);
    std::vector<int> cap = h.capacity;
    bool ok = true;
    for (std::size_t i : order) {
      int total = 0;
      for (std::size_t k = 0; k < h.seats.size(); ++k) {
        if ((h.allowed[i] >> k) & 1U) total += cap[k];
      }
      if (total == 0) {
        ok = false;
        break;
      }
      // Weighted by free capacity, which is uniform when nothing is known.
      auto pick = static_cast<int>(rng.Below(static_cast<std::uint64_t>(total)));
      for (std::size_t k = 0; k < h.seats.size(); ++k) {
        if (!((h.allowed[i] >> k) & 1U)) continue;
        if (pick < cap[k]) {
          --cap[k];
          hands[Index(h.seats[k])].insert(h.cards[i]);
          break;
        }
        pick -= cap[k];
      }
    }
    if (ok) return hands;
  }
  // Unreachable in practice; the actual deal always satisfies the constraints.
  return state.hands();
}

std::optional<std::vector<std::array<CardSet, kNumSeats>>> EnumerateHiddenHands(
    const RoundState& state, Seat seat, std::size_t limit) {
  const HiddenSlots h = Slots(state, seat);
  std::vector<std::array<CardSet, kNumSeats>> out;
  std::vector<int> cap = h.capacity;
  auto hands = WithOwnHand(state, seat);
  bool overflow = false;
  Enumerate(h, 0, cap, hands, out, limit, overflow);
  if (overflow) return std::nullopt;
  return out;
}

double RolloutReward(RoundState state, Seat seat, const SrpOptions& policy) {
  while (state.phase() == Phase::kPlaying) {
    const Seat s = state.ToAct();
    state.ApplyCard(s, SrpChooseCard(state, s, state.LegalPlays(s), policy));
  }
  const RoundScore score = ScoreRound(state.FinalBids(), state.all_tricks_taken(), {0, 0});
  const Partnership own = PartnershipOf(seat);
  return score.of(own).points_delta - score.of(Other(own)).points_delta;
}

Card UctChooseCard(const RoundState& state, Seat seat, CardSet legal, const UctOptions& options,
                   Rng& rng, UctStats* stats) {
  const std::vector<Card> moves = legal.ToVector();
  if (moves.empty()) throw RuleViolation("no legal card to choose from");
  const std::size_t n = moves.size();
  std::vector<int> visits(n, 0);
  std::vector<double> total(n, 0.0);
  int iterations = 0;
  bool exhaustive = false;

  auto play = [&](const std::array<CardSet, kNumSeats>& hands, std::size_t arm) {
    RoundState sim = state;
    sim.Redeal(hands);
    sim.ApplyCard(seat, moves[arm]);
    total[arm] += RolloutReward(std::move(sim), seat, options.rollout);
    ++visits[arm];
    ++iterations;
  };

  const bool timed = options.seconds > 0;
  const std::size_t budget = static_cast<std::size_t>(std::max(1, options.iterations));
  if (n > 1 && !timed) {
    if (auto deals = EnumerateHiddenHands(state, seat, budget / n); deals && !deals->empty()) {
      exhaustive = true;
      for (const auto& hands : *deals) {
        for (std::size_t a = 0; a < n; ++a) play(hands, a);
      }
    }
  }

  if (n > 1 && !exhaustive) {
    const auto start = std::chrono::steady_clock::now();
    auto out_of_budget = [&] {
      if (!timed) return static_cast<std::size_t>(iterations) >= budget;
      const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
      return iterations >= static_cast<int>(n) && used.count() >= options.seconds;
    };
    while (!out_of_budget()) {
      std::size_t arm = n;
      for (std::size_t a = 0; a < n; ++a) {
        if (visits[a] == 0) {
          arm = a;
          break;
        }
      }
      if (arm == n) {
        double best = -std::numeric_limits<double>::infinity();
        const double log_total = std::log(static_cast<double>(iterations));
        for (std::size_t a = 0; a < n; ++a) {
          const double ucb = total[a] / visits[a] + options.exploration * std::sqrt(log_total / visits[a]);
          if (ucb > best) {
            best = ucb;
            arm = a;
          }
        }
      }
      play(SampleHiddenHands(state, seat, rng), arm);
    }
  }

  std::size_t chosen = 0;
  std::vector<double> mean(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    mean[a] = visits[a] ? total[a] / visits[a] : -std::numeric_limits<double>::infinity();
    if (mean[a] > mean[chosen]) chosen = a;
  }
  if (stats) {
    stats->iterations = iterations;
    stats->exhaustive = exhaustive;
    stats->moves = moves;
    stats->visits = visits;
    stats->mean_reward = mean;
  }
  return moves[chosen];
}

Card UctPlayer::ChooseCard(const RoundState& state, Seat seat, CardSet legal) {
  stats_ = UctStats{};
  if (legal.size() == 1) return *legal.begin();
  if (state.TricksRemaining() > options_.search_tricks) {
    return SrpChooseCard(state, seat, legal, options_.rollout);
  }
  return UctChooseCard(state, seat, legal, options_, rng_, &stats_);
}

}  // namespace spades::players
