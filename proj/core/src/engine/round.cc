#include "spades/engine/round.h"

#include <numeric>

#include "spades/engine/rng.h"

namespace spades {

std::vector<Bid> BidContext::opponent_bids() const {
  std::vector<Bid> out;
  const std::size_t n = prev_bids.size();
  if (n >= 1) out.push_back(prev_bids[n - 1]);
  if (n >= 3) out.push_back(prev_bids[n - 3]);
  return out;
}

bool BidContext::opponent_bid_nil() const {
  for (const Bid& b : opponent_bids()) {
    if (b.is_nil()) return true;
  }
  return false;
}

Agent::Agent(std::unique_ptr<Bidder> bidder, std::unique_ptr<Player> player)
    : bidder_(std::move(bidder)), player_(std::move(player)) {}

std::string Agent::name() const { return bidder_->name() + "+" + player_->name(); }

void Agent::BeginRound(std::uint64_t seed, Seat seat) {
  bidder_->BeginRound(DeriveSeed(seed, {1, static_cast<std::uint64_t>(Index(seat))}), seat);
  player_->BeginRound(DeriveSeed(seed, {2, static_cast<std::uint64_t>(Index(seat))}), seat);
}

std::array<CardSet, kNumSeats> Deal(std::uint64_t seed) {
  std::array<int, kNumCards> deck;
  std::iota(deck.begin(), deck.end(), 0);
  Rng rng(seed);
  rng.Shuffle(deck.begin(), deck.end());
  std::array<CardSet, kNumSeats> hands{};
  for (int i = 0; i < kNumCards; ++i) hands[i / kHandSize].insert(Card::FromIndex(deck[i]));
  return hands;
}

std::array<Bid, kNumSeats> RoundLog::BidsBySeat() const {
  std::array<Bid, kNumSeats> out{};
  for (const SeatBid& sb : bids) out[Index(sb.seat)] = sb.bid;
  return out;
}

std::array<int, kNumSeats> RoundLog::TricksBySeat() const {
  std::array<int, kNumSeats> out{};
  for (const Trick& t : tricks) ++out[Index(t.winner)];
  return out;
}

BidContext MakeBidContext(const RoundState& state, Seat seat, const RoundSetup& setup) {
  BidContext ctx;
  ctx.hand = state.hand(seat);
  ctx.prev_bids = state.BidsInOrder();
  ctx.seat = seat;
  ctx.dealer = state.dealer();
  ctx.score = setup.score;
  ctx.goals = setup.goals;
  ctx.partner_is_bis = setup.partner_is_bis[Index(seat)];
  ctx.blind_allowed = setup.blind_nil_allowed;
  return ctx;
}

RoundLog PlayRound(std::span<Agent* const, kNumSeats> agents, const RoundSetup& setup) {
  RoundLog log;
  log.seed = setup.seed;
  log.dealer = setup.dealer;
  log.hands = Deal(setup.seed);
  log.score_before = setup.score;

  RoundState state(setup.dealer, log.hands);
  for (Seat s : kAllSeats) agents[Index(s)]->BeginRound(setup.seed, s);

  while (state.phase() == Phase::kBidding) {
    const Seat seat = state.ToAct();
    Agent& agent = *agents[Index(seat)];
    BidContext ctx = MakeBidContext(state, seat, setup);
    Bid bid;
    bool blind = false;
    if (setup.blind_nil_allowed && !ctx.partner_bid_nil()) {
      BidContext hidden = ctx;
      hidden.hand = CardSet();
      hidden.hand_visible = false;
      blind = agent.ChooseBlindNil(hidden);
    }
    bid = blind ? Bid::BlindNil() : agent.ChooseBid(ctx);
    if (!bid.valid() || (bid.blind && !setup.blind_nil_allowed)) {
      throw RuleViolation(agent.name() + " returned an invalid bid");
    }
    state.ApplyBid(seat, bid);
    log.bids.push_back({seat, bid});
  }

  while (state.phase() == Phase::kPlaying) {
    const Seat seat = state.ToAct();
    const CardSet legal = state.LegalPlays(seat);
    const Card card = agents[Index(seat)]->ChooseCard(state, seat, legal);
    if (!legal.contains(card)) {
      throw RuleViolation(agents[Index(seat)]->name() + " played illegal card " + card.ToCode());
    }
    state.ApplyCard(seat, card);
  }

  log.tricks.assign(state.completed_tricks().begin(), state.completed_tricks().end());
  log.score = ScoreRound(state.FinalBids(), state.all_tricks_taken(), setup.score.bags);
  log.score_after = ApplyRoundScore(setup.score, log.score);
  return log;
}

std::vector<int> ReplayRound(const RoundLog& log) {
  RoundState state(log.dealer, log.hands);
  if (log.bids.size() != kNumSeats) throw RuleViolation("log must hold four bids");
  for (const SeatBid& sb : log.bids) state.ApplyBid(sb.seat, sb.bid);
  if (log.tricks.size() != kTricksPerRound) throw RuleViolation("log must hold 13 tricks");

  std::vector<int> legal_counts;
  legal_counts.reserve(kNumCards);
  for (const Trick& t : log.tricks) {
    if (t.size != kNumSeats) throw RuleViolation("incomplete trick in log");
    if (state.ToAct() != t.leader) throw RuleViolation("trick leader mismatch");
    for (int i = 0; i < kNumSeats; ++i) {
      const Seat s = t.SeatOf(i);
      legal_counts.push_back(state.LegalPlays(s).size());
      state.ApplyCard(s, t.cards[i]);
    }
    if (state.completed_tricks().back().winner != t.winner) {
      throw RuleViolation("trick winner mismatch");
    }
  }
  const RoundScore score =
      ScoreRound(state.FinalBids(), state.all_tricks_taken(), log.score_before.bags);
  for (int p = 0; p < 2; ++p) {
    if (score.side[p].points_delta != log.score.side[p].points_delta ||
        score.side[p].bags_after != log.score.side[p].bags_after) {
      throw RuleViolation("score mismatch on replay");
    }
  }
  if (ApplyRoundScore(log.score_before, score) != log.score_after) {
    throw RuleViolation("running total mismatch on replay");
  }
  return legal_counts;
}

namespace {

using nlohmann::json;

std::string SeatStr(Seat s) { return std::string(1, SeatChar(s)); }

Seat SeatFromJson(const json& j) {
  const std::string s = j.get<std::string>();
  auto seat = s.size() == 1 ? SeatFromChar(s[0]) : std::nullopt;
  if (!seat) throw std::invalid_argument("bad seat '" + s + "'");
  return *seat;
}

json PairJson(const std::array<int, 2>& v) { return json{{"NS", v[0]}, {"EW", v[1]}}; }

std::array<int, 2> PairFromJson(const json& j) {
  return {j.at("NS").get<int>(), j.at("EW").get<int>()};
}

json CardsJson(CardSet cards) {
  json arr = json::array();
  for (Card c : cards) arr.push_back(c.ToCode());
  return arr;
}

}  // namespace

json ToJson(const RoundLog& log) {
  json j;
  j["seed"] = log.seed;
  j["dealer"] = SeatStr(log.dealer);
  json hands;
  for (Seat s : kAllSeats) hands[SeatStr(s)] = CardsJson(log.hands[Index(s)]);
  j["hands"] = hands;
  json bids = json::array();
  for (const SeatBid& sb : log.bids) {
    bids.push_back({{"seat", SeatStr(sb.seat)}, {"value", sb.bid.value}, {"blind", sb.bid.blind}});
  }
  j["bids"] = bids;
  json tricks = json::array();
  for (const Trick& t : log.tricks) {
    json plays = json::array();
    for (int i = 0; i < t.size; ++i) plays.push_back(t.cards[i].ToCode());
    tricks.push_back({{"leader", SeatStr(t.leader)}, {"plays", plays}, {"winner", SeatStr(t.winner)}});
  }
  j["tricks"] = tricks;
  j["scores"] = PairJson({log.score.side[0].points_delta, log.score.side[1].points_delta});
  j["bags"] = PairJson({log.score.side[0].bags_after, log.score.side[1].bags_after});
  j["before"] = {{"points", PairJson(log.score_before.points)},
                 {"bags", PairJson(log.score_before.bags)}};
  j["totals"] = PairJson(log.score_after.points);
  j["game"] = log.game;
  j["round"] = log.round;
  json labels;
  for (Seat s : kAllSeats) labels[SeatStr(s)] = log.labels[Index(s)];
  j["labels"] = labels;
  j["side_a"] = std::string(PartnershipName(log.side_a));
  if (log.winner) j["winner"] = std::string(PartnershipName(*log.winner));
  return j;
}

RoundLog RoundLogFromJson(const json& j) {
  RoundLog log;
  log.seed = j.at("seed").get<std::uint64_t>();
  log.dealer = SeatFromJson(j.at("dealer"));
  for (Seat s : kAllSeats) {
    for (const auto& code : j.at("hands").at(SeatStr(s))) {
      log.hands[Index(s)].insert(Card::FromCode(code.get<std::string>()));
    }
  }
  for (const auto& b : j.at("bids")) {
    log.bids.push_back({SeatFromJson(b.at("seat")),
                        Bid{b.at("value").get<int>(), b.value("blind", false)}});
  }
  for (const auto& t : j.at("tricks")) {
    Trick trick;
    trick.leader = SeatFromJson(t.at("leader"));
    for (const auto& code : t.at("plays")) {
      if (trick.size == kNumSeats) throw std::invalid_argument("trick with more than 4 plays");
      trick.cards[trick.size++] = Card::FromCode(code.get<std::string>());
    }
    trick.winner = SeatFromJson(t.at("winner"));
    log.tricks.push_back(trick);
  }
  const auto deltas = PairFromJson(j.at("scores"));
  const auto bags = PairFromJson(j.at("bags"));
  if (j.contains("before")) {
    log.score_before.points = PairFromJson(j.at("before").at("points"));
    log.score_before.bags = PairFromJson(j.at("before").at("bags"));
  }
  for (int p = 0; p < 2; ++p) {
    log.score.side[p].points_delta = deltas[p];
    log.score.side[p].bags_after = bags[p];
    log.score_after.points[p] = log.score_before.points[p] + deltas[p];
    log.score_after.bags[p] = bags[p];
  }
  if (j.contains("totals") && PairFromJson(j.at("totals")) != log.score_after.points) {
    throw std::invalid_argument("totals inconsistent with before + scores");
  }
  log.game = j.value("game", std::int64_t{-1});
  log.round = j.value("round", 0);
  if (j.contains("labels")) {
    for (Seat s : kAllSeats) log.labels[Index(s)] = j.at("labels").value(SeatStr(s), "");
  }
  if (j.contains("side_a")) {
    auto p = PartnershipFromName(j.at("side_a").get<std::string>());
    if (!p) throw std::invalid_argument("bad side_a");
    log.side_a = *p;
  }
  if (j.contains("winner")) {
    auto p = PartnershipFromName(j.at("winner").get<std::string>());
    if (!p) throw std::invalid_argument("bad winner");
    log.winner = *p;
  }
  return log;
}

}  // namespace spades
