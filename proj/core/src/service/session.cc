#include "spades/service/session.h"

#include <random>
#include <sstream>
#include <thread>

#include "spades/engine/game.h"
#include "spades/engine/rng.h"

namespace spades::service {
namespace {

using nlohmann::json;

std::string SeatStr(Seat s) { return std::string(1, SeatChar(s)); }

Seat ParseSeat(const json& j) {
  const std::string s = j.get<std::string>();
  auto seat = s.size() == 1 ? SeatFromChar(s[0]) : std::nullopt;
  if (!seat) throw std::invalid_argument("bad seat '" + s + "'");
  return *seat;
}

json PairJson(const std::array<int, 2>& v) { return json{{"NS", v[0]}, {"EW", v[1]}}; }

json CardsJson(CardSet cards) {
  json arr = json::array();
  for (Card c : cards) arr.push_back(c.ToCode());
  return arr;
}

json BidJson(Seat seat, Bid bid) {
  return {{"seat", SeatStr(seat)}, {"value", bid.value}, {"blind", bid.blind}};
}

json TrickJson(const Trick& t) {
  json plays = json::array();
  for (int i = 0; i < t.size; ++i) {
    plays.push_back({{"seat", SeatStr(t.SeatOf(i))}, {"card", t.cards[i].ToCode()}});
  }
  json j = {{"leader", SeatStr(t.leader)}, {"plays", plays}};
  if (t.complete()) j["winner"] = SeatStr(t.winner);
  return j;
}

json SeatMap(const std::array<int, kNumSeats>& v) {
  json j;
  for (Seat s : kAllSeats) j[SeatStr(s)] = v[Index(s)];
  return j;
}

std::string IllegalCardReason(const RoundState& state, Seat seat, Card card) {
  const CardSet hand = state.hand(seat);
  if (!hand.contains(card)) return card.ToCode() + " is not in your hand";
  const Trick& t = state.current_trick();
  if (!t.empty()) {
    return "must follow the lead suit (" + std::string(1, SuitChar(t.lead_suit())) + ")";
  }
  return "spades have not been broken";
}

}  // namespace

std::string ActionError::code() const {
  switch (kind_) {
    case Kind::kOutOfTurn: return "out_of_turn";
    case Kind::kIllegal: return "illegal";
    case Kind::kStale: return "stale";
    case Kind::kGameOver: return "game_over";
  }
  return "error";
}

json RoundScoreJson(const RoundScore& score, const GameScore& after) {
  json j;
  for (Partnership p : {Partnership::kNorthSouth, Partnership::kEastWest}) {
    const PartnershipRoundScore& s = score.of(p);
    j[std::string(PartnershipName(p))] = {
        {"combined_bid", s.combined_bid}, {"tricks", s.tricks},
        {"contract_made", s.contract_made}, {"contract_points", s.contract_points},
        {"overtricks", s.overtricks}, {"nil_points", s.nil_points},
        {"bag_penalty", s.bag_penalty}, {"bag_removal", s.bag_removal},
        {"points_delta", s.points_delta}, {"bags_after", s.bags_after}};
  }
  j["totals"] = PairJson(after.points);
  j["bags"] = PairJson(after.bags);
  return j;
}

SessionConfig SessionConfigFromJson(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  SessionConfig c;
  try {
    if (j.contains("human_seat")) c.human_seat = ParseSeat(j.at("human_seat"));
    if (j.contains("first_dealer")) c.first_dealer = ParseSeat(j.at("first_dealer"));
    const BotSpec base{j.value("bidder", std::string("bis")), j.value("player", std::string("srp"))};
    c.bots.fill(base);
    if (j.contains("bots")) {
      for (const auto& [key, spec] : j.at("bots").items()) {
        const Seat s = ParseSeat(json(key));
        c.bots[Index(s)] = {spec.value("bidder", base.bidder), spec.value("player", base.player)};
      }
    }
    c.goals.win = j.value("goal", c.goals.win);
    c.goals.lose = j.value("lose", c.goals.lose);
    if (j.contains("seed") && !j.at("seed").is_null()) c.seed = j.at("seed").get<std::uint64_t>();
    c.blind_nil_allowed = j.value("blind_nil", c.blind_nil_allowed);
    c.bot_delay_ms = j.value("bot_delay_ms", c.bot_delay_ms);
    c.max_rounds = j.value("max_rounds", c.max_rounds);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  if (c.goals.win <= 0 || c.goals.lose >= 0) throw std::invalid_argument("goal must be > 0 and lose < 0");
  if (c.bot_delay_ms < 0 || c.bot_delay_ms > 10000) throw std::invalid_argument("bot_delay_ms out of range");
  if (c.max_rounds < 1) throw std::invalid_argument("max_rounds must be positive");
  return c;
}

Session::Session(std::string id, SessionConfig config, const harness::AgentResources& resources,
                 RoundSink sink)
    : id_(std::move(id)), config_(std::move(config)), sink_(std::move(sink)),
      dealer_(config_.first_dealer) {
  for (Seat s : kAllSeats) {
    if (s == config_.human_seat) {
      labels_[Index(s)] = "human";
      continue;
    }
    const BotSpec& spec = config_.bots[Index(s)];
    bots_[Index(s)] = harness::MakeAgent(spec.bidder, spec.player, resources);
    labels_[Index(s)] = bots_[Index(s)]->name();
  }
  for (Seat s : kAllSeats) {
    const Seat partner = PartnerOf(s);
    setup_.partner_is_bis[Index(s)] =
        s != config_.human_seat && partner != config_.human_seat &&
        harness::IsBisFamily(config_.bots[Index(s)].bidder) &&
        harness::IsBisFamily(config_.bots[Index(partner)].bidder);
  }
  seed_ = config_.seed ? *config_.seed : std::random_device{}();
  std::unique_lock<std::mutex> lock(mu_);
  StartRound();
  AdvanceBots(lock);
}

std::uint64_t Session::seq() const {
  std::lock_guard<std::mutex> lock(mu_);
  return events_.size();
}

bool Session::finished() const {
  std::lock_guard<std::mutex> lock(mu_);
  return game_over_;
}

json Session::View() const {
  std::lock_guard<std::mutex> lock(mu_);
  return ViewLocked();
}

json Session::Emit(json event) {
  event["seq"] = events_.size() + 1;
  events_.push_back(event);
  cv_.notify_all();
  return event;
}

void Session::StartRound() {
  setup_.seed = RoundSeed(seed_, round_);
  setup_.dealer = dealer_;
  setup_.score = score_;
  setup_.goals = config_.goals;
  setup_.blind_nil_allowed = config_.blind_nil_allowed;

  log_ = RoundLog{};
  log_.seed = setup_.seed;
  log_.dealer = dealer_;
  log_.hands = Deal(setup_.seed);
  log_.score_before = score_;
  log_.round = round_;
  log_.labels = labels_;
  state_.emplace(dealer_, log_.hands);
  for (Seat s : kAllSeats) {
    if (bots_[Index(s)]) bots_[Index(s)]->BeginRound(setup_.seed, s);
  }
  peeked_ = false;
  Emit({{"type", "round_start"}, {"round", round_}, {"dealer", SeatStr(dealer_)}});
}

bool Session::HumanToAct() const {
  return !game_over_ && state_->phase() != Phase::kDone && state_->ToAct() == config_.human_seat;
}

bool Session::BlindOfferOpen() const {
  const Seat h = config_.human_seat;
  if (!config_.blind_nil_allowed || peeked_ || game_over_) return false;
  if (state_->phase() != Phase::kBidding || state_->bid(h)) return false;
  const auto& partner = state_->bid(PartnerOf(h));
  return !(partner && partner->is_nil());
}

Action Session::BotDecide(Seat seat) {
  Agent& agent = *bots_[Index(seat)];
  if (state_->phase() == Phase::kBidding) {
    BidContext ctx = MakeBidContext(*state_, seat, setup_);
    if (setup_.blind_nil_allowed && !ctx.partner_bid_nil()) {
      BidContext hidden = ctx;
      hidden.hand = CardSet();
      hidden.hand_visible = false;
      if (agent.ChooseBlindNil(hidden)) return Action::BlindNil();
    }
    const Bid bid = agent.ChooseBid(ctx);
    if (bid.blind) return Action::BlindNil();
    return Action::MakeBid(bid.value);
  }
  const CardSet legal = state_->LegalPlays(seat);
  return Action::Play(agent.ChooseCard(*state_, seat, legal));
}

void Session::Apply(Seat seat, const Action& action) {
  if (game_over_) throw ActionError(ActionError::Kind::kGameOver, "the game is over");
  if (state_->ToAct() != seat) {
    throw ActionError(ActionError::Kind::kOutOfTurn, "it is " + SeatStr(state_->ToAct()) + "'s turn");
  }
  const bool bidding = state_->phase() == Phase::kBidding;
  switch (action.kind) {
    case Action::Kind::kPeek:
      throw ActionError(ActionError::Kind::kIllegal, "peek is not a move");
    case Action::Kind::kBlindNil:
    case Action::Kind::kBid: {
      if (!bidding) throw ActionError(ActionError::Kind::kOutOfTurn, "bidding is over");
      Bid bid = Bid::Regular(action.value);
      if (action.kind == Action::Kind::kBlindNil) {
        const auto& partner = state_->bid(PartnerOf(seat));
        if (!config_.blind_nil_allowed || (partner && partner->is_nil())) {
          throw ActionError(ActionError::Kind::kIllegal, "blind nil is not available");
        }
        if (seat == config_.human_seat && peeked_) {
          throw ActionError(ActionError::Kind::kIllegal, "blind nil must be bid before looking");
        }
        bid = Bid::BlindNil();
      } else if (seat == config_.human_seat && BlindOfferOpen()) {
        throw ActionError(ActionError::Kind::kIllegal, "peek or bid blind nil first");
      } else if (!bid.valid()) {
        throw ActionError(ActionError::Kind::kIllegal, "bid must be between 0 and 13");
      }
      state_->ApplyBid(seat, bid);
      log_.bids.push_back({seat, bid});
      Emit({{"type", "bid"}, {"seat", SeatStr(seat)}, {"value", bid.value}, {"blind", bid.blind}});
      if (state_->phase() == Phase::kPlaying) {
        json bids = json::array();
        for (const SeatBid& sb : log_.bids) bids.push_back(BidJson(sb.seat, sb.bid));
        Emit({{"type", "play_start"}, {"bids", bids}, {"leader", SeatStr(state_->ToAct())}});
      }
      return;
    }
    case Action::Kind::kCard: {
      if (bidding) throw ActionError(ActionError::Kind::kOutOfTurn, "bidding is not over");
      if (!state_->LegalPlays(seat).contains(action.card)) {
        throw ActionError(ActionError::Kind::kIllegal, IllegalCardReason(*state_, seat, action.card));
      }
      const int before = state_->tricks_completed();
      state_->ApplyCard(seat, action.card);
      Emit({{"type", "card"}, {"seat", SeatStr(seat)}, {"card", action.card.ToCode()}});
      if (state_->tricks_completed() > before) {
        const Trick& t = state_->completed_tricks().back();
        json e = TrickJson(t);
        e["type"] = "trick";
        e["number"] = state_->tricks_completed();
        Emit(e);
      }
      if (state_->phase() == Phase::kDone) FinishRound();
      return;
    }
  }
}

void Session::FinishRound() {
  log_.tricks.assign(state_->completed_tricks().begin(), state_->completed_tricks().end());
  log_.score = ScoreRound(state_->FinalBids(), state_->all_tricks_taken(), score_.bags);
  log_.score_after = ApplyRoundScore(score_, log_.score);
  score_ = log_.score_after;
  winner_ = GameWinner(score_, config_.goals);
  log_.winner = winner_;
  if (sink_) sink_(log_);

  last_round_ = RoundScoreJson(log_.score, score_);
  last_round_["round"] = round_;
  last_round_["tricks_taken"] = SeatMap(state_->all_tricks_taken());
  json e = last_round_;
  e["type"] = "round_end";
  Emit(e);

  if (winner_ || round_ + 1 >= config_.max_rounds) {
    game_over_ = true;
    json end = {{"type", "game_end"}, {"totals", PairJson(score_.points)}};
    end["winner"] = winner_ ? json(std::string(PartnershipName(*winner_))) : json(nullptr);
    Emit(end);
    return;
  }
  ++round_;
  dealer_ = Next(dealer_);
  StartRound();
}

void Session::AdvanceBots(std::unique_lock<std::mutex>& lock) {
  while (!game_over_ && state_->phase() != Phase::kDone && !HumanToAct()) {
    const Seat seat = state_->ToAct();
    // Only this thread mutates the game, so deciding without the lock is safe.
    lock.unlock();
    if (config_.bot_delay_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(config_.bot_delay_ms));
    }
    const Action action = BotDecide(seat);
    lock.lock();
    Apply(seat, action);
  }
}

ActionResult Session::Submit(Seat seat, std::uint64_t seq, const Action& action) {
  std::lock_guard<std::mutex> serial(submit_mu_);
  std::unique_lock<std::mutex> lock(mu_);
  const std::uint64_t now = events_.size();
  if (seq < now) {
    auto it = human_actions_.find(seq);
    if (it != human_actions_.end() && it->second == action) return {ViewLocked(), {}, true};
    throw ActionError(ActionError::Kind::kStale,
                      "view is out of date (seq " + std::to_string(seq) + " < " +
                          std::to_string(now) + ")");
  }
  if (seq > now) {
    throw ActionError(ActionError::Kind::kStale, "unknown seq " + std::to_string(seq));
  }
  if (game_over_) throw ActionError(ActionError::Kind::kGameOver, "the game is over");
  if (seat != config_.human_seat) {
    throw ActionError(ActionError::Kind::kOutOfTurn, SeatStr(seat) + " is played by a bot");
  }
  if (action.kind == Action::Kind::kPeek) {
    if (state_->phase() != Phase::kBidding) {
      throw ActionError(ActionError::Kind::kIllegal, "nothing to peek at");
    }
    peeked_ = true;
    return {ViewLocked(), {}, false};
  }
  if (!HumanToAct()) {
    throw ActionError(ActionError::Kind::kOutOfTurn, "it is " + SeatStr(state_->ToAct()) + "'s turn");
  }
  Apply(seat, action);
  human_actions_[now] = action;
  AdvanceBots(lock);
  std::vector<json> produced(events_.begin() + static_cast<std::ptrdiff_t>(now), events_.end());
  return {ViewLocked(), std::move(produced), false};
}

std::vector<json> Session::EventsAfter(std::uint64_t after, std::chrono::milliseconds timeout) const {
  std::unique_lock<std::mutex> lock(mu_);
  if (timeout.count() > 0) {
    cv_.wait_for(lock, timeout, [&] { return events_.size() > after; });
  }
  if (after >= events_.size()) return {};
  return {events_.begin() + static_cast<std::ptrdiff_t>(after), events_.end()};
}

json Session::LegalJson() const {
  if (!HumanToAct()) return nullptr;
  json j;
  if (state_->phase() == Phase::kBidding) {
    if (BlindOfferOpen()) {
      j["actions"] = {"peek", "blind_nil"};
      return j;
    }
    j["actions"] = {"bid"};
    j["bids"] = json::array();
    for (int b = 0; b <= kMaxBid; ++b) j["bids"].push_back(b);
    return j;
  }
  j["actions"] = {"card"};
  j["cards"] = CardsJson(state_->LegalPlays(config_.human_seat));
  return j;
}

json Session::ViewLocked() const {
  const Seat h = config_.human_seat;
  const bool hidden = BlindOfferOpen();
  json v;
  v["session_id"] = id_;
  v["seq"] = events_.size();
  v["seat"] = SeatStr(h);
  v["phase"] = game_over_ ? "game_over"
               : state_->phase() == Phase::kBidding ? "bidding"
                                                    : "playing";
  v["round"] = round_;
  v["dealer"] = SeatStr(dealer_);
  v["to_act"] = game_over_ ? json(nullptr) : json(SeatStr(state_->ToAct()));
  v["hand"] = hidden ? json::array() : CardsJson(state_->hand(h));
  v["hand_hidden"] = hidden;
  v["blind_offer"] = hidden;
  json bids = json::array();
  for (const SeatBid& sb : log_.bids) bids.push_back(BidJson(sb.seat, sb.bid));
  v["bids"] = bids;
  v["current_trick"] = TrickJson(state_->current_trick());
  json tricks = json::array();
  for (const Trick& t : state_->completed_tricks()) tricks.push_back(TrickJson(t));
  v["tricks"] = tricks;
  v["tricks_taken"] = SeatMap(state_->all_tricks_taken());
  v["score"] = {{"points", PairJson(score_.points)}, {"bags", PairJson(score_.bags)}};
  v["goals"] = {{"win", config_.goals.win}, {"lose", config_.goals.lose}};
  json labels;
  for (Seat s : kAllSeats) labels[SeatStr(s)] = labels_[Index(s)];
  v["players"] = labels;
  v["legal"] = LegalJson();
  v["last_round"] = last_round_.is_null() ? json(nullptr) : last_round_;
  v["winner"] = winner_ ? json(std::string(PartnershipName(*winner_))) : json(nullptr);
  return v;
}

SessionManager::SessionManager(harness::AgentResources resources, RoundSink sink)
    : resources_(std::move(resources)), sink_(std::move(sink)), salt_(std::random_device{}()) {}

std::shared_ptr<Session> SessionManager::Create(const SessionConfig& config) {
  std::string id;
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::ostringstream os;
    os << std::hex << DeriveSeed(salt_, next_++);
    id = os.str();
  }
  auto session = std::make_shared<Session>(id, config, resources_, sink_);
  std::lock_guard<std::mutex> lock(mu_);
  sessions_[id] = session;
  return session;
}

std::shared_ptr<Session> SessionManager::Find(const std::string& id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionManager::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return sessions_.size();
}

}  // namespace spades::service
