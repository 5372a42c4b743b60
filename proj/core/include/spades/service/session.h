#pragma once

#include <array>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spades/engine/agent.h"
#include "spades/engine/round.h"
#include "spades/harness/agents.h"

namespace spades::service {

struct BotSpec {
  std::string bidder = "bis";
  std::string player = "srp";
};

struct SessionConfig {
  Seat human_seat = Seat::kSouth;
  std::array<BotSpec, kNumSeats> bots;  // the human seat's entry is ignored
  GameGoals goals;
  std::optional<std::uint64_t> seed;    // drawn at random when absent
  Seat first_dealer = Seat::kWest;
  bool blind_nil_allowed = false;
  int bot_delay_ms = 0;
  int max_rounds = 200;
};

// Reads the create-session body. Throws std::invalid_argument on bad seats,
// goals or bot names.
SessionConfig SessionConfigFromJson(const nlohmann::json& j);

struct Action {
  enum class Kind { kPeek, kBid, kBlindNil, kCard };
  Kind kind = Kind::kBid;
  int value = 0;  // kBid
  Card card;      // kCard

  static Action Peek() { return Action{Kind::kPeek, 0, Card()}; }
  static Action MakeBid(int v) { return Action{Kind::kBid, v, Card()}; }
  static Action BlindNil() { return Action{Kind::kBlindNil, 0, Card()}; }
  static Action Play(Card c) { return Action{Kind::kCard, 0, c}; }
  friend bool operator==(const Action&, const Action&) = default;
};

class ActionError : public std::runtime_error {
 public:
  enum class Kind { kOutOfTurn, kIllegal, kStale, kGameOver };
  ActionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }
  std::string code() const;

 private:
  Kind kind_;
};

struct ActionResult {
  nlohmann::json view;
  std::vector<nlohmann::json> events;  // events produced by this submission
  bool duplicate = false;
};

// Called with every finished round, e.g. to append it to a JSONL file.
using RoundSink = std::function<void(const RoundLog&)>;

// One game with a single human seat and three bots. Public methods are
// thread-safe; submissions are serialized.
class Session {
 public:
  Session(std::string id, SessionConfig config, const harness::AgentResources& resources,
          RoundSink sink = {});

  const std::string& id() const { return id_; }
  Seat human_seat() const { return config_.human_seat; }

  // What the human may see right now.
  nlohmann::json View() const;
  std::uint64_t seq() const;
  bool finished() const;

  // `seq` is the sequence number of the view the action was chosen from. A
  // repeat of an already applied action returns the current view unchanged.
  ActionResult Submit(Seat seat, std::uint64_t seq, const Action& action);

  // Events with sequence number greater than `after`, waiting up to `timeout`
  // for at least one to arrive.
  std::vector<nlohmann::json> EventsAfter(std::uint64_t after,
                                          std::chrono::milliseconds timeout = {}) const;

 private:
  void StartRound();
  void AdvanceBots(std::unique_lock<std::mutex>& lock);
  Action BotDecide(Seat seat);
  void Apply(Seat seat, const Action& action);
  void FinishRound();
  bool HumanToAct() const;
  bool BlindOfferOpen() const;
  nlohmann::json LegalJson() const;
  nlohmann::json ViewLocked() const;
  nlohmann::json Emit(nlohmann::json event);

  std::string id_;
  SessionConfig config_;
  RoundSink sink_;
  std::array<std::unique_ptr<Agent>, kNumSeats> bots_;
  std::array<std::string, kNumSeats> labels_;

  std::mutex submit_mu_;
  mutable std::mutex mu_;
  mutable std::condition_variable cv_;

  std::uint64_t seed_ = 0;
  int round_ = 0;
  Seat dealer_;
  GameScore score_;
  RoundSetup setup_;
  std::optional<RoundState> state_;
  RoundLog log_;
  bool peeked_ = false;
  bool game_over_ = false;
  std::optional<Partnership> winner_;
  nlohmann::json last_round_;
  std::vector<nlohmann::json> events_;
  std::map<std::uint64_t, Action> human_actions_;  // keyed by the seq they were applied at
};

class SessionManager {
 public:
  explicit SessionManager(harness::AgentResources resources, RoundSink sink = {});

  std::shared_ptr<Session> Create(const SessionConfig& config);
  std::shared_ptr<Session> Find(const std::string& id) const;
  std::size_t size() const;

 private:
  harness::AgentResources resources_;
  RoundSink sink_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_ = 0;
  std::uint64_t salt_;
};

// Public JSON forms shared by views and events.
nlohmann::json RoundScoreJson(const RoundScore& score, const GameScore& after);

}  // namespace spades::service
