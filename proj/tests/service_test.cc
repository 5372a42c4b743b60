#include <gtest/gtest.h>

#include <httplib.h>

#include <thread>

#include "spades/engine/game.h"
#include "spades/service/server.h"
#include "spades/service/session.h"

namespace spades::service {
namespace {

using nlohmann::json;

SessionConfig Config(std::uint64_t seed) {
  SessionConfig c;
  c.seed = seed;
  return c;
}

Session MakeSession(const SessionConfig& c, RoundSink sink = {}) {
  return Session("t", c, harness::AgentResources{}, std::move(sink));
}

void CollectStrings(const json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (j.is_structured()) {
    for (const auto& v : j) CollectStrings(v, out);
  }
}

CardSet CardsIn(const json& j) {
  std::vector<std::string> strings;
  CollectStrings(j, strings);
  CardSet cards;
  for (const auto& s : strings) {
    if (s.size() != 2) continue;
    try {
      cards.insert(Card::FromCode(s));
    } catch (const std::exception&) {
    }
  }
  return cards;
}

CardSet HandOf(const json& view) {
  CardSet hand;
  for (const auto& c : view.at("hand")) hand.insert(Card::FromCode(c.get<std::string>()));
  return hand;
}

Seat SeatOf(const json& j) { return *SeatFromChar(j.get<std::string>()[0]); }

// A simple human: bids 3, plays the first legal card.
Action HumanMove(const json& view) {
  const json& legal = view.at("legal");
  const auto actions = legal.at("actions").get<std::vector<std::string>>();
  if (actions.front() == "peek") return Action::Peek();
  if (actions.front() == "bid") return Action::MakeBid(3);
  return Action::Play(Card::FromCode(legal.at("cards").front().get<std::string>()));
}

// Rebuilds round logs from the public event stream alone.
std::vector<RoundLog> ReplayEvents(const std::vector<json>& events) {
  std::vector<RoundLog> rounds;
  GameScore running;
  RoundLog log;
  Trick trick;
  for (const json& e : events) {
    const std::string type = e.at("type");
    if (type == "round_start") {
      log = RoundLog{};
      log.dealer = SeatOf(e.at("dealer"));
      log.score_before = running;
      log.round = e.at("round");
    } else if (type == "bid") {
      log.bids.push_back({SeatOf(e.at("seat")), Bid{e.at("value").get<int>(), e.at("blind").get<bool>()}});
    } else if (type == "card") {
      const Seat s = SeatOf(e.at("seat"));
      const Card c = Card::FromCode(e.at("card").get<std::string>());
      if (trick.size == 0) trick.leader = s;
      trick.cards[trick.size++] = c;
      log.hands[Index(s)].insert(c);
    } else if (type == "trick") {
      trick.winner = SeatOf(e.at("winner"));
      log.tricks.push_back(trick);
      trick = Trick{};
    } else if (type == "round_end") {
      for (Partnership p : {Partnership::kNorthSouth, Partnership::kEastWest}) {
        const json& side = e.at(std::string(PartnershipName(p)));
        log.score.side[Index(p)].points_delta = side.at("points_delta");
        log.score.side[Index(p)].bags_after = side.at("bags_after");
        log.score_after.points[Index(p)] = running.points[Index(p)] + side.at("points_delta").get<int>();
        log.score_after.bags[Index(p)] = side.at("bags_after");
      }
      running = log.score_after;
      rounds.push_back(log);
    }
  }
  return rounds;
}

struct PlayedGame {
  std::vector<json> views;
  std::vector<json> events;
  std::vector<RoundLog> sunk;
  json final_view;
};

PlayedGame PlayOut(const SessionConfig& config) {
  PlayedGame g;
  Session s = MakeSession(config, [&](const RoundLog& log) { g.sunk.push_back(log); });
  json view = s.View();
  g.views.push_back(view);
  while (view.at("phase") != "game_over") {
    ActionResult r = s.Submit(config.human_seat, view.at("seq"), HumanMove(view));
    view = r.view;
    g.views.push_back(view);
  }
  g.events = s.EventsAfter(0);
  g.final_view = view;
  return g;
}

TEST(Session, DefaultViewShowsThirteenCardsInBidding) {
  Session s = MakeSession(Config(7));
  const json v = s.View();
  EXPECT_EQ(v.at("phase"), "bidding");
  EXPECT_EQ(v.at("hand").size(), 13u);
  EXPECT_FALSE(v.at("hand_hidden").get<bool>());
  EXPECT_EQ(v.at("to_act"), "S");
  EXPECT_EQ(v.at("legal").at("actions"), json({"bid"}));
  EXPECT_EQ(v.at("legal").at("bids").size(), 14u);
}

TEST(Session, FixedSeedReproducesInitialDeal) {
  Session a = MakeSession(Config(11));
  Session b = MakeSession(Config(11));
  Session c = MakeSession(Config(12));
  EXPECT_EQ(a.View().at("hand"), b.View().at("hand"));
  EXPECT_EQ(a.View().at("bids"), b.View().at("bids"));
  EXPECT_NE(a.View().at("hand"), c.View().at("hand"));
  EXPECT_EQ(HandOf(a.View()), Deal(RoundSeed(11, 0))[Index(Seat::kSouth)]);
}

TEST(Session, BlindNilOfferComesBeforeTheHand) {
  SessionConfig c = Config(3);
  c.blind_nil_allowed = true;
  Session s = MakeSession(c);
  json v = s.View();
  ASSERT_TRUE(v.at("blind_offer").get<bool>());
  EXPECT_TRUE(v.at("hand").empty());
  EXPECT_EQ(v.at("legal").at("actions"), json({"peek", "blind_nil"}));
  EXPECT_THROW(s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(3)), ActionError);

  v = s.Submit(Seat::kSouth, v.at("seq"), Action::Peek()).view;
  EXPECT_EQ(v.at("hand").size(), 13u);
  EXPECT_FALSE(v.at("blind_offer").get<bool>());
  try {
    s.Submit(Seat::kSouth, v.at("seq"), Action::BlindNil());
    FAIL() << "blind nil accepted after peeking";
  } catch (const ActionError& e) {
    EXPECT_EQ(e.kind(), ActionError::Kind::kIllegal);
  }
}

TEST(Session, BlindNilBidIsRecorded) {
  SessionConfig c = Config(3);
  c.blind_nil_allowed = true;
  c.bots.fill({"rb", "srp"});
  Session s = MakeSession(c);
  const json v = s.View();
  const ActionResult r = s.Submit(Seat::kSouth, v.at("seq"), Action::BlindNil());
  bool seen = false;
  for (const json& b : r.view.at("bids")) {
    if (b.at("seat") == "S") {
      EXPECT_EQ(b.at("value"), 0);
      EXPECT_TRUE(b.at("blind").get<bool>());
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
  EXPECT_EQ(r.view.at("hand").size(), 13u);
}

TEST(Session, HumanBidLetsBotsBidAndPlayBegin) {
  SessionConfig c = Config(5);
  c.first_dealer = Seat::kEast;  // South bids first
  Session s = MakeSession(c);
  const json v = s.View();
  EXPECT_TRUE(v.at("bids").empty());
  const ActionResult r = s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(3));
  int bot_bids = 0;
  bool play_start = false;
  for (const json& e : r.events) {
    if (e.at("type") == "bid" && e.at("seat") != "S") ++bot_bids;
    if (e.at("type") == "play_start") play_start = true;
  }
  EXPECT_EQ(bot_bids, 3);
  EXPECT_TRUE(play_start);
  EXPECT_EQ(r.view.at("phase"), "playing");
  EXPECT_EQ(r.view.at("bids").size(), 4u);
}

TEST(Session, OffSuitCardRejectedAndStateUnchanged) {
  // Find a decision where the human must follow suit but also holds another suit.
  for (std::uint64_t seed = 1; seed < 200; ++seed) {
    Session s = MakeSession(Config(seed));
    json v = s.View();
    v = s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(3)).view;
    while (v.at("phase") == "playing") {
      const json& trick = v.at("current_trick");
      const CardSet hand = HandOf(v);
      if (!trick.at("plays").empty()) {
        const Suit lead = Card::FromCode(trick.at("plays")[0].at("card").get<std::string>()).suit();
        const CardSet off = hand - CardSet::OfSuit(lead);
        if (hand.CountInSuit(lead) > 0 && off.size() > 0) {
          try {
            s.Submit(Seat::kSouth, v.at("seq"), Action::Play(*off.begin()));
            FAIL() << "off-suit card accepted";
          } catch (const ActionError& e) {
            EXPECT_EQ(e.kind(), ActionError::Kind::kIllegal);
            EXPECT_NE(std::string(e.what()).find("follow"), std::string::npos);
          }
          EXPECT_EQ(s.View(), v);
          return;
        }
      }
      v = s.Submit(Seat::kSouth, v.at("seq"), HumanMove(v)).view;
    }
  }
  FAIL() << "no follow-suit decision found";
}

TEST(Session, OutOfTurnAndWrongPhaseRejected) {
  Session s = MakeSession(Config(9));
  const json v = s.View();
  try {
    s.Submit(Seat::kNorth, v.at("seq"), Action::MakeBid(3));
    FAIL();
  } catch (const ActionError& e) {
    EXPECT_EQ(e.kind(), ActionError::Kind::kOutOfTurn);
  }
  const Card any = *HandOf(v).begin();
  try {
    s.Submit(Seat::kSouth, v.at("seq"), Action::Play(any));
    FAIL();
  } catch (const ActionError& e) {
    EXPECT_EQ(e.kind(), ActionError::Kind::kOutOfTurn);
  }
  EXPECT_THROW(s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(14)), ActionError);
  EXPECT_EQ(s.View(), v);
}

TEST(Session, DuplicateSubmitIsIdempotent) {
  Session s = MakeSession(Config(21));
  const json v = s.View();
  const ActionResult first = s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(4));
  const ActionResult again = s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(4));
  EXPECT_FALSE(first.duplicate);
  EXPECT_TRUE(again.duplicate);
  EXPECT_TRUE(again.events.empty());
  EXPECT_EQ(again.view, first.view);
  EXPECT_EQ(s.seq(), first.view.at("seq").get<std::uint64_t>());

  // Same seq with a different action is a conflict, not a replay.
  try {
    s.Submit(Seat::kSouth, v.at("seq"), Action::MakeBid(5));
    FAIL();
  } catch (const ActionError& e) {
    EXPECT_EQ(e.kind(), ActionError::Kind::kStale);
  }
  EXPECT_THROW(s.Submit(Seat::kSouth, s.seq() + 5, Action::MakeBid(5)), ActionError);
}

TEST(Session, FullGameNeverLeaksHiddenCards) {
  SessionConfig c = Config(31);
  c.blind_nil_allowed = true;
  const PlayedGame g = PlayOut(c);
  ASSERT_FALSE(g.sunk.empty());

  // Views: every card named is the viewer's own or already played.
  for (const json& v : g.views) {
    const CardSet named = CardsIn(v);
    const CardSet own = HandOf(v);
    CardSet played;
    for (const auto& t : v.at("tricks")) played |= CardsIn(t);
    played |= CardsIn(v.at("current_trick"));
    const CardSet extra = named - own - played;
    EXPECT_EQ(extra.size(), 0) << v.dump();
    if (v.at("phase") != "game_over") {
      const int round = v.at("round");
      EXPECT_TRUE((own - Deal(RoundSeed(31, round))[Index(Seat::kSouth)]).empty());
    }
  }
  // Events: a card is only ever named once it is on the table.
  CardSet played;
  for (const json& e : g.events) {
    if (e.at("type") == "round_start") played = CardSet();
    if (e.at("type") == "card") played.insert(Card::FromCode(e.at("card").get<std::string>()));
    const CardSet extra = CardsIn(e) - played;
    EXPECT_EQ(extra.size(), 0) << e.dump();
  }
}

TEST(Session, EventStreamReplaysToFinalScores) {
  const PlayedGame g = PlayOut(Config(41));
  const std::vector<RoundLog> rounds = ReplayEvents(g.events);
  ASSERT_EQ(rounds.size(), g.sunk.size());
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    EXPECT_NO_THROW(ReplayRound(rounds[i])) << "round " << i;
    EXPECT_EQ(rounds[i].hands, g.sunk[i].hands);
    EXPECT_EQ(rounds[i].score_after, g.sunk[i].score_after);
    const RoundScore engine = ScoreRound(g.sunk[i].BidsBySeat(), g.sunk[i].TricksBySeat(),
                                         g.sunk[i].score_before.bags);
    EXPECT_EQ(RoundScoreJson(engine, g.sunk[i].score_after).dump(),
              [&] {
                json e = RoundScoreJson(g.sunk[i].score, g.sunk[i].score_after);
                return e.dump();
              }());
  }
  const json& end = g.events.back();
  EXPECT_EQ(end.at("type"), "game_end");
  EXPECT_EQ(end.at("totals").at("NS"), rounds.back().score_after.points[0]);
  EXPECT_EQ(end.at("totals").at("EW"), rounds.back().score_after.points[1]);
  EXPECT_FALSE(g.final_view.at("winner").is_null());
  for (const RoundLog& log : g.sunk) EXPECT_NO_THROW(ReplayRound(log));
}

TEST(Session, SequenceNumbersAreContiguous) {
  const PlayedGame g = PlayOut(Config(51));
  for (std::size_t i = 0; i < g.events.size(); ++i) {
    EXPECT_EQ(g.events[i].at("seq").get<std::uint64_t>(), i + 1);
  }
}

TEST(Session, ConfigValidation) {
  EXPECT_THROW(SessionConfigFromJson(json{{"human_seat", "Q"}}), std::invalid_argument);
  EXPECT_THROW(SessionConfigFromJson(json{{"goal", -5}}), std::invalid_argument);
  EXPECT_THROW(SessionConfigFromJson(json::array()), std::invalid_argument);
  SessionConfig bad = Config(1);
  bad.bots[Index(Seat::kWest)].bidder = "nobody";
  EXPECT_THROW(MakeSession(bad), std::invalid_argument);

  const SessionConfig c = SessionConfigFromJson(
      json{{"human_seat", "E"}, {"bidder", "ms"}, {"bots", {{"N", {{"bidder", "io"}}}}}, {"seed", 4}});
  EXPECT_EQ(c.human_seat, Seat::kEast);
  EXPECT_EQ(c.bots[Index(Seat::kNorth)].bidder, "io");
  EXPECT_EQ(c.bots[Index(Seat::kSouth)].bidder, "ms");
  EXPECT_EQ(*c.seed, 4u);
}

TEST(SessionManager, CreatesIndependentSessions) {
  SessionManager m(harness::AgentResources{});
  auto a = m.Create(Config(1));
  auto b = m.Create(Config(1));
  EXPECT_NE(a->id(), b->id());
  EXPECT_EQ(m.Find(a->id()), a);
  EXPECT_EQ(m.Find("ffff"), nullptr);
  a->Submit(Seat::kSouth, a->seq(), Action::MakeBid(3));
  EXPECT_NE(a->seq(), b->seq());
}

class Http : public ::testing::Test {
 protected:
  void SetUp() override {
    ServerOptions o;
    o.port = 0;
    server_ = std::make_unique<PlayServer>(o);
    port_ = server_->Bind();
    thread_ = std::thread([this] { server_->Listen(); });
    server_->WaitUntilReady();
  }
  void TearDown() override {
    server_->Stop();
    thread_.join();
  }
  httplib::Client Client() const {
    httplib::Client cli("127.0.0.1", port_);
    cli.set_read_timeout(10, 0);
    return cli;
  }
  json Post(const std::string& path, const json& body, int expect) {
    auto res = Client().Post(path, body.dump(), "application/json");
    EXPECT_TRUE(res);
    if (!res) return nullptr;
    EXPECT_EQ(res->status, expect) << res->body;
    return json::parse(res->body);
  }

  std::unique_ptr<PlayServer> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(Http, CreateViewBidAndPlay) {
  const json created = Post("/api/sessions", {{"seed", 17}}, 201);
  const std::string id = created.at("session_id");
  const std::string base = "/api/sessions/" + id;

  auto got = Client().Get(base);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  json view = json::parse(got->body);
  EXPECT_EQ(view, created.at("view"));
  EXPECT_EQ(view.at("hand").size(), 13u);

  json r = Post(base + "/bid", {{"seq", view.at("seq")}, {"value", 3}}, 200);
  view = r.at("view");
  EXPECT_EQ(view.at("phase"), "playing");
  EXPECT_FALSE(r.at("duplicate").get<bool>());

  const json dup = Post(base + "/bid", {{"seq", created.at("view").at("seq")}, {"value", 3}}, 200);
  EXPECT_TRUE(dup.at("duplicate").get<bool>());

  // A card that is not in hand is rejected with a reason.
  const CardSet hand = HandOf(view);
  Card foreign;
  for (int i = 0; i < kNumCards; ++i) {
    if (!hand.contains(Card::FromIndex(i))) {
      foreign = Card::FromIndex(i);
      break;
    }
  }
  const json err = Post(base + "/card", {{"seq", view.at("seq")}, {"card", foreign.ToCode()}}, 422);
  EXPECT_EQ(err.at("error"), "illegal");

  const std::string legal = view.at("legal").at("cards").front();
  r = Post(base + "/card", {{"seq", view.at("seq")}, {"card", legal}}, 200);
  EXPECT_GT(r.at("view").at("seq").get<int>(), view.at("seq").get<int>());

  Post(base + "/card", {{"seq", r.at("view").at("seq")}, {"seat", "N"}, {"card", legal}}, 409);
  Post(base + "/card", {{"card", legal}}, 400);
  Post(base + "/card", {{"seq", 0}, {"card", "ZZ"}}, 400);
}

TEST_F(Http, ErrorsAndUnknownSessions) {
  Post("/api/sessions", {{"bidder", "nobody"}}, 400);
  auto res = Client().Post("/api/sessions", "{not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  res = Client().Get("/api/sessions/abc123");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
}

TEST_F(Http, EventStreamDeliversInOrderAndResumes) {
  const json created = Post("/api/sessions", {{"seed", 23}}, 201);
  const std::string base = "/api/sessions/" + created.at("session_id").get<std::string>();
  const json view = created.at("view");
  Post(base + "/bid", {{"seq", view.at("seq")}, {"value", 3}}, 200);

  auto polled = Client().Get(base + "/events?after=0&format=json");
  ASSERT_TRUE(polled);
  const json all = json::parse(polled->body);
  ASSERT_GE(all.size(), 5u);

  // SSE from the start, stopping once every event so far has arrived.
  std::string stream;
  std::vector<std::uint64_t> ids;
  auto cli = Client();
  cli.Get(base + "/events", [&](const char* data, std::size_t n) {
    stream.append(data, n);
    std::size_t pos;
    while ((pos = stream.find("\n\n")) != std::string::npos) {
      const std::string frame = stream.substr(0, pos);
      stream.erase(0, pos + 2);
      if (frame.rfind("id: ", 0) == 0) ids.push_back(std::stoull(frame.substr(4)));
    }
    return ids.size() < all.size();
  });
  ASSERT_EQ(ids.size(), all.size());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(ids[i], i + 1);

  // Reconnect with Last-Event-ID picks up where the client left off.
  const std::uint64_t resume = all.size() - 2;
  std::vector<std::uint64_t> resumed;
  stream.clear();
  cli.Get(base + "/events", {{"Last-Event-ID", std::to_string(resume)}},
          [&](const char* data, std::size_t n) {
            stream.append(data, n);
            std::size_t pos;
            while ((pos = stream.find("\n\n")) != std::string::npos) {
              const std::string frame = stream.substr(0, pos);
              stream.erase(0, pos + 2);
              if (frame.rfind("id: ", 0) == 0) resumed.push_back(std::stoull(frame.substr(4)));
            }
            return resumed.size() < 2;
          });
  EXPECT_EQ(resumed, (std::vector<std::uint64_t>{resume + 1, resume + 2}));
}

}  // namespace
}  // namespace spades::service
