#include "spades/harness/agents.h"

#include <stdexcept>

#include "spades/baselines/baselines.h"
#include "spades/bis/bis_bidder.h"
#include "spades/players/srp.h"

namespace spades::harness {
namespace {

std::shared_ptr<const sc::SCTable> OrIdentity(std::shared_ptr<const sc::SCTable> t) {
  if (t) return t;
  static const auto identity = std::make_shared<const sc::SCTable>(sc::SCTable::Identity());
  return identity;
}

}  // namespace

std::vector<std::string> BidderNames() {
  return {"bis", "bis-single-curve", "bis-no-endgame", "bis-no-conventions", "bis-noisy",
          "rb",  "ms",               "io"};
}

bool IsBisFamily(const std::string& bidder) { return bidder.rfind("bis", 0) == 0; }

std::unique_ptr<Bidder> MakeBidder(const std::string& name, const AgentResources& res) {
  using baselines::BaselineBidder;
  using baselines::BaselineKind;
  if (name == "rb") return std::make_unique<BaselineBidder>(BaselineKind::kRb);
  if (name == "ms") return std::make_unique<BaselineBidder>(BaselineKind::kMs);
  if (name == "io") return std::make_unique<BaselineBidder>(BaselineKind::kIo);

  bis::BisConfig config;
  config.name = name;
  auto curves = OrIdentity(res.curves);
  if (name == "bis") {
  } else if (name == "bis-single-curve") {
    curves = OrIdentity(res.single_curve);
  } else if (name == "bis-no-endgame") {
    config.endgame = false;
  } else if (name == "bis-no-conventions") {
    config.conventions = false;
  } else if (name == "bis-noisy") {
    config.explore_rate = res.explore_rate;
  } else {
    throw std::invalid_argument("unknown bidder '" + name + "'");
  }
  return std::make_unique<bis::BisBidder>(config, curves);
}

std::unique_ptr<Player> MakePlayer(const std::string& name, const AgentResources& res) {
  if (name == "srp") return std::make_unique<players::SrpPlayer>();
  if (name == "wrp") return std::make_unique<players::SrpPlayer>(players::WeakOptions());
  if (name == "random") return std::make_unique<players::RandomPlayer>();
  if (name == "uct" || name.rfind("uct:", 0) == 0) {
    players::UctOptions options = res.uct;
    options.name = name;
    if (name != "uct") {
      std::size_t used = 0;
      int k = -1;
      try {
        k = std::stoi(name.substr(4), &used);
      } catch (const std::exception&) {
      }
      if (k < 1 || k > kTricksPerRound || used != name.size() - 4) {
        throw std::invalid_argument("bad uct trick count in '" + name + "'");
      }
      options.search_tricks = k;
    }
    return std::make_unique<players::UctPlayer>(options);
  }
  throw std::invalid_argument("unknown player '" + name + "'");
}

std::unique_ptr<Agent> MakeAgent(const std::string& bidder, const std::string& player,
                                 const AgentResources& res) {
  return std::make_unique<Agent>(MakeBidder(bidder, res), MakePlayer(player, res));
}

}  // namespace spades::harness
