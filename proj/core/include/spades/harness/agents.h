#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spades/engine/agent.h"
#include "spades/players/uct.h"
#include "spades/sc/sc_table.h"

namespace spades::harness {

// Shared, read-only inputs for building agents.
struct AgentResources {
  std::shared_ptr<const sc::SCTable> curves;         // full success curves
  std::shared_ptr<const sc::SCTable> single_curve;   // one curve for every sequence
  players::UctOptions uct;                           // base options for uct players
  double explore_rate = 0.0;                         // for "bis-noisy"
};

// Bidders: bis, bis-single-curve, bis-no-endgame, bis-no-conventions,
// bis-noisy, rb, ms, io. Players: srp, wrp, random, uct (search every trick)
// and uct:K (rules until K tricks remain). Throws std::invalid_argument on an
// unknown name.
std::unique_ptr<Bidder> MakeBidder(const std::string& name, const AgentResources& res);
std::unique_ptr<Player> MakePlayer(const std::string& name, const AgentResources& res);
std::unique_ptr<Agent> MakeAgent(const std::string& bidder, const std::string& player,
                                 const AgentResources& res);

bool IsBisFamily(const std::string& bidder);
std::vector<std::string> BidderNames();

}  // namespace spades::harness
