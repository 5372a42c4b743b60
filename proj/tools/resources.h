#pragma once

#include <filesystem>
#include <iostream>
#include <memory>
#include <string>

#include "spades/harness/agents.h"
#include "spades/sc/sc_table.h"

namespace spades::tools {

inline std::string DefaultCurvesPath() { return std::string(SPADES_DATA_DIR) + "/sc.json"; }
inline std::string DefaultSingleCurvePath() { return std::string(SPADES_DATA_DIR) + "/sc_single.json"; }

inline std::shared_ptr<const sc::SCTable> LoadCurvesOrIdentity(const std::string& path) {
  if (path.empty() || !std::filesystem::exists(path)) {
    std::cerr << "note: success curves '" << path << "' not found, using nilProb = nilValue\n";
    return std::make_shared<const sc::SCTable>(sc::SCTable::Identity());
  }
  return std::make_shared<const sc::SCTable>(sc::LoadSCTable(path));
}

}  // namespace spades::tools
