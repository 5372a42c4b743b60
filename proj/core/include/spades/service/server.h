#pragma once

#include <memory>
#include <string>

#include "spades/harness/agents.h"
#include "spades/service/session.h"

namespace spades::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;                   // 0 picks a free port
  std::string rounds_jsonl;          // append finished rounds here when set
  std::string static_dir;            // served under / when set
  harness::AgentResources resources;
};

// HTTP front end for SessionManager. Routes are listed in docs/play_api.md.
class PlayServer {
 public:
  explicit PlayServer(ServerOptions options);
  ~PlayServer();
  PlayServer(const PlayServer&) = delete;
  PlayServer& operator=(const PlayServer&) = delete;

  // Binds the socket and returns the port. Throws std::runtime_error on failure.
  int Bind();
  // Serves until Stop(); binds first if needed.
  void Listen();
  void Stop();
  void WaitUntilReady() const;
  int port() const;

  SessionManager& sessions();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace spades::service
