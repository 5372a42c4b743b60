#include "spades/service/server.h"

#include <atomic>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include <httplib.h>

namespace spades::service {
namespace {

using nlohmann::json;

constexpr auto kEventWait = std::chrono::milliseconds(500);

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, int status, const std::string& code, const std::string& msg) {
  SendJson(res, status, {{"error", code}, {"message", msg}});
}

int StatusFor(ActionError::Kind kind) {
  return kind == ActionError::Kind::kIllegal ? 422 : 409;
}

RoundSink JsonlSink(const std::string& path) {
  if (path.empty()) return {};
  auto out = std::make_shared<std::ofstream>(path, std::ios::app);
  if (!*out) throw std::runtime_error("cannot open " + path);
  auto mu = std::make_shared<std::mutex>();
  return [out, mu](const RoundLog& log) {
    std::lock_guard<std::mutex> lock(*mu);
    *out << ToJson(log).dump() << '\n';
    out->flush();
  };
}

std::string SseFrame(const json& event) {
  return "id: " + std::to_string(event.at("seq").get<std::uint64_t>()) +
         "\nevent: " + event.at("type").get<std::string>() + "\ndata: " + event.dump() + "\n\n";
}

}  // namespace

struct PlayServer::Impl {
  explicit Impl(ServerOptions o)
      : options(std::move(o)), sessions(options.resources, JsonlSink(options.rounds_jsonl)) {}

  ServerOptions options;
  SessionManager sessions;
  httplib::Server http;
  std::atomic<bool> stopping{false};
  int port = -1;

  std::shared_ptr<Session> FindOr404(const httplib::Request& req, httplib::Response& res) {
    auto s = sessions.Find(req.matches[1]);
    if (!s) SendError(res, 404, "not_found", "no such session");
    return s;
  }

  void HandleAction(const httplib::Request& req, httplib::Response& res, bool card) {
    auto session = FindOr404(req, res);
    if (!session) return;
    json body;
    Action action;
    Seat seat = session->human_seat();
    std::uint64_t seq = 0;
    try {
      body = json::parse(req.body);
      seq = body.at("seq").get<std::uint64_t>();
      if (body.contains("seat")) {
        const std::string s = body.at("seat").get<std::string>();
        auto parsed = s.size() == 1 ? SeatFromChar(s[0]) : std::nullopt;
        if (!parsed) throw std::invalid_argument("bad seat '" + s + "'");
        seat = *parsed;
      }
      if (card) {
        action = Action::Play(Card::FromCode(body.at("card").get<std::string>()));
      } else if (body.value("peek", false)) {
        action = Action::Peek();
      } else if (body.value("blind_nil", false)) {
        action = Action::BlindNil();
      } else {
        action = Action::MakeBid(body.at("value").get<int>());
      }
    } catch (const std::exception& e) {
      SendError(res, 400, "bad_request", e.what());
      return;
    }
    try {
      ActionResult r = session->Submit(seat, seq, action);
      SendJson(res, 200, {{"view", r.view}, {"events", r.events}, {"duplicate", r.duplicate}});
    } catch (const ActionError& e) {
      SendError(res, StatusFor(e.kind()), e.code(), e.what());
    }
  }

  void Routes() {
    http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
      SendJson(res, 200, {{"ok", true}});
    });

    http.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      try {
        const json body = req.body.empty() ? json::object() : json::parse(req.body);
        auto session = sessions.Create(SessionConfigFromJson(body));
        SendJson(res, 201, {{"session_id", session->id()}, {"view", session->View()}});
      } catch (const std::exception& e) {
        SendError(res, 400, "bad_request", e.what());
      }
    });

    http.Get(R"(/api/sessions/([0-9a-f]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               if (auto s = FindOr404(req, res)) SendJson(res, 200, s->View());
             });

    http.Post(R"(/api/sessions/([0-9a-f]+)/bid)",
              [this](const httplib::Request& req, httplib::Response& res) {
                HandleAction(req, res, false);
              });

    http.Post(R"(/api/sessions/([0-9a-f]+)/card)",
              [this](const httplib::Request& req, httplib::Response& res) {
                HandleAction(req, res, true);
              });

    http.Get(R"(/api/sessions/([0-9a-f]+)/events)",
             [this](const httplib::Request& req, httplib::Response& res) {
               auto session = FindOr404(req, res);
               if (!session) return;
               std::uint64_t after = 0;
               try {
                 if (req.has_header("Last-Event-ID")) {
                   after = std::stoull(req.get_header_value("Last-Event-ID"));
                 } else if (req.has_param("after")) {
                   after = std::stoull(req.get_param_value("after"));
                 }
               } catch (const std::exception&) {
                 SendError(res, 400, "bad_request", "after must be a number");
                 return;
               }
               if (req.get_param_value("format") == "json") {
                 SendJson(res, 200, session->EventsAfter(after));
                 return;
               }
               auto cursor = std::make_shared<std::uint64_t>(after);
               res.set_header("Cache-Control", "no-cache");
               res.set_chunked_content_provider(
                   "text/event-stream",
                   [this, session, cursor](std::size_t, httplib::DataSink& sink) {
                     if (stopping) {
                       sink.done();
                       return true;
                     }
                     const auto events = session->EventsAfter(*cursor, kEventWait);
                     for (const json& e : events) {
                       const std::string frame = SseFrame(e);
                       if (!sink.write(frame.data(), frame.size())) return false;
                       *cursor = e.at("seq").get<std::uint64_t>();
                     }
                     if (events.empty()) {
                       if (session->finished() && *cursor >= session->seq()) {
                         sink.done();
                         return true;
                       }
                       static const std::string kKeepAlive = ": keepalive\n\n";
                       if (!sink.write(kKeepAlive.data(), kKeepAlive.size())) return false;
                     }
                     return true;
                   });
             });

    if (!options.static_dir.empty() && !http.set_mount_point("/", options.static_dir)) {
      throw std::runtime_error("cannot serve " + options.static_dir);
    }
  }
};

PlayServer::PlayServer(ServerOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {
  impl_->Routes();
}

PlayServer::~PlayServer() { Stop(); }

int PlayServer::Bind() {
  if (impl_->port >= 0) return impl_->port;
  Impl& i = *impl_;
  if (i.options.port == 0) {
    i.port = i.http.bind_to_any_port(i.options.host);
  } else if (i.http.bind_to_port(i.options.host, i.options.port)) {
    i.port = i.options.port;
  }
  if (i.port < 0) throw std::runtime_error("cannot bind " + i.options.host);
  return i.port;
}

void PlayServer::Listen() {
  Bind();
  impl_->http.listen_after_bind();
}

void PlayServer::Stop() {
  impl_->stopping = true;
  impl_->http.stop();
}

void PlayServer::WaitUntilReady() const { impl_->http.wait_until_ready(); }

int PlayServer::port() const { return impl_->port; }

SessionManager& PlayServer::sessions() { return impl_->sessions; }

}  // namespace spades::service
