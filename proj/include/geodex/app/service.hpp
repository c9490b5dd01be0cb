#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "geodex/game.hpp"

namespace httplib {
class Server;
}

namespace geodex::app {

using json = nlohmann::json;

struct ServiceOptions {
    /// Sessions idle longer than this are dropped.
    std::chrono::seconds ttl{3600};
    /// Per-request solver budget; exceeding it answers 503.
    std::chrono::milliseconds time_budget{10'000};
    std::uint64_t seed = 0;  // 0: seed session ids from std::random_device
};

struct Response {
    int status = 200;
    json body;
};

/// In-memory game sessions behind a transport-free request handler. Every
/// route of the HTTP API goes through handle(), which is what the contract
/// tests drive; serve() only adapts it to httplib.
class GameService {
public:
    explicit GameService(ServiceOptions opts = {});
    ~GameService();

    /// method: GET/POST/DELETE; path: "/games", "/games/{id}", ...
    Response handle(const std::string& method, const std::string& path, const std::string& body);

    std::size_t session_count();
    /// Drop sessions idle past the TTL; returns how many went.
    std::size_t expire(std::chrono::steady_clock::time_point now = std::chrono::steady_clock::now());

private:
    struct Session;

    Response create(const std::string& body);
    Response state(const std::string& id);
    Response move(const std::string& id, const std::string& body);
    Response analysis(const std::string& id);
    Response remove(const std::string& id);

    std::shared_ptr<Session> find(const std::string& id);
    std::string fresh_id();
    SearchOptions budgeted() const;

    ServiceOptions opts_;
    std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t id_state_;
};

/// Routes every API endpoint of `server` to `service`.
void mount(httplib::Server& server, GameService& service);
/// Blocking listen on host:port.
int serve(GameService& service, const std::string& host, int port);

}  // namespace geodex::app
