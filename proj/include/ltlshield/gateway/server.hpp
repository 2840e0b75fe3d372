#pragma once

#include <chrono>
#include <cstdint>
#include <memory>

#include "ltlshield/sim/scenario.hpp"

namespace ltlshield::gateway {

struct ServerOptions {
  std::uint16_t port = 8765;  // 0 picks a free port
  std::chrono::milliseconds tick{250};
  std::uint64_t seed = 0;
  std::string address = "127.0.0.1";
};

/// Websocket endpoint: one GatewaySession per connection, all connections
/// served by a single io thread.
class Server {
 public:
  Server(sim::Scenario sc, ServerOptions opts);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and listens; returns the bound port.
  std::uint16_t listen();
  /// Serves until stop() is called.
  void run();
  /// Runs on a background thread.
  void start();
  void stop();
  std::uint16_t port() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ltlshield::gateway
