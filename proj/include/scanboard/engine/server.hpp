#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "scanboard/engine/config.hpp"

namespace scanboard::engine {

inline constexpr std::uint16_t kDefaultPort = 7313;

/// Line-delimited JSON service over TCP, one Session per connection.
///
/// Each connection runs its own loop: client lines and timer-driven
/// clock_tick events go through the session one at a time, and the timer
/// only runs while the session is scanning. Sessions share nothing.
class Server {
 public:
  explicit Server(EngineConfig config, std::uint16_t port = kDefaultPort, bool loopback_only = true);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and listens; port 0 picks an ephemeral port. Throws std::system_error.
  void start();
  /// Port actually bound (valid after start()).
  std::uint16_t port() const { return port_; }
  /// Accepts connections until stop() is called.
  void run();
  void stop();

 private:
  void serve_connection(int fd);

  EngineConfig config_;
  std::uint16_t port_;
  bool loopback_only_;
  int listen_fd_ = -1;
  std::atomic<bool> stopping_{false};
  std::mutex workers_mutex_;
  std::vector<std::jthread> workers_;
};

}  // namespace scanboard::engine
