#include "scanboard/engine/server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <string>
#include <system_error>

#include "scanboard/engine/session.hpp"

namespace scanboard::engine {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kPollSliceMs = 100;

bool write_all(int fd, const std::string& data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    ssize_t n = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

bool write_events(int fd, const std::vector<ServerEvent>& events) {
  std::string out;
  for (const auto& ev : events) {
    out += serialize_server_event(ev);
    out.push_back('\n');
  }
  return out.empty() || write_all(fd, out);
}

}  // namespace

Server::Server(EngineConfig config, std::uint16_t port, bool loopback_only)
    : config_(std::move(config)), port_(port), loopback_only_(loopback_only) {}

Server::~Server() {
  stop();
  std::lock_guard lock(workers_mutex_);
  workers_.clear();  // joins
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

void Server::start() {
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw std::system_error(errno, std::generic_category(), "socket");
  int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port_);
  addr.sin_addr.s_addr = htonl(loopback_only_ ? INADDR_LOOPBACK : INADDR_ANY);
  if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) {
    throw std::system_error(errno, std::generic_category(), "bind");
  }
  if (::listen(listen_fd_, 16) < 0) throw std::system_error(errno, std::generic_category(), "listen");

  socklen_t len = sizeof addr;
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

void Server::stop() { stopping_ = true; }

void Server::run() {
  while (!stopping_) {
    pollfd pfd{listen_fd_, POLLIN, 0};
    int ready = ::poll(&pfd, 1, kPollSliceMs);
    if (ready <= 0) continue;
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) continue;
    std::lock_guard lock(workers_mutex_);
    workers_.emplace_back([this, fd] { serve_connection(fd); });
  }
}

void Server::serve_connection(int fd) {
  Session session(config_);
  bool alive = write_events(fd, session.greeting());

  std::string pending;
  auto next_tick = Clock::now();
  bool was_scanning = false;

  while (alive && !stopping_) {
    const auto period = std::chrono::milliseconds(session.config().scan.period_ms);
    if (session.scanning() && !was_scanning) next_tick = Clock::now() + period;
    was_scanning = session.scanning();

    int timeout = kPollSliceMs;
    if (was_scanning) {
      auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(next_tick - Clock::now()).count();
      timeout = static_cast<int>(std::clamp<long long>(wait, 0, kPollSliceMs));
    }

    pollfd pfd{fd, POLLIN, 0};
    int ready = ::poll(&pfd, 1, timeout);
    if (ready < 0 && errno != EINTR) break;

    if (ready > 0) {
      char buf[4096];
      ssize_t n = ::recv(fd, buf, sizeof buf, 0);
      if (n <= 0) break;
      pending.append(buf, static_cast<std::size_t>(n));
      std::size_t nl;
      while (alive && (nl = pending.find('\n')) != std::string::npos) {
        std::string line = pending.substr(0, nl);
        pending.erase(0, nl + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        alive = write_events(fd, session.handle_line(line));
      }
    }

    if (alive && session.scanning() && was_scanning && Clock::now() >= next_tick) {
      next_tick += period;
      alive = write_events(fd, session.handle(client::ClockTick{}));
    }
  }
  ::close(fd);
}

}  // namespace scanboard::engine
