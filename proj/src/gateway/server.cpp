#include "ltlshield/gateway/server.hpp"

#include <deque>
#include <thread>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>
#include <fmt/format.h>

#include "ltlshield/gateway/session.hpp"

namespace ltlshield::gateway {
namespace {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

class Connection : public std::enable_shared_from_this<Connection> {
 public:
  Connection(tcp::socket socket, const sim::Scenario& sc, const ServerOptions& opts)
      : ws_(std::move(socket)), timer_(ws_.get_executor()), session_(sc, opts.seed), period_(opts.tick) {}

  void start() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
      if (ec) return;
      self->send(self->session_.config_message());
      self->read();
      self->schedule();
    });
  }

  void close() {
    closed_ = true;
    timer_.cancel();
    beast::error_code ec;
    beast::get_lowest_layer(ws_).socket().close(ec);
  }

 private:
  void read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->close();
        return;
      }
      auto text = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      if (auto reply = self->session_.handle(text)) self->send(*reply);
      self->read();
    });
  }

  void schedule() {
    if (closed_) return;
    next_ = next_ == std::chrono::steady_clock::time_point{} ? std::chrono::steady_clock::now() + period_ : next_ + period_;
    timer_.expires_at(next_);
    timer_.async_wait([self = shared_from_this()](beast::error_code ec) {
      if (ec || self->closed_) return;
      if (auto state = self->session_.tick()) self->send(*state);
      self->schedule();
    });
  }

  void send(const json& msg) {
    outbox_.push_back(msg.dump());
    if (outbox_.size() == 1) write();
  }

  void write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->close();
        return;
      }
      self->outbox_.pop_front();
      if (!self->outbox_.empty()) self->write();
    });
  }

  websocket::stream<beast::tcp_stream> ws_;
  asio::steady_timer timer_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  GatewaySession session_;
  std::chrono::milliseconds period_;
  std::chrono::steady_clock::time_point next_{};
  bool closed_ = false;
};

}  // namespace

struct Server::Impl {
  Impl(sim::Scenario s, ServerOptions o) : sc(std::move(s)), opts(o), acceptor(io) {}

  void accept() {
    acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;
      auto c = std::make_shared<Connection>(std::move(socket), sc, opts);
      connections.push_back(c);
      c->start();
      accept();
    });
  }

  sim::Scenario sc;
  ServerOptions opts;
  asio::io_context io;
  tcp::acceptor acceptor;
  std::vector<std::weak_ptr<Connection>> connections;
  std::thread thread;
  std::uint16_t port = 0;
};

Server::Server(sim::Scenario sc, ServerOptions opts) : impl_(std::make_unique<Impl>(std::move(sc), opts)) {
  // Fail early on a scenario the shield cannot start from.
  GatewaySession probe(impl_->sc, opts.seed);
}

Server::~Server() { stop(); }

std::uint16_t Server::listen() {
  tcp::endpoint ep(asio::ip::make_address(impl_->opts.address), impl_->opts.port);
  impl_->acceptor.open(ep.protocol());
  impl_->acceptor.set_option(asio::socket_base::reuse_address(true));
  impl_->acceptor.bind(ep);
  impl_->acceptor.listen();
  impl_->port = impl_->acceptor.local_endpoint().port();
  impl_->accept();
  return impl_->port;
}

void Server::run() {
  if (!impl_->acceptor.is_open()) listen();
  impl_->io.run();
}

void Server::start() {
  if (!impl_->acceptor.is_open()) listen();
  impl_->thread = std::thread([this] { impl_->io.run(); });
}

void Server::stop() {
  asio::post(impl_->io, [this] {
    beast::error_code ec;
    impl_->acceptor.close(ec);
    for (auto& w : impl_->connections) {
      if (auto c = w.lock()) c->close();
    }
  });
  if (impl_->thread.joinable()) impl_->thread.join();
  impl_->io.stop();
}

std::uint16_t Server::port() const noexcept { return impl_->port; }

}  // namespace ltlshield::gateway
