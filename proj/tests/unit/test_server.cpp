#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "doctest.h"
#include "json.hpp"
#include "ltlshield/gateway/server.hpp"

using namespace ltlshield;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = boost::asio::ip::tcp;
using nlohmann::json;

namespace {

class Client {
 public:
  explicit Client(std::uint16_t port) : ws_(io_) {
    tcp::resolver resolver(io_);
    auto results = resolver.resolve("127.0.0.1", std::to_string(port));
    boost::asio::connect(ws_.next_layer(), results.begin(), results.end());
    ws_.handshake("127.0.0.1", "/");
  }

  json read() {
    beast::flat_buffer buf;
    ws_.read(buf);
    return json::parse(beast::buffers_to_string(buf.data()));
  }

  void send(const json& j) { ws_.write(boost::asio::buffer(j.dump())); }

  // Next state frame, skipping nothing else silently.
  json read_state() {
    auto j = read();
    REQUIRE(j["type"] == "state");
    return j;
  }

 private:
  boost::asio::io_context io_;
  websocket::stream<tcp::socket> ws_;
};

}  // namespace

TEST_CASE("websocket gateway protocol") {
  gateway::ServerOptions opts;
  opts.port = 0;
  opts.tick = std::chrono::milliseconds(5);
  opts.seed = 3;
  gateway::Server server(sim::delorean_scenario("safe"), opts);
  auto port = server.listen();
  server.start();

  Client c(port);
  auto config = c.read();
  CHECK(config["type"] == "config");
  CHECK(config["scenario"]["ap"] == json::array({"tower", "fast"}));

  // One state frame per tick with increasing tick numbers.
  long last = -1;
  for (int i = 0; i < 10; ++i) {
    auto s = c.read_state();
    CHECK(s["tick"].get<long>() == last + 1);
    last = s["tick"].get<long>();
  }

  c.send({{"type", "warp"}});
  bool error_seen = false;
  for (int i = 0; i < 5 && !error_seen; ++i) {
    auto j = c.read();
    if (j["type"] == "error") {
      error_seen = true;
    } else {
      CHECK(j["tick"].get<long>() == last + 1);
      last = j["tick"].get<long>();
    }
  }
  CHECK(error_seen);

  c.send({{"type", "throttle"}, {"value", 1.0}});
  c.send({{"type", "reset"}});
  bool restarted = false;
  for (int i = 0; i < 10 && !restarted; ++i) {
    auto s = c.read_state();
    if (s["tick"] == 0) {
      restarted = true;
      CHECK(s["x"] == 0.0);
      CHECK(s["v"] == 0.0);
      CHECK(s["q"] == "q0");
    }
  }
  CHECK(restarted);

  // A second connection gets its own session.
  Client other(port);
  CHECK(other.read()["type"] == "config");
  CHECK(other.read_state()["tick"] == 0);

  server.stop();
}
