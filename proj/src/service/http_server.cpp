#include <charconv>

#include "gcs/service.hpp"

// After Eigen: <resolv.h> defines a _res macro that breaks Eigen headers.
#include <httplib.h>

namespace gcs::service {
namespace {

using nlohmann::json;

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <class Fn>
void handle(httplib::Response& res, Fn&& fn) {
  try {
    send_json(res, 200, fn());
  } catch (const ApiError& e) {
    send_json(res, http_status(e.code()), e.body());
  } catch (const std::exception& e) {
    send_json(res, 400, ApiError(ApiCode::BadRequest, e.what()).body());
  }
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    throw ApiError(ApiCode::BadRequest, std::string("malformed JSON body: ") + e.what());
  }
}

}  // namespace

void mount_routes(httplib::Server& server, GameService& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { return service.create_session(parse_body(req)); });
  });
  server.Get(R"(/sessions/([0-9a-f]+))", [&](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { return service.get_state(req.matches[1]); });
  });
  server.Get(R"(/sessions/([0-9a-f]+)/render)", [&](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { return service.get_render(req.matches[1]); });
  });
  server.Post(R"(/sessions/([0-9a-f]+)/moves)", [&](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { return service.post_move(req.matches[1], parse_body(req)); });
  });
  server.Post(R"(/sessions/([0-9a-f]+)/undo)", [&](const httplib::Request& req, httplib::Response& res) {
    handle(res, [&] { return service.post_undo(req.matches[1]); });
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      const auto code = res.status == 404 ? ApiCode::NotFound : ApiCode::BadRequest;
      res.set_content(ApiError(code, "no such endpoint").body().dump(), "application/json");
    }
  });
}

std::pair<std::string, int> parse_address(std::string_view address) {
  const auto colon = address.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("address must look like host:port");
  }
  int port = 0;
  const auto digits = address.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || port < 0 || port > 65535) {
    throw std::invalid_argument("bad port in address '" + std::string(address) + "'");
  }
  return {std::string(address.substr(0, colon)), port};
}

}  // namespace gcs::service
