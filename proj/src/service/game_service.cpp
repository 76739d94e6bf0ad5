#include <cmath>
#include <random>

#include "gcs/puzzle_json.hpp"
#include "gcs/service.hpp"

namespace gcs::service {
namespace {

using nlohmann::json;
using puzzle::GameError;

[[noreturn]] void bad_request(const std::string& why) { throw ApiError(ApiCode::BadRequest, why); }

template <class Fn>
auto translating(Fn&& fn) {
  try {
    return fn();
  } catch (const GameError& e) {
    throw ApiError(code_for(e.kind()), e.what());
  }
}

json move_response(const puzzle::Session& session) {
  return {{"board", puzzle::to_json_value(session.board)},
          {"renderGrid", puzzle::to_json_value(puzzle::render(session.board))},
          {"solved", puzzle::is_solved(session.board)}};
}

std::uint64_t random_seed() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

}  // namespace

GameService::GameService(ServiceOptions options) : options_(std::move(options)), store_(options_.id_seed) {
  if (options_.snapshot_path && std::filesystem::exists(*options_.snapshot_path)) {
    store_.load(*options_.snapshot_path);
  }
}

json GameService::create_session(const json& request) {
  if (!request.is_object()) bad_request("request body must be an object");

  const auto mode_field = request.value("mode", json("gcs"));
  if (!mode_field.is_string()) bad_request("mode must be a string");
  const auto mode = puzzle::parse_mode(mode_field.get<std::string>());
  if (!mode) bad_request("unknown mode '" + mode_field.get<std::string>() + "'");

  if (!request.contains("size") || !request.at("size").is_number_integer()) bad_request("size must be an integer");
  const auto size = request.at("size").get<std::int64_t>();
  if (size < 2 || size > options_.max_size) {
    bad_request("size must be between 2 and " + std::to_string(options_.max_size));
  }

  std::uint64_t seed = 0;
  if (request.contains("seed") && !request.at("seed").is_null()) {
    const auto& s = request.at("seed");
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0)) {
      bad_request("seed must be a non-negative integer");
    }
    seed = s.get<std::uint64_t>();
  } else {
    seed = random_seed();
  }

  int moves = options_.default_scramble_moves;
  if (request.contains("moves") && !request.at("moves").is_null()) {
    const auto& m = request.at("moves");
    if (!m.is_number_integer() || m.get<std::int64_t>() < 1 || m.get<std::int64_t>() > 10000) {
      bad_request("moves must be an integer in [1, 10000]");
    }
    moves = m.get<int>();
  }

  std::optional<double> tolerance;
  if (request.contains("tolerance") && !request.at("tolerance").is_null()) {
    const auto& t = request.at("tolerance");
    if (!t.is_number()) bad_request("tolerance must be a number");
    tolerance = t.get<double>();
  }

  auto session = translating([&] {
    const auto n = static_cast<int>(size);
    const auto goal = puzzle::new_board(*mode, n, n, tolerance, options_.conv);
    const auto scrambled = puzzle::scramble(goal, seed, moves);
    return puzzle::start_session(store_.next_id(), scrambled.board, seed);
  });
  json response = move_response(session);
  response["id"] = session.id;
  response["seed"] = seed;
  store_.insert(std::move(session));
  save_snapshot();
  return response;
}

json GameService::post_move(const std::string& id, const json& move) {
  const auto parsed = translating([&] { return puzzle::move_from_value(move); });
  json response = store_.update(id, [&](puzzle::Session& session) {
    session = translating([&] { return puzzle::play(session, parsed); });
    return move_response(session);
  });
  save_snapshot();
  return response;
}

json GameService::post_undo(const std::string& id) {
  json response = store_.update(id, [&](puzzle::Session& session) {
    session = translating([&] { return puzzle::undo(session); });
    return move_response(session);
  });
  save_snapshot();
  return response;
}

json GameService::get_state(const std::string& id) const {
  const auto session = store_.get(id);
  json history = json::array();
  for (const auto& m : session.history) history.push_back(puzzle::to_json_value(m));
  return {{"id", session.id},
          {"seed", session.seed},
          {"board", puzzle::to_json_value(session.board)},
          {"history", std::move(history)},
          {"solved", puzzle::is_solved(session.board)}};
}

json GameService::get_render(const std::string& id) const {
  const auto session = store_.get(id);
  return {{"renderGrid", puzzle::to_json_value(puzzle::render(session.board))}};
}

void GameService::save_snapshot() const {
  if (options_.snapshot_path) store_.save(*options_.snapshot_path);
}

}  // namespace gcs::service
