#pragma once

// Session-oriented JSON API over the puzzle engine.
//
// Endpoints (see mount_routes):
//   POST /sessions                  create_session
//   GET  /sessions/{id}             get_state
//   POST /sessions/{id}/moves       post_move
//   POST /sessions/{id}/undo        post_undo
//   GET  /sessions/{id}/render      get_render
//
// Requests on one session are serialized; different sessions run in
// parallel. A snapshot holds the store exclusively, so it sees no half-applied
// move.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "gcs/puzzle.hpp"

namespace httplib {
class Server;
}

namespace gcs::service {

enum class ApiCode { NotFound, IllegalMove, InvalidAmount, InvalidIndex, NothingToUndo, BadRequest };

std::string_view code_name(ApiCode code);
int http_status(ApiCode code);
ApiCode code_for(puzzle::ErrorKind kind);

class ApiError : public std::runtime_error {
 public:
  ApiError(ApiCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
  ApiCode code() const { return code_; }
  nlohmann::json body() const;

 private:
  ApiCode code_;
};

class SessionStore {
 public:
  /// With an id seed, generated ids are reproducible; otherwise random.
  explicit SessionStore(std::optional<std::uint64_t> id_seed = std::nullopt);

  std::string next_id();
  void insert(puzzle::Session session);

  /// Runs fn on the stored session under its lock. Throws ApiError(NotFound).
  template <class Fn>
  auto update(const std::string& id, Fn&& fn) {
    std::shared_lock map_lock(map_mutex_);
    auto entry = find(id);
    std::lock_guard entry_lock(entry->mutex);
    return fn(entry->session);
  }

  puzzle::Session get(const std::string& id) const;
  std::size_t size() const;

  /// {"sessions": [session, ...]} sorted by id.
  nlohmann::json snapshot() const;
  /// Replaces the contents. Throws std::runtime_error on a bad document.
  void restore(const nlohmann::json& doc);

  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);

 private:
  struct Entry {
    std::mutex mutex;
    puzzle::Session session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;

  mutable std::shared_mutex map_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
  mutable std::mutex save_mutex_;
  std::mutex id_mutex_;
  std::mt19937_64 id_rng_;
};

struct ServiceOptions {
  std::optional<std::filesystem::path> snapshot_path;
  std::optional<std::uint64_t> id_seed;
  FrequencyConvention conv;
  int default_scramble_moves = 20;
  int max_size = 16;
};

class GameService {
 public:
  /// Restores from the snapshot file when it exists; a corrupt file throws.
  explicit GameService(ServiceOptions options = {});

  nlohmann::json create_session(const nlohmann::json& request);
  nlohmann::json post_move(const std::string& id, const nlohmann::json& move);
  nlohmann::json post_undo(const std::string& id);
  nlohmann::json get_state(const std::string& id) const;
  nlohmann::json get_render(const std::string& id) const;

  /// Writes the snapshot file if one is configured.
  void save_snapshot() const;

  SessionStore& store() { return store_; }
  const SessionStore& store() const { return store_; }

 private:
  ServiceOptions options_;
  SessionStore store_;
};

/// Registers the endpoints (and permissive CORS) on `server`.
void mount_routes(httplib::Server& server, GameService& service);

/// Parses "host:port". Throws std::invalid_argument.
std::pair<std::string, int> parse_address(std::string_view address);

}  // namespace gcs::service
