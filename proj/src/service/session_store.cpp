#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "gcs/puzzle_json.hpp"
#include "gcs/service.hpp"

namespace gcs::service {

SessionStore::SessionStore(std::optional<std::uint64_t> id_seed)
    : id_rng_(id_seed ? *id_seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}()) {}

std::string SessionStore::next_id() {
  std::lock_guard lock(id_mutex_);
  const auto hi = id_rng_();
  const auto lo = id_rng_();
  return puzzle::make_session_id(hi, lo);
}

void SessionStore::insert(puzzle::Session session) {
  auto entry = std::make_shared<Entry>();
  const std::string id = session.id;
  entry->session = std::move(session);
  std::unique_lock lock(map_mutex_);
  if (!sessions_.emplace(id, std::move(entry)).second) {
    throw ApiError(ApiCode::BadRequest, "duplicate session id " + id);
  }
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ApiError(ApiCode::NotFound, "no session " + id);
  return it->second;
}

puzzle::Session SessionStore::get(const std::string& id) const {
  std::shared_lock map_lock(map_mutex_);
  auto entry = find(id);
  std::lock_guard entry_lock(entry->mutex);
  return entry->session;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

nlohmann::json SessionStore::snapshot() const {
  // Exclusive: updates hold the shared lock for their whole duration.
  std::unique_lock lock(map_mutex_);
  std::vector<const puzzle::Session*> ordered;
  for (const auto& [id, entry] : sessions_) ordered.push_back(&entry->session);
  std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->id < b->id; });
  nlohmann::json sessions = nlohmann::json::array();
  for (const auto* s : ordered) sessions.push_back(puzzle::to_json_value(*s));
  return {{"sessions", std::move(sessions)}};
}

void SessionStore::restore(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("sessions") || !doc.at("sessions").is_array()) {
    throw std::runtime_error("snapshot: expected {\"sessions\": [...]}");
  }
  std::unordered_map<std::string, std::shared_ptr<Entry>> restored;
  for (const auto& item : doc.at("sessions")) {
    auto entry = std::make_shared<Entry>();
    try {
      entry->session = puzzle::session_from_value(item);
    } catch (const puzzle::GameError& e) {
      throw std::runtime_error(std::string("snapshot: ") + e.what());
    }
    const std::string id = entry->session.id;
    if (!restored.emplace(id, std::move(entry)).second) throw std::runtime_error("snapshot: duplicate id " + id);
  }
  std::unique_lock lock(map_mutex_);
  sessions_ = std::move(restored);
}

void SessionStore::save(const std::filesystem::path& path) const {
  std::lock_guard save_lock(save_mutex_);
  const std::string text = snapshot().dump();
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("snapshot: cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void SessionStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("snapshot: corrupt file: ") + e.what());
  }
  restore(doc);
}

}  // namespace gcs::service
