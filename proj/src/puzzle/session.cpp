#include <cstdio>

#include "gcs/puzzle.hpp"

namespace gcs::puzzle {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string make_session_id(std::uint64_t hi, std::uint64_t lo) {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return std::string(buf, 32);
}

std::string session_id_from_seed(std::uint64_t seed) {
  std::uint64_t state = seed;
  const auto hi = splitmix64(state);
  const auto lo = splitmix64(state);
  return make_session_id(hi, lo);
}

Session start_session(std::string id, const Board& initial, std::uint64_t seed) {
  return Session{std::move(id), initial, initial, {}, seed};
}

Session play(const Session& session, const Move& move) {
  Session next = session;
  next.board = apply_move(session.board, move);
  next.history.push_back(move);
  return next;
}

Session undo(const Session& session) {
  if (session.history.empty()) throw GameError(ErrorKind::NothingToUndo, "no moves to undo");
  Session next = session;
  const Move last = next.history.back();
  next.history.pop_back();
  if (std::holds_alternative<Tap>(last)) {
    // Discrete boards: replay is exact and recovers the pre-move hole.
    next.board = replay(next.initial, next.history);
  } else {
    next.board = apply_move(session.board, inverse_move(last, session.board));
  }
  return next;
}

}  // namespace gcs::puzzle
