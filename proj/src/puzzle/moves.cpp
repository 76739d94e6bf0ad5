#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

#include "gcs/puzzle.hpp"

namespace gcs::puzzle {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

template <class T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw GameError(ErrorKind::ParseError, "bad move spec '" + std::string(spec) + "'");
  }
  return value;
}

std::string shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

Board apply_tap(const Board& board, const Tap& tap) {
  if (board.mode != GameMode::ClassicHole) {
    throw GameError(ErrorKind::ModeMismatch, "tap moves only apply to classic boards");
  }
  if (tap.row < 0 || tap.row >= board.rows || tap.col < 0 || tap.col >= board.cols) {
    throw GameError(ErrorKind::InvalidIndex, "tap outside the board");
  }
  const Position hole = *board.hole;
  if (std::abs(tap.row - hole.row) + std::abs(tap.col - hole.col) != 1) {
    throw GameError(ErrorKind::NoOpIllegalMove, "tapped tile is not next to the hole");
  }
  Board next = board;
  std::swap(next.cells(tap.row, tap.col), next.cells(hole.row, hole.col));
  next.hole = Position{tap.row, tap.col};
  return next;
}

Board apply_line_shift(const Board& board, const LineShift& shift) {
  if (board.mode == GameMode::ClassicHole) {
    throw GameError(ErrorKind::ModeMismatch, "classic boards only accept taps");
  }
  const int limit = shift.axis == Axis::Row ? board.rows : board.cols;
  if (shift.index < 0 || shift.index >= limit) {
    throw GameError(ErrorKind::InvalidIndex, "line index " + std::to_string(shift.index) + " out of range");
  }
  if (!std::isfinite(shift.amount) || std::abs(shift.amount) > std::max(board.rows, board.cols)) {
    throw GameError(ErrorKind::InvalidAmount, "shift amount must be finite and within the board size");
  }

  Board next = board;
  switch (board.mode) {
    case GameMode::IntegerShift: {
      if (shift.amount != std::round(shift.amount)) {
        throw GameError(ErrorKind::InvalidAmount, "integer-shift boards need whole amounts");
      }
      const auto k = static_cast<std::int64_t>(std::llround(shift.amount));
      if (shift.axis == Axis::Row) {
        const CVector line = board.cells.row(shift.index).transpose();
        next.cells.row(shift.index) = integer_cshift(line, k).transpose();
      } else {
        next.cells.col(shift.index) = integer_cshift(board.cells.col(shift.index), k);
      }
      break;
    }
    case GameMode::ContinuousGcs: {
      if (shift.axis == Axis::Row) {
        const CVector line = board.cells.row(shift.index).transpose();
        next.cells.row(shift.index) = gcs(line, shift.amount, board.conv).transpose();
      } else {
        next.cells.col(shift.index) = gcs(board.cells.col(shift.index), shift.amount, board.conv);
      }
      break;
    }
    case GameMode::ImageTiles: {
      const TileImage image(board.rows, board.tile_size(), board.cells);
      const TileImage moved = shift.axis == Axis::Row
                                  ? block_row_shift(image, shift.index, shift.amount, board.conv)
                                  : block_col_shift(image, shift.index, shift.amount, board.conv);
      next.cells = moved.pixels();
      break;
    }
    case GameMode::ClassicHole:
      break;
  }
  return next;
}

class ScrambleRng {
 public:
  explicit ScrambleRng(std::uint64_t seed) : engine_(seed) {}

  // Explicit mappings keep sequences identical across standard libraries.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

Move random_move(const Board& board, ScrambleRng& rng, const std::optional<Position>& previous_hole) {
  if (board.mode == GameMode::ClassicHole) {
    const Position hole = *board.hole;
    std::vector<Tap> options;
    constexpr int dr[] = {-1, 1, 0, 0};
    constexpr int dc[] = {0, 0, -1, 1};
    for (int d = 0; d < 4; ++d) {
      const Tap tap{hole.row + dr[d], hole.col + dc[d]};
      if (tap.row < 0 || tap.row >= board.rows || tap.col < 0 || tap.col >= board.cols) continue;
      if (previous_hole && previous_hole->row == tap.row && previous_hole->col == tap.col) continue;
      options.push_back(tap);
    }
    return options[static_cast<std::size_t>(rng.below(static_cast<int>(options.size())))];
  }

  const Axis axis = rng.below(2) == 0 ? Axis::Row : Axis::Col;
  const int index = rng.below(axis == Axis::Row ? board.rows : board.cols);
  const int line_length = axis == Axis::Row ? board.cols : board.rows;
  if (board.mode == GameMode::IntegerShift) {
    return LineShift{axis, index, static_cast<double>(1 + rng.below(line_length - 1))};
  }
  const double half = 0.5 * line_length;
  double amount = 0.0;
  do {
    amount = (2.0 * rng.unit() - 1.0) * half;
  } while (std::abs(amount) < 0.1);
  return LineShift{axis, index, amount};
}

}  // namespace

Move parse_move_spec(std::string_view spec) {
  const auto first = spec.find(':');
  if (first == std::string_view::npos) {
    throw GameError(ErrorKind::ParseError, "bad move spec '" + std::string(spec) + "'");
  }
  const auto head = spec.substr(0, first);
  const auto rest = spec.substr(first + 1);
  if (head == "tap") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw GameError(ErrorKind::ParseError, "tap spec needs 'tap:<r>,<c>'");
    }
    return Tap{parse_number<int>(rest.substr(0, comma), spec), parse_number<int>(rest.substr(comma + 1), spec)};
  }
  if (head != "row" && head != "col") {
    throw GameError(ErrorKind::ParseError, "move kind must be row, col or tap");
  }
  const auto second = rest.find(':');
  if (second == std::string_view::npos) {
    throw GameError(ErrorKind::ParseError, "line spec needs '<row|col>:<index>:<amount>'");
  }
  return LineShift{head == "row" ? Axis::Row : Axis::Col, parse_number<int>(rest.substr(0, second), spec),
                   parse_number<double>(rest.substr(second + 1), spec)};
}

std::string format_move(const Move& move) {
  return std::visit(Overloaded{
                        [](const Tap& t) { return "tap:" + std::to_string(t.row) + "," + std::to_string(t.col); },
                        [](const LineShift& s) {
                          return std::string(s.axis == Axis::Row ? "row:" : "col:") + std::to_string(s.index) +
                                 ":" + shortest(s.amount);
                        },
                    },
                    move);
}

Board apply_move(const Board& board, const Move& move) {
  return std::visit(Overloaded{
                        [&](const Tap& t) { return apply_tap(board, t); },
                        [&](const LineShift& s) { return apply_line_shift(board, s); },
                    },
                    move);
}

Move inverse_move(const Move& move, const Board& before) {
  if (const auto* shift = std::get_if<LineShift>(&move)) {
    return LineShift{shift->axis, shift->index, -shift->amount};
  }
  if (!before.hole) throw GameError(ErrorKind::ModeMismatch, "tap inverse needs a classic board");
  return Tap{before.hole->row, before.hole->col};
}

bool is_solved(const Board& board) {
  switch (board.mode) {
    case GameMode::ContinuousGcs:
      for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
        if (std::abs(std::abs(board.cells.data()[i]) - 1.0) > board.tolerance) return false;
      }
      return true;
    case GameMode::ImageTiles: {
      const double limit = 255.0 * board.tolerance;
      for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
        if (std::abs(board.cells.data()[i] - board.goal.data()[i]) > limit) return false;
      }
      return true;
    }
    default:
      return board.cells == board.goal;
  }
}

Scramble scramble(const Board& board, std::uint64_t seed, int num_moves) {
  if (num_moves < 1) throw GameError(ErrorKind::InvalidArgument, "scramble needs at least one move");
  ScrambleRng rng(seed);
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Scramble result{board, {}};
    result.history.reserve(static_cast<std::size_t>(num_moves));
    std::optional<Position> previous_hole;
    for (int i = 0; i < num_moves; ++i) {
      const Move move = random_move(result.board, rng, previous_hole);
      previous_hole = result.board.hole;
      result.board = apply_move(result.board, move);
      result.history.push_back(move);
    }
    if (!is_solved(result.board)) return result;
  }
  throw GameError(ErrorKind::InvalidArgument, "could not scramble away from the goal");
}

std::vector<Move> invert_history(const Board& start, std::span<const Move> history) {
  std::vector<Move> inverse;
  inverse.reserve(history.size());
  Board state = start;
  for (const auto& move : history) {
    inverse.push_back(inverse_move(move, state));
    state = apply_move(state, move);
  }
  std::reverse(inverse.begin(), inverse.end());
  return inverse;
}

Board replay(const Board& initial, std::span<const Move> history) {
  Board state = initial;
  for (const auto& move : history) state = apply_move(state, move);
  return state;
}

}  // namespace gcs::puzzle
