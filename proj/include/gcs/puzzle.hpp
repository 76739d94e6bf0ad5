#pragma once

// Sliding-tile game state machine built on the GCS operators.
//
// Four modes share one Board value:
//   ClassicHole    tiles 1..N-1 plus a hole (0); a tap slides one tile into the hole
//   IntegerShift   tiles 1..N; a swipe rotates a whole row/column by an integer
//   ContinuousGcs  +/-1 goal; swipes apply real-valued GCS shifts
//   ImageTiles     a tiled grayscale image; swipes apply block GCS shifts
//
// Boards and sessions are values: apply_move/undo return new ones.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcs/core.hpp"
#include "gcs/matrix.hpp"

namespace gcs::puzzle {

enum class GameMode { ClassicHole, IntegerShift, ContinuousGcs, ImageTiles };

/// "classic", "shift", "gcs", "image".
std::string_view mode_name(GameMode mode);
std::optional<GameMode> parse_mode(std::string_view name);

enum class ErrorKind {
  NoOpIllegalMove,
  InvalidAmount,
  InvalidIndex,
  NothingToUndo,
  ModeMismatch,
  ParseError,
  ImageFormatError,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

class GameError : public std::runtime_error {
 public:
  GameError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Axis { Row, Col };

struct Position {
  int row = 0;
  int col = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct Tap {
  int row = 0;
  int col = 0;
  friend bool operator==(const Tap&, const Tap&) = default;
};

struct LineShift {
  Axis axis = Axis::Row;
  int index = 0;
  double amount = 0.0;
  friend bool operator==(const LineShift&, const LineShift&) = default;
};

using Move = std::variant<Tap, LineShift>;

/// Parses `row:<index>:<amount>`, `col:<index>:<amount>` or `tap:<r>,<c>`.
Move parse_move_spec(std::string_view spec);
std::string format_move(const Move& move);

inline constexpr double kContinuousTolerance = 0.05;
inline constexpr double kImageTolerance = 0.01;

struct Board {
  GameMode mode = GameMode::ContinuousGcs;
  int rows = 0;  // tile rows
  int cols = 0;  // tile columns
  CMatrix cells;  // rows x cols, or pixel matrix for ImageTiles
  CMatrix goal;
  double tolerance = 0.0;
  std::optional<Position> hole;  // ClassicHole only
  FrequencyConvention conv;

  /// Pixels per tile side for ImageTiles; 1 for every other mode.
  int tile_size() const { return mode == GameMode::ImageTiles ? static_cast<int>(cells.rows()) / rows : 1; }
};

double default_tolerance(GameMode mode);

/// Goal-state board. Throws GameError(InvalidArgument) for dimensions < 2,
/// negative tolerance, or ImageTiles without an image (use new_image_board).
Board new_board(GameMode mode, int rows, int cols, std::optional<double> tolerance = {},
                FrequencyConvention conv = {});

/// ImageTiles board whose goal is `image`.
Board new_image_board(const TileImage& image, std::optional<double> tolerance = {},
                      FrequencyConvention conv = {});

/// Built-in grayscale test card used when no image is supplied.
TileImage test_card(int tiles, int tile_size);

/// Throws GameError(InvalidArgument) if the board breaks its mode invariants.
void check_invariants(const Board& board);

Board apply_move(const Board& board, const Move& move);

/// The move that undoes `move` when applied to `after` (the board it produced).
/// For taps this needs the hole position from before the move.
Move inverse_move(const Move& move, const Board& before);

bool is_solved(const Board& board);

struct Scramble {
  Board board;
  std::vector<Move> history;
};

/// Deterministic in `seed`. Throws GameError(InvalidArgument) for num_moves < 1.
Scramble scramble(const Board& board, std::uint64_t seed, int num_moves);

/// The inverted history: applying it to the scrambled board returns to the goal.
std::vector<Move> invert_history(const Board& start, std::span<const Move> history);

Board replay(const Board& initial, std::span<const Move> history);

struct RenderGrid {
  int rows = 0;
  int cols = 0;
  std::vector<double> intensity;  // row-major, clamped to [0, 1]
  std::optional<std::vector<double>> angle;  // (-pi, pi]
};

/// Magnitude normalizer: 255 for ImageTiles, otherwise 2 * max|goal|.
double reference_magnitude(const Board& board);

RenderGrid render_grey(const Board& board);
RenderGrid render_complex(const Board& board);

/// render_complex when any cell carries an imaginary part, else render_grey.
RenderGrid render(const Board& board);

std::string board_to_json(const Board& board);
/// Throws GameError(ParseError).
Board board_from_json(std::string_view text);

/// Parses P2 or P5 graymaps with maxval 255. Throws GameError(ImageFormatError).
TileImage load_image(std::string_view pgm_bytes, int tiles);
/// Binary P5 with pixel values rounded and clamped to [0, 255].
std::string write_pgm(const CMatrix& pixels);

struct Session {
  std::string id;  // 32 lowercase hex chars
  Board board;
  Board initial;
  std::vector<Move> history;
  std::uint64_t seed = 0;
};

/// 128-bit id rendered as hex.
std::string make_session_id(std::uint64_t hi, std::uint64_t lo);

/// Id derived from the seed alone, so sessions built from a seed are reproducible.
std::string session_id_from_seed(std::uint64_t seed);

Session start_session(std::string id, const Board& initial, std::uint64_t seed);
Session play(const Session& session, const Move& move);
/// Throws GameError(NothingToUndo) on an empty history.
Session undo(const Session& session);

std::string session_to_json(const Session& session);
Session session_from_json(std::string_view text);

}  // namespace gcs::puzzle
