#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gcs/puzzle.hpp"

namespace gcs::puzzle {

std::string_view mode_name(GameMode mode) {
  switch (mode) {
    case GameMode::ClassicHole: return "classic";
    case GameMode::IntegerShift: return "shift";
    case GameMode::ContinuousGcs: return "gcs";
    case GameMode::ImageTiles: return "image";
  }
  return "unknown";
}

std::optional<GameMode> parse_mode(std::string_view name) {
  for (auto mode : {GameMode::ClassicHole, GameMode::IntegerShift, GameMode::ContinuousGcs,
                    GameMode::ImageTiles}) {
    if (mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoOpIllegalMove: return "NoOpIllegalMove";
    case ErrorKind::InvalidAmount: return "InvalidAmount";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::NothingToUndo: return "NothingToUndo";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ImageFormatError: return "ImageFormatError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double default_tolerance(GameMode mode) {
  switch (mode) {
    case GameMode::ContinuousGcs: return kContinuousTolerance;
    case GameMode::ImageTiles: return kImageTolerance;
    default: return 0.0;
  }
}

namespace {

double resolve_tolerance(GameMode mode, std::optional<double> tolerance) {
  const double tol = tolerance.value_or(default_tolerance(mode));
  if (!std::isfinite(tol) || tol < 0.0) {
    throw GameError(ErrorKind::InvalidArgument, "tolerance must be a finite value >= 0");
  }
  return tol;
}

}  // namespace

Board new_board(GameMode mode, int rows, int cols, std::optional<double> tolerance,
                FrequencyConvention conv) {
  if (rows < 2 || cols < 2) throw GameError(ErrorKind::InvalidArgument, "board dimensions must be >= 2");
  if (mode == GameMode::ImageTiles) {
    if (rows != cols) throw GameError(ErrorKind::InvalidArgument, "image boards must be square");
    return new_image_board(test_card(rows, 16), tolerance, conv);
  }

  Board board;
  board.mode = mode;
  board.rows = rows;
  board.cols = cols;
  board.tolerance = resolve_tolerance(mode, tolerance);
  board.conv = conv;
  board.goal = CMatrix(rows, cols);
  switch (mode) {
    case GameMode::ClassicHole:
      for (int i = 0; i < rows * cols; ++i) board.goal(i / cols, i % cols) = (i + 1) % (rows * cols);
      board.hole = Position{rows - 1, cols - 1};
      break;
    case GameMode::IntegerShift:
      for (int i = 0; i < rows * cols; ++i) board.goal(i / cols, i % cols) = i + 1;
      break;
    case GameMode::ContinuousGcs:
      board.goal.setConstant(1.0);
      for (int i = 0; i < rows; ++i) board.goal(i, i % cols) = -1.0;
      break;
    case GameMode::ImageTiles:
      break;
  }
  board.cells = board.goal;
  return board;
}

Board new_image_board(const TileImage& image, std::optional<double> tolerance, FrequencyConvention conv) {
  if (image.tiles() < 2) throw GameError(ErrorKind::InvalidArgument, "image boards need >= 2 tiles per side");
  Board board;
  board.mode = GameMode::ImageTiles;
  board.rows = image.tiles();
  board.cols = image.tiles();
  board.tolerance = resolve_tolerance(GameMode::ImageTiles, tolerance);
  board.conv = conv;
  board.goal = image.pixels();
  board.cells = image.pixels();
  return board;
}

TileImage test_card(int tiles, int tile_size) {
  const int side = tiles * tile_size;
  CMatrix pixels(side, side);
  const double span = std::max(1, side - 1);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      // Diagonal gradient with a ring so every tile looks different.
      const double gradient = 0.5 * (x + y) / span;
      const double dx = x - 0.5 * (side - 1);
      const double dy = y - 0.5 * (side - 1);
      const double ring = 0.5 + 0.5 * std::cos(2.0 * std::numbers::pi * std::hypot(dx, dy) / (0.45 * side));
      pixels(y, x) = std::round(255.0 * (0.6 * gradient + 0.4 * ring));
    }
  }
  return TileImage(tiles, tile_size, std::move(pixels));
}

void check_invariants(const Board& board) {
  auto fail = [](const std::string& why) { throw GameError(ErrorKind::InvalidArgument, why); };
  if (board.rows < 2 || board.cols < 2) fail("board dimensions must be >= 2");
  if (board.cells.rows() != board.goal.rows() || board.cells.cols() != board.goal.cols()) {
    fail("cells and goal differ in shape");
  }
  if (!std::isfinite(board.tolerance) || board.tolerance < 0.0) fail("tolerance must be >= 0");
  for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
    const auto c = board.cells.data()[i];
    const auto g = board.goal.data()[i];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !std::isfinite(g.real()) ||
        !std::isfinite(g.imag())) {
      fail("board holds non-finite values");
    }
  }

  const int n = board.rows * board.cols;
  if (board.mode == GameMode::ImageTiles) {
    if (board.hole) fail("only classic boards have a hole");
    if (board.rows != board.cols || board.cells.rows() != board.cells.cols() ||
        board.cells.rows() % board.rows != 0 || board.cells.rows() == 0) {
      fail("image board pixels must split evenly into square tiles");
    }
    return;
  }
  if (board.cells.rows() != board.rows || board.cells.cols() != board.cols) fail("cells shape mismatch");
  if (board.mode == GameMode::ContinuousGcs) {
    if (board.hole) fail("only classic boards have a hole");
    return;
  }

  const int first = board.mode == GameMode::ClassicHole ? 0 : 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
    const auto c = board.cells.data()[i];
    const double v = c.real();
    if (c.imag() != 0.0 || v != std::round(v) || v < first || v >= first + n || seen[static_cast<std::size_t>(v - first)]) {
      fail("discrete board cells must be a permutation");
    }
    seen[static_cast<std::size_t>(v - first)] = true;
  }
  if (board.mode == GameMode::ClassicHole) {
    if (!board.hole) fail("classic board needs a hole");
    const auto [r, c] = *board.hole;
    if (r < 0 || r >= board.rows || c < 0 || c >= board.cols || board.cells(r, c) != Complex(0.0)) {
      fail("hole position does not match the empty cell");
    }
  } else if (board.hole) {
    fail("only classic boards have a hole");
  }
}

}  // namespace gcs::puzzle
