#include <algorithm>
#include <cmath>
#include <numbers>

#include "gcs/puzzle.hpp"

namespace gcs::puzzle {

double reference_magnitude(const Board& board) {
  if (board.mode == GameMode::ImageTiles) return 255.0;
  double peak = 0.0;
  for (Eigen::Index i = 0; i < board.goal.size(); ++i) peak = std::max(peak, std::abs(board.goal.data()[i]));
  return peak > 0.0 ? 2.0 * peak : 1.0;
}

RenderGrid render_grey(const Board& board) {
  RenderGrid grid;
  grid.rows = static_cast<int>(board.cells.rows());
  grid.cols = static_cast<int>(board.cells.cols());
  const double ref = reference_magnitude(board);
  grid.intensity.reserve(static_cast<std::size_t>(board.cells.size()));
  for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
    grid.intensity.push_back(std::clamp(std::abs(board.cells.data()[i]) / ref, 0.0, 1.0));
  }
  return grid;
}

RenderGrid render_complex(const Board& board) {
  RenderGrid grid = render_grey(board);
  std::vector<double> angle;
  angle.reserve(grid.intensity.size());
  for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
    const Complex c = board.cells.data()[i];
    double a = std::abs(c) < 1e-12 ? 0.0 : std::arg(c);
    if (a <= -std::numbers::pi) a = std::numbers::pi;
    angle.push_back(a);
  }
  grid.angle = std::move(angle);
  return grid;
}

RenderGrid render(const Board& board) {
  for (Eigen::Index i = 0; i < board.cells.size(); ++i) {
    if (std::abs(board.cells.data()[i].imag()) > kRealResidue) return render_complex(board);
  }
  return render_grey(board);
}

}  // namespace gcs::puzzle
