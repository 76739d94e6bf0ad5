#pragma once

// Per-line GCS operators on matrices.
//
// row_shift_op applies gcs to every row with its own amount (positive moves
// entries toward larger column index); col_shift_op does the same for columns
// (positive moves entries toward larger row index). A Program lists ops in
// written, right-associative order: the op closest to the matrix, i.e. the
// last element, runs first.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcs/core.hpp"

namespace gcs {

enum class LineKind { Row, Col };

struct LineOp {
  LineKind kind = LineKind::Row;
  std::vector<double> params;

  friend bool operator==(const LineOp&, const LineOp&) = default;
};

/// Ops in written order; the last element is applied first.
using Program = std::vector<LineOp>;

CMatrix row_shift_op(std::span<const double> params, const CMatrix& m, FrequencyConvention conv = {});
CMatrix col_shift_op(std::span<const double> params, const CMatrix& m, FrequencyConvention conv = {});

/// Validates every stage against the matrix shape before running anything.
CMatrix apply_program(const Program& ops, const CMatrix& m, FrequencyConvention conv = {});

/// Reversed order with every parameter negated.
Program invert_program(const Program& ops);

/// Program files are JSON arrays in execution order:
///   [{"kind": "row", "params": [...]}, {"kind": "col", "params": [...]}]
/// Throws std::invalid_argument on malformed input.
Program program_from_json(std::string_view text);
std::string program_to_json(const Program& ops);

/// An image split into tiles x tiles square tiles of tile_size pixels.
class TileImage {
 public:
  TileImage(int tiles, int tile_size, CMatrix pixels);

  int tiles() const { return tiles_; }
  int tile_size() const { return tile_size_; }
  int side() const { return tiles_ * tile_size_; }
  const CMatrix& pixels() const { return pixels_; }

 private:
  int tiles_;
  int tile_size_;
  CMatrix pixels_;
};

/// Moves whole tiles along tile-row `band`: for each pixel row in the band and
/// each in-tile offset o, the samples at columns o, b+o, ... are shifted by k.
TileImage block_row_shift(const TileImage& img, int band, double k, FrequencyConvention conv = {});

/// Column analogue of block_row_shift along tile-column `band`.
TileImage block_col_shift(const TileImage& img, int band, double k, FrequencyConvention conv = {});

/// Block program on tile bands: params carry one amount per band.
TileImage apply_block_program(const Program& ops, const TileImage& img, FrequencyConvention conv = {});

}  // namespace gcs
