#include <cmath>
#include <stdexcept>
#include <string>

#include "gcs/matrix.hpp"

namespace gcs {

TileImage::TileImage(int tiles, int tile_size, CMatrix pixels)
    : tiles_(tiles), tile_size_(tile_size), pixels_(std::move(pixels)) {
  if (tiles_ < 1 || tile_size_ < 1) throw std::invalid_argument("tile image: sizes must be positive");
  if (pixels_.rows() != side() || pixels_.cols() != side()) {
    throw std::invalid_argument("tile image: pixel matrix must be " + std::to_string(side()) + "x" +
                                std::to_string(side()));
  }
}

namespace {

void check_band(const TileImage& img, int band, double k) {
  if (!std::isfinite(k)) throw std::invalid_argument("block shift: amount must be finite");
  if (band < 0 || band >= img.tiles()) {
    throw std::out_of_range("block shift: band " + std::to_string(band) + " outside [0, " +
                            std::to_string(img.tiles()) + ")");
  }
}

// Whole-number amounts permute tiles exactly instead of going through the FFT.
CVector shift_strided(const CVector& v, double k, FrequencyConvention conv) {
  if (k == std::round(k) && std::abs(k) < 1e15) return integer_cshift(v, static_cast<std::int64_t>(k));
  return gcs(v, k, conv);
}

}  // namespace

TileImage block_row_shift(const TileImage& img, int band, double k, FrequencyConvention conv) {
  check_band(img, band, k);
  const int t = img.tiles();
  const int b = img.tile_size();
  CMatrix pixels = img.pixels();
  CVector strided(t);
  for (int r = band * b; r < (band + 1) * b; ++r) {
    for (int o = 0; o < b; ++o) {
      for (int j = 0; j < t; ++j) strided[j] = pixels(r, j * b + o);
      const CVector shifted = shift_strided(strided, k, conv);
      for (int j = 0; j < t; ++j) pixels(r, j * b + o) = shifted[j];
    }
  }
  return TileImage(t, b, std::move(pixels));
}

TileImage block_col_shift(const TileImage& img, int band, double k, FrequencyConvention conv) {
  check_band(img, band, k);
  const int t = img.tiles();
  const int b = img.tile_size();
  CMatrix pixels = img.pixels();
  CVector strided(t);
  for (int c = band * b; c < (band + 1) * b; ++c) {
    for (int o = 0; o < b; ++o) {
      for (int i = 0; i < t; ++i) strided[i] = pixels(i * b + o, c);
      const CVector shifted = shift_strided(strided, k, conv);
      for (int i = 0; i < t; ++i) pixels(i * b + o, c) = shifted[i];
    }
  }
  return TileImage(t, b, std::move(pixels));
}

TileImage apply_block_program(const Program& ops, const TileImage& img, FrequencyConvention conv) {
  for (const auto& op : ops) {
    if (static_cast<int>(op.params.size()) != img.tiles()) {
      throw std::invalid_argument("block program: each op needs one amount per tile band");
    }
  }
  TileImage state = img;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    for (int band = 0; band < img.tiles(); ++band) {
      const double k = it->params[static_cast<std::size_t>(band)];
      if (k == 0.0) continue;
      state = it->kind == LineKind::Row ? block_row_shift(state, band, k, conv)
                                        : block_col_shift(state, band, k, conv);
    }
  }
  return state;
}

}  // namespace gcs
