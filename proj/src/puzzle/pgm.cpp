#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "gcs/puzzle.hpp"

namespace gcs::puzzle {
namespace {

[[noreturn]] void image_fail(const std::string& why) { throw GameError(ErrorKind::ImageFormatError, why); }

class PgmReader {
 public:
  explicit PgmReader(std::string_view bytes) : bytes_(bytes) {}

  // Header tokens are whitespace separated; '#' starts a comment to end of line.
  int next_int() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) image_fail("PGM: expected an integer");
    return std::stoi(std::string(bytes_.substr(start, pos_ - start)));
  }

  std::string_view magic() {
    if (bytes_.size() < 2) image_fail("PGM: file too short");
    pos_ = 2;
    return bytes_.substr(0, 2);
  }

  // Exactly one whitespace byte separates maxval from binary data.
  std::string_view binary_payload() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      image_fail("PGM: missing separator before raster");
    }
    return bytes_.substr(pos_ + 1);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

TileImage load_image(std::string_view pgm_bytes, int tiles) {
  if (tiles < 1) image_fail("tile count must be positive");
  PgmReader reader(pgm_bytes);
  const auto magic = reader.magic();
  if (magic != "P2" && magic != "P5") image_fail("PGM: unsupported magic '" + std::string(magic) + "'");
  const int width = reader.next_int();
  const int height = reader.next_int();
  const int maxval = reader.next_int();
  if (width < 1 || height < 1) image_fail("PGM: empty image");
  if (maxval != 255) image_fail("PGM: maxval must be 255");
  if (width != height) image_fail("PGM: image must be square");
  if (width % tiles != 0) {
    image_fail("PGM: side " + std::to_string(width) + " is not divisible by " + std::to_string(tiles));
  }

  CMatrix pixels(height, width);
  if (magic == "P5") {
    const auto raster = reader.binary_payload();
    if (raster.size() < static_cast<std::size_t>(width) * height) image_fail("PGM: truncated raster");
    for (int i = 0; i < width * height; ++i) {
      pixels.data()[i] = static_cast<double>(static_cast<unsigned char>(raster[static_cast<std::size_t>(i)]));
    }
  } else {
    for (int i = 0; i < width * height; ++i) {
      const int v = reader.next_int();
      if (v > maxval) image_fail("PGM: sample exceeds maxval");
      pixels.data()[i] = static_cast<double>(v);
    }
  }
  return TileImage(tiles, width / tiles, std::move(pixels));
}

std::string write_pgm(const CMatrix& pixels) {
  std::string out = "P5\n" + std::to_string(pixels.cols()) + " " + std::to_string(pixels.rows()) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(pixels.size()));
  for (Eigen::Index i = 0; i < pixels.size(); ++i) {
    const double v = std::clamp(std::round(pixels.data()[i].real()), 0.0, 255.0);
    out.push_back(static_cast<char>(static_cast<unsigned char>(v)));
  }
  return out;
}

}  // namespace gcs::puzzle
