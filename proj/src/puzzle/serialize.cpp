#include <cmath>

#include "gcs/puzzle_json.hpp"

namespace gcs::puzzle {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& why) { throw GameError(ErrorKind::ParseError, why); }

json cells_value(const CMatrix& m) {
  json cells = json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) cells.push_back({m.data()[i].real(), m.data()[i].imag()});
  return cells;
}

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) parse_fail(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) parse_fail(std::string(what) + " must be finite");
  return x;
}

int integer(const json& v, const char* what) {
  if (!v.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return v.get<int>();
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

CMatrix cells_from(const json& v, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != rows * cols) {
    parse_fail(std::string(what) + " has the wrong number of entries");
  }
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows * cols; ++i) {
    const auto& pair = v[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2) parse_fail(std::string(what) + " entries must be [re, im]");
    m.data()[i] = Complex(finite_number(pair[0], what), finite_number(pair[1], what));
  }
  return m;
}

}  // namespace

json to_json_value(const Board& board) {
  json doc;
  doc["mode"] = mode_name(board.mode);
  doc["rows"] = board.rows;
  doc["cols"] = board.cols;
  doc["tolerance"] = board.tolerance;
  doc["nyquistSign"] = board.conv.nyquist_sign;
  doc["cells"] = cells_value(board.cells);
  doc["goal"] = cells_value(board.goal);
  doc["hole"] = board.hole ? json::array({board.hole->row, board.hole->col}) : json(nullptr);
  return doc;
}

Board board_from_value(const json& doc) {
  Board board;
  const auto& mode = field(doc, "mode");
  if (!mode.is_string()) parse_fail("mode must be a string");
  const auto parsed = parse_mode(mode.get<std::string>());
  if (!parsed) parse_fail("unknown mode '" + mode.get<std::string>() + "'");
  board.mode = *parsed;
  board.rows = integer(field(doc, "rows"), "rows");
  board.cols = integer(field(doc, "cols"), "cols");
  if (board.rows < 2 || board.cols < 2) parse_fail("board dimensions must be >= 2");
  board.tolerance = finite_number(field(doc, "tolerance"), "tolerance");
  const int sign = integer(field(doc, "nyquistSign"), "nyquistSign");
  if (sign != 1 && sign != -1) parse_fail("nyquistSign must be 1 or -1");
  board.conv.nyquist_sign = sign;

  Eigen::Index rows = board.rows;
  Eigen::Index cols = board.cols;
  if (board.mode == GameMode::ImageTiles) {
    const auto& cells = field(doc, "cells");
    if (!cells.is_array() || board.rows != board.cols) parse_fail("image board must be square");
    const auto per_tile = static_cast<double>(cells.size()) / (board.rows * board.cols);
    const auto b = static_cast<Eigen::Index>(std::llround(std::sqrt(per_tile)));
    if (b < 1 || b * b * board.rows * board.cols != static_cast<Eigen::Index>(cells.size())) {
      parse_fail("image board pixels do not split into square tiles");
    }
    rows = cols = b * board.rows;
  }
  board.cells = cells_from(field(doc, "cells"), rows, cols, "cells");
  board.goal = cells_from(field(doc, "goal"), rows, cols, "goal");

  const auto& hole = field(doc, "hole");
  if (!hole.is_null()) {
    if (!hole.is_array() || hole.size() != 2) parse_fail("hole must be [r, c] or null");
    board.hole = Position{integer(hole[0], "hole"), integer(hole[1], "hole")};
  }
  try {
    check_invariants(board);
  } catch (const GameError& e) {
    parse_fail(e.what());
  }
  return board;
}

json to_json_value(const Move& move) {
  if (const auto* tap = std::get_if<Tap>(&move)) return {{"tap", {tap->row, tap->col}}};
  const auto& shift = std::get<LineShift>(move);
  return {{"axis", shift.axis == Axis::Row ? "row" : "col"}, {"index", shift.index}, {"amount", shift.amount}};
}

Move move_from_value(const json& doc) {
  if (!doc.is_object()) parse_fail("move must be an object");
  if (doc.contains("tap")) {
    const auto& tap = doc.at("tap");
    if (!tap.is_array() || tap.size() != 2) parse_fail("tap must be [r, c]");
    return Tap{integer(tap[0], "tap"), integer(tap[1], "tap")};
  }
  const auto& axis = field(doc, "axis");
  if (axis != "row" && axis != "col") parse_fail("axis must be \"row\" or \"col\"");
  return LineShift{axis == "row" ? Axis::Row : Axis::Col, integer(field(doc, "index"), "index"),
                   finite_number(field(doc, "amount"), "amount")};
}

json to_json_value(const RenderGrid& grid) {
  json doc;
  doc["rows"] = grid.rows;
  doc["cols"] = grid.cols;
  doc["intensity"] = grid.intensity;
  doc["angle"] = grid.angle ? json(*grid.angle) : json(nullptr);
  return doc;
}

json to_json_value(const Session& session) {
  json history = json::array();
  for (const auto& move : session.history) history.push_back(to_json_value(move));
  return {{"id", session.id},
          {"seed", session.seed},
          {"board", to_json_value(session.board)},
          {"initial", to_json_value(session.initial)},
          {"history", std::move(history)}};
}

Session session_from_value(const json& doc) {
  Session session;
  const auto& id = field(doc, "id");
  if (!id.is_string()) parse_fail("id must be a string");
  session.id = id.get<std::string>();
  const auto& seed = field(doc, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    parse_fail("seed must be a non-negative integer");
  }
  session.seed = seed.get<std::uint64_t>();
  session.board = board_from_value(field(doc, "board"));
  session.initial = board_from_value(field(doc, "initial"));
  const auto& history = field(doc, "history");
  if (!history.is_array()) parse_fail("history must be an array");
  for (const auto& move : history) session.history.push_back(move_from_value(move));
  return session;
}

json to_json_value(const TileImage& image) {
  return {{"tiles", image.tiles()}, {"tileSize", image.tile_size()}, {"pixels", cells_value(image.pixels())}};
}

TileImage tile_image_from_value(const json& doc) {
  const int tiles = integer(field(doc, "tiles"), "tiles");
  const int tile_size = integer(field(doc, "tileSize"), "tileSize");
  if (tiles < 1 || tile_size < 1 || tiles * tile_size > 1 << 14) parse_fail("image sidecar has bad dimensions");
  const Eigen::Index side = static_cast<Eigen::Index>(tiles) * tile_size;
  return TileImage(tiles, tile_size, cells_from(field(doc, "pixels"), side, side, "pixels"));
}

std::string board_to_json(const Board& board) { return to_json_value(board).dump(); }

Board board_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed board JSON: ") + e.what());
  }
  return board_from_value(doc);
}

std::string session_to_json(const Session& session) { return to_json_value(session).dump(2); }

Session session_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("malformed session JSON: ") + e.what());
  }
  return session_from_value(doc);
}

}  // namespace gcs::puzzle
