#pragma once

// nlohmann::json views of puzzle values. Board schema:
//   {"mode": "gcs", "rows": 3, "cols": 3, "tolerance": 0.05, "nyquistSign": -1,
//    "cells": [[re, im], ...], "goal": [[re, im], ...], "hole": [r, c] | null}
// Cells are row-major; ImageTiles boards store the full pixel matrix, whose
// side must be a multiple of rows.

#include <json.hpp>

#include "gcs/puzzle.hpp"

namespace gcs::puzzle {

nlohmann::json to_json_value(const Board& board);
nlohmann::json to_json_value(const Move& move);
nlohmann::json to_json_value(const RenderGrid& grid);
nlohmann::json to_json_value(const Session& session);

// All parsers throw GameError(ParseError).
Board board_from_value(const nlohmann::json& doc);
Move move_from_value(const nlohmann::json& doc);
Session session_from_value(const nlohmann::json& doc);

/// Full-precision image sidecar: {"tiles": t, "tileSize": b, "pixels": [[re, im], ...]}.
nlohmann::json to_json_value(const TileImage& image);
TileImage tile_image_from_value(const nlohmann::json& doc);

}  // namespace gcs::puzzle
