#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "gcs/matrix.hpp"

namespace gcs {

Program program_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("program: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("program: expected a JSON array");

  Program executed;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("kind") || !item.contains("params")) {
      throw std::invalid_argument("program: each op needs 'kind' and 'params'");
    }
    const auto& kind = item.at("kind");
    LineOp op;
    if (kind == "row") {
      op.kind = LineKind::Row;
    } else if (kind == "col") {
      op.kind = LineKind::Col;
    } else {
      throw std::invalid_argument("program: kind must be \"row\" or \"col\"");
    }
    const auto& params = item.at("params");
    if (!params.is_array()) throw std::invalid_argument("program: params must be an array");
    for (const auto& p : params) {
      if (!p.is_number()) throw std::invalid_argument("program: params must be numbers");
      const double value = p.get<double>();
      if (!std::isfinite(value)) throw std::invalid_argument("program: params must be finite");
      op.params.push_back(value);
    }
    executed.push_back(std::move(op));
  }
  // File order is execution order; Program is written order.
  return Program(executed.rbegin(), executed.rend());
}

std::string program_to_json(const Program& ops) {
  nlohmann::json doc = nlohmann::json::array();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    doc.push_back({{"kind", it->kind == LineKind::Row ? "row" : "col"}, {"params", it->params}});
  }
  return doc.dump();
}

}  // namespace gcs
