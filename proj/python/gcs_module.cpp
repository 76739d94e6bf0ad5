// Python bindings: numeric operators on numpy arrays, the puzzle engine, and
// the JSON game service. JSON crosses the boundary as text; the package
// __init__ turns it into dicts.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/stl.h>

#include "gcs/checks.hpp"
#include "gcs/core.hpp"
#include "gcs/matrix.hpp"
#include "gcs/puzzle.hpp"
#include "gcs/puzzle_json.hpp"
#include "gcs/service.hpp"

namespace py = pybind11;
using namespace gcs;

namespace {

FrequencyConvention conv_of(int nyquist_sign) {
  if (nyquist_sign != 1 && nyquist_sign != -1) throw std::invalid_argument("nyquist_sign must be +1 or -1");
  return FrequencyConvention{nyquist_sign};
}

using PyProgram = std::vector<std::pair<std::string, std::vector<double>>>;

Program program_of(const PyProgram& ops) {
  Program program;
  for (const auto& [kind, params] : ops) {
    if (kind != "row" && kind != "col") throw std::invalid_argument("op kind must be 'row' or 'col'");
    program.push_back({kind == "row" ? LineKind::Row : LineKind::Col, params});
  }
  return program;
}

PyProgram py_program(const Program& program) {
  PyProgram out;
  for (const auto& op : program) out.emplace_back(op.kind == LineKind::Row ? "row" : "col", op.params);
  return out;
}

puzzle::GameMode mode_of(const std::string& name) {
  const auto mode = puzzle::parse_mode(name);
  if (!mode) throw puzzle::GameError(puzzle::ErrorKind::InvalidArgument, "unknown mode '" + name + "'");
  return *mode;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized circular shifts and the sliding-tile puzzle built on them";
  m.attr("DEFAULT_NYQUIST_SIGN") = kDefaultNyquistSign;

  static py::exception<puzzle::GameError> game_error(m, "GameError", PyExc_ValueError);
  static py::exception<service::ApiError> api_error(m, "ApiError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const puzzle::GameError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(game_error.ptr())(e.what());
      exc.attr("kind") = std::string(puzzle::error_name(e.kind()));
      PyErr_SetObject(game_error.ptr(), exc.ptr());
    } catch (const service::ApiError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(api_error.ptr())(e.what());
      exc.attr("code") = std::string(service::code_name(e.code()));
      exc.attr("status") = service::http_status(e.code());
      PyErr_SetObject(api_error.ptr(), exc.ptr());
    }
  });

  m.def("gcs", [](const CVector& v, double k, int sign) { return gcs::gcs(v, k, conv_of(sign)); }, py::arg("v"),
        py::arg("k"), py::arg("nyquist_sign") = kDefaultNyquistSign, "Shift v circularly by real amount k.");
  m.def("integer_cshift", &integer_cshift, py::arg("v"), py::arg("k"));
  m.def("frequencies", [](std::size_t n, int sign) { return frequencies(n, conv_of(sign)); }, py::arg("n"),
        py::arg("nyquist_sign") = kDefaultNyquistSign);
  m.def("shift_matrix", [](Eigen::Index n) { return shift_matrix(n).dense(); }, py::arg("n"));
  m.def("dense_oracle", [](const CVector& v, double k, int sign) { return gcs_dense_oracle(v, k, conv_of(sign)); },
        py::arg("v"), py::arg("k"), py::arg("nyquist_sign") = kDefaultNyquistSign);
  m.def("row_shift", [](const std::vector<double>& p, const CMatrix& a, int sign) {
        return row_shift_op(p, a, conv_of(sign));
      }, py::arg("params"), py::arg("m"), py::arg("nyquist_sign") = kDefaultNyquistSign);
  m.def("col_shift", [](const std::vector<double>& p, const CMatrix& a, int sign) {
        return col_shift_op(p, a, conv_of(sign));
      }, py::arg("params"), py::arg("m"), py::arg("nyquist_sign") = kDefaultNyquistSign);
  m.def("apply_program", [](const PyProgram& ops, const CMatrix& a, int sign) {
        return apply_program(program_of(ops), a, conv_of(sign));
      }, py::arg("program"), py::arg("m"), py::arg("nyquist_sign") = kDefaultNyquistSign,
      "Program is [(kind, params), ...] in written order: the last op runs first.");
  m.def("invert_program", [](const PyProgram& ops) { return py_program(invert_program(program_of(ops))); });
  m.def("apply_block_program", [](const PyProgram& ops, const CMatrix& pixels, int tiles, int sign) {
        const auto side = static_cast<int>(pixels.rows());
        if (tiles < 1 || side % tiles != 0) throw std::invalid_argument("pixel side must be a multiple of tiles");
        return apply_block_program(program_of(ops), TileImage(tiles, side / tiles, pixels), conv_of(sign)).pixels();
      }, py::arg("program"), py::arg("pixels"), py::arg("tiles"), py::arg("nyquist_sign") = kDefaultNyquistSign);

  m.def("verify", [](int sign) {
        py::list out;
        for (const auto& r : checks::run_published_checks(conv_of(sign))) {
          py::dict d;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["max_deviation"] = r.max_deviation;
          d["tolerance"] = r.tolerance;
          out.append(d);
        }
        return out;
      }, py::arg("nyquist_sign") = kDefaultNyquistSign);

  py::class_<puzzle::Board>(m, "Board")
      .def_property_readonly("mode", [](const puzzle::Board& b) { return std::string(puzzle::mode_name(b.mode)); })
      .def_readonly("rows", &puzzle::Board::rows)
      .def_readonly("cols", &puzzle::Board::cols)
      .def_readonly("cells", &puzzle::Board::cells)
      .def_readonly("goal", &puzzle::Board::goal)
      .def_readonly("tolerance", &puzzle::Board::tolerance)
      .def_property_readonly("hole", [](const puzzle::Board& b) -> std::optional<std::pair<int, int>> {
        if (!b.hole) return std::nullopt;
        return std::make_pair(b.hole->row, b.hole->col);
      })
      .def("is_solved", &puzzle::is_solved)
      .def("apply", [](const puzzle::Board& b, const std::string& spec) {
        return puzzle::apply_move(b, puzzle::parse_move_spec(spec));
      }, py::arg("move"), "Apply 'row:i:k', 'col:i:k' or 'tap:r,c'; returns a new board.")
      .def("render_json", [](const puzzle::Board& b) { return puzzle::to_json_value(puzzle::render(b)).dump(); })
      .def("to_json", &puzzle::board_to_json)
      .def_static("from_json", &puzzle::board_from_json);

  m.def("new_board", [](const std::string& mode, int rows, int cols, std::optional<double> tol, int sign) {
        return puzzle::new_board(mode_of(mode), rows, cols, tol, conv_of(sign));
      }, py::arg("mode"), py::arg("rows"), py::arg("cols"), py::arg("tolerance") = py::none(),
      py::arg("nyquist_sign") = kDefaultNyquistSign);
  m.def("scramble", [](const puzzle::Board& b, std::uint64_t seed, int moves) {
        auto s = puzzle::scramble(b, seed, moves);
        std::vector<std::string> history;
        for (const auto& mv : s.history) history.push_back(puzzle::format_move(mv));
        return std::make_pair(std::move(s.board), std::move(history));
      }, py::arg("board"), py::arg("seed"), py::arg("moves"), "Returns (scrambled board, move specs).");
  m.def("invert_history", [](const puzzle::Board& start, const std::vector<std::string>& specs) {
        std::vector<puzzle::Move> moves;
        for (const auto& s : specs) moves.push_back(puzzle::parse_move_spec(s));
        std::vector<std::string> out;
        for (const auto& mv : puzzle::invert_history(start, moves)) out.push_back(puzzle::format_move(mv));
        return out;
      }, py::arg("start"), py::arg("history"));

  py::class_<service::GameService>(m, "_GameService")
      .def(py::init([](std::optional<std::string> snapshot, std::optional<std::uint64_t> id_seed, int sign) {
             service::ServiceOptions options;
             if (snapshot) options.snapshot_path = *snapshot;
             options.id_seed = id_seed;
             options.conv = conv_of(sign);
             return std::make_unique<service::GameService>(options);
           }),
           py::arg("snapshot") = py::none(), py::arg("id_seed") = py::none(),
           py::arg("nyquist_sign") = kDefaultNyquistSign)
      .def("create_session", [](service::GameService& s, const std::string& req) {
        return s.create_session(nlohmann::json::parse(req)).dump();
      })
      .def("post_move", [](service::GameService& s, const std::string& id, const std::string& move) {
        return s.post_move(id, nlohmann::json::parse(move)).dump();
      })
      .def("post_undo", [](service::GameService& s, const std::string& id) { return s.post_undo(id).dump(); })
      .def("get_state", [](const service::GameService& s, const std::string& id) { return s.get_state(id).dump(); })
      .def("get_render", [](const service::GameService& s, const std::string& id) { return s.get_render(id).dump(); });
}
