// gcs: command-line front end for the generalized circular-shift puzzle.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcs/checks.hpp"
#include "gcs/matrix.hpp"
#include "gcs/puzzle.hpp"
#include "gcs/puzzle_json.hpp"
#include "gcs/service.hpp"

// After Eigen: <resolv.h> defines a _res macro that breaks Eigen headers.
#include <httplib.h>

namespace {

using namespace gcs;
using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty() || output == "-") {
    std::cout << content;
  } else {
    write_file(output, content);
  }
}

int cmd_verify(bool as_json, FrequencyConvention conv) {
  const auto results = checks::run_published_checks(conv);
  bool all_passed = true;
  json doc = json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    doc.push_back({{"name", r.name},
                   {"description", r.description},
                   {"passed", r.passed},
                   {"maxDeviation", r.max_deviation},
                   {"tolerance", r.tolerance}});
  }
  if (as_json) {
    std::cout << json{{"nyquistSign", conv.nyquist_sign}, {"passed", all_passed}, {"checks", doc}}.dump(2) << "\n";
  } else {
    std::cout << "nyquist sign " << std::showpos << conv.nyquist_sign << std::noshowpos << "\n";
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << " max_dev="
                << std::scientific << std::setprecision(3) << r.max_deviation << " tol=" << r.tolerance
                << std::defaultfloat << "  " << r.description << "\n";
    }
    std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << " (" << results.size()
              << " checks)\n";
  }
  return all_passed ? 0 : kExitDomain;
}

struct NewOptions {
  std::string mode = "gcs";
  int size = 3;
  std::optional<std::uint64_t> seed;
  int moves = 20;
  std::optional<double> tolerance;
  std::string output;
};

int cmd_new(const NewOptions& opt, FrequencyConvention conv) {
  const auto mode = puzzle::parse_mode(opt.mode);
  if (!mode) throw UsageError("unknown mode '" + opt.mode + "' (classic, shift, gcs, image)");
  if (opt.size < 2) throw UsageError("--size must be at least 2");
  if (opt.moves < 1) throw UsageError("--moves must be at least 1");
  const std::uint64_t seed = opt.seed ? *opt.seed : std::random_device{}();
  const auto goal = puzzle::new_board(*mode, opt.size, opt.size, opt.tolerance, conv);
  const auto scrambled = puzzle::scramble(goal, seed, opt.moves);
  const auto session = puzzle::start_session(puzzle::session_id_from_seed(seed), scrambled.board, seed);
  emit(opt.output, puzzle::session_to_json(session) + "\n");
  return 0;
}

int cmd_move(const std::string& session_file, const std::string& spec, const std::string& output, bool in_place) {
  puzzle::Move move;
  try {
    move = puzzle::parse_move_spec(spec);
  } catch (const puzzle::GameError& e) {
    throw UsageError(e.what());
  }
  const auto session = puzzle::session_from_json(read_file(session_file));
  const auto next = puzzle::play(session, move);
  const auto text = puzzle::session_to_json(next) + "\n";
  emit(in_place ? session_file : output, text);
  if (puzzle::is_solved(next.board)) std::cerr << "solved\n";
  return 0;
}

int cmd_bench(int max_exp, bool csv, int samples, FrequencyConvention conv) {
  if (max_exp < 10 || max_exp > 22) throw UsageError("--max-exp must be in [10, 22]");
  checks::BenchOptions options;
  options.max_exp = max_exp;
  options.samples = samples;
  const auto rows = checks::run_bench(options, conv);
  if (csv) {
    std::cout << "path,n,median_seconds,reps_per_sample\n";
    for (const auto& r : rows) {
      std::cout << r.path << "," << r.n << "," << std::setprecision(9) << r.median_seconds << ","
                << r.reps_per_sample << "\n";
    }
    return 0;
  }
  std::cout << std::left << std::setw(7) << "path" << std::setw(10) << "n" << std::setw(16) << "median_us"
            << "reps\n";
  double t10 = 0.0;
  double t15 = 0.0;
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(7) << r.path << std::setw(10) << r.n << std::setw(16) << std::fixed
              << std::setprecision(3) << r.median_seconds * 1e6 << std::defaultfloat << r.reps_per_sample << "\n";
    if (r.path == "fft" && r.n == (1u << 10)) t10 = r.median_seconds;
    if (r.path == "fft" && r.n == (1u << 15)) t15 = r.median_seconds;
  }
  if (t10 > 0.0 && t15 > 0.0) {
    std::cout << "ratio t(2^15)/t(2^10) = " << std::setprecision(4) << t15 / t10
              << " (n log n predicts 48, quadratic 1024)\n";
  }
  return 0;
}

struct ImageOptions {
  std::string input;
  std::string program;
  std::string output;
  int tiles = 3;
  bool invert = false;
};

int cmd_image(const ImageOptions& opt, FrequencyConvention conv) {
  const std::string raw = read_file(opt.input);
  const bool sidecar = opt.input.size() > 5 && opt.input.ends_with(".json");
  TileImage image = [&] {
    if (!sidecar) return puzzle::load_image(raw, opt.tiles);
    json doc;
    try {
      doc = json::parse(raw);
    } catch (const json::exception& e) {
      throw puzzle::GameError(puzzle::ErrorKind::ImageFormatError, std::string("sidecar: ") + e.what());
    }
    return puzzle::tile_image_from_value(doc);
  }();
  Program program = program_from_json(read_file(opt.program));
  if (opt.invert) program = invert_program(program);
  const TileImage result = apply_block_program(program, image, conv);
  write_file(opt.output, puzzle::write_pgm(result.pixels()));
  write_file(opt.output + ".json", puzzle::to_json_value(result).dump());
  return 0;
}

int cmd_serve(const std::string& address, const std::string& snapshot, FrequencyConvention conv) {
  const auto [host, port] = service::parse_address(address);
  service::ServiceOptions options;
  options.conv = conv;
  if (!snapshot.empty()) options.snapshot_path = snapshot;
  service::GameService game(options);
  httplib::Server server;
  service::mount_routes(server, game);
  std::cerr << "listening on " << host << ":" << port << " (" << game.store().size() << " sessions restored)\n";
  if (!server.listen(host, port)) throw std::runtime_error("cannot listen on " + address);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized circular-shift puzzle tools"};
  app.require_subcommand(1);

  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Check every published worked example");
  verify->add_flag("--json", verify_json, "Machine-readable output");

  NewOptions new_opt;
  auto* create = app.add_subcommand("new", "Create a scrambled session (JSON)");
  create->add_option("--mode", new_opt.mode, "classic | shift | gcs | image")->capture_default_str();
  create->add_option("--size", new_opt.size, "Tiles per side (>= 2)")->capture_default_str();
  create->add_option("--seed", new_opt.seed, "Scramble seed");
  create->add_option("--moves", new_opt.moves, "Scramble length")->capture_default_str();
  create->add_option("--tolerance", new_opt.tolerance, "Solved-check tolerance");
  create->add_option("-o,--output", new_opt.output, "Output file (default stdout)");

  std::string session_file;
  std::string move_spec;
  std::string move_output;
  bool in_place = false;
  auto* move = app.add_subcommand("move", "Apply one move to a session file");
  move->add_option("session", session_file, "Session JSON file")->required();
  move->add_option("spec", move_spec, "row|col:<index>:<amount> or tap:<r>,<c>")->required();
  move->add_option("-o,--output", move_output, "Output file (default stdout)");
  move->add_flag("-i,--in-place", in_place, "Rewrite the session file");

  int max_exp = 16;
  int samples = 9;
  bool csv = false;
  auto* bench = app.add_subcommand("bench", "Time gcs against the dense oracle");
  bench->add_option("--max-exp", max_exp, "Largest size is 2^max-exp (10..22)")->capture_default_str();
  bench->add_option("--samples", samples, "Timing samples per size")->check(CLI::PositiveNumber);
  bench->add_flag("--csv", csv, "CSV output");

  ImageOptions image_opt;
  auto* image = app.add_subcommand("image", "Apply a block-shift program to a PGM image");
  image->add_option("input", image_opt.input, "PGM image, or a .json sidecar from a previous run")->required();
  image->add_option("program", image_opt.program, "Program JSON (execution order)")->required();
  image->add_option("output", image_opt.output, "Output PGM; a full-precision <output>.json is written too")
      ->required();
  image->add_option("-t,--tiles", image_opt.tiles, "Tiles per side")->capture_default_str();
  image->add_flag("--invert", image_opt.invert, "Apply the inverse program");

  std::string address = std::getenv("GCS_ADDR") ? std::getenv("GCS_ADDR") : "127.0.0.1:8080";
  std::string snapshot;
  auto* serve = app.add_subcommand("serve", "Run the HTTP game service");
  serve->add_option("--addr", address, "host:port (env GCS_ADDR)")->capture_default_str();
  serve->add_option("--snapshot", snapshot, "Snapshot file for session persistence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto conv = FrequencyConvention::from_env();
    if (*verify) return cmd_verify(verify_json, conv);
    if (*create) return cmd_new(new_opt, conv);
    if (*move) return cmd_move(session_file, move_spec, move_output, in_place);
    if (*bench) return cmd_bench(max_exp, csv, samples, conv);
    if (*image) return cmd_image(image_opt, conv);
    if (*serve) return cmd_serve(address, snapshot, conv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const puzzle::GameError& e) {
    std::cerr << puzzle::error_name(e.kind()) << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
