#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "gcs/checks.hpp"

namespace gcs::checks {
namespace {

using Clock = std::chrono::steady_clock;

CVector random_vector(std::size_t n) {
  std::mt19937_64 rng(0x6763735f62656e63ULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CVector v(static_cast<Eigen::Index>(n));
  for (auto& x : v) x = Complex(dist(rng), 0.0);
  return v;
}

// Batches calls so every sample lasts at least min_sample_seconds, then
// reports the median per-call time across samples.
template <class F>
std::pair<double, int> median_call_time(F&& call, int samples, double min_sample_seconds) {
  int reps = 1;
  for (;;) {
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) call();
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (elapsed >= min_sample_seconds || reps >= (1 << 20)) break;
    reps *= 2;
  }
  std::vector<double> per_call;
  for (int s = 0; s < samples; ++s) {
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) call();
    per_call.push_back(std::chrono::duration<double>(Clock::now() - t0).count() / reps);
  }
  std::nth_element(per_call.begin(), per_call.begin() + per_call.size() / 2, per_call.end());
  return {per_call[per_call.size() / 2], reps};
}

volatile double g_sink = 0.0;

}  // namespace

double time_gcs(std::size_t n, int samples, double min_sample_seconds, FrequencyConvention conv) {
  const CVector v = random_vector(n);
  return median_call_time([&] { g_sink = gcs(v, 0.37, conv)[0].real(); }, samples, min_sample_seconds).first;
}

std::vector<BenchRow> run_bench(const BenchOptions& options, FrequencyConvention conv) {
  if (options.max_exp < 10 || options.max_exp > 22) {
    throw std::invalid_argument("bench: max_exp must be in [10, 22]");
  }
  std::vector<BenchRow> rows;
  std::vector<std::size_t> sizes{std::size_t{1} << 8};
  for (int e = 10; e <= options.max_exp; ++e) sizes.push_back(std::size_t{1} << e);
  for (const auto n : sizes) {
    const CVector v = random_vector(n);
    const auto [t, reps] = median_call_time([&] { g_sink = gcs(v, 0.37, conv)[0].real(); }, options.samples,
                                            options.min_sample_seconds);
    rows.push_back({"fft", n, t, reps});
  }
  if (options.include_dense) {
    for (std::size_t n = 16; n <= static_cast<std::size_t>(kOracleMaxSize); n *= 2) {
      const CVector v = random_vector(n);
      const auto [t, reps] = median_call_time([&] { g_sink = gcs_dense_oracle(v, 0.37, conv)[0].real(); },
                                              std::min(options.samples, 5), options.min_sample_seconds);
      rows.push_back({"dense", n, t, reps});
    }
  }
  return rows;
}

}  // namespace gcs::checks
