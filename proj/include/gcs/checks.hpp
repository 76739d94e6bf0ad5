#pragma once

// Published-example regressions and the FFT-vs-dense timing harness.

#include <cstddef>
#include <string>
#include <vector>

#include "gcs/core.hpp"

namespace gcs::checks {

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
};

/// Every published worked example, evaluated under `conv`.
std::vector<CheckResult> run_published_checks(FrequencyConvention conv);

/// The 4x4 complex example on its own; used to pin the Nyquist sign.
CheckResult check_complex_4x4(FrequencyConvention conv);

/// Published 4x4 complex result (two decimals).
CMatrix published_complex_4x4();

struct BenchRow {
  std::string path;  // "fft" or "dense"
  std::size_t n = 0;
  double median_seconds = 0.0;
  int reps_per_sample = 0;
};

struct BenchOptions {
  int max_exp = 16;
  int samples = 9;
  double min_sample_seconds = 2e-3;
  bool include_dense = true;
};

/// Median per-call time of gcs for n = 2^8 and 2^10..2^max_exp, plus the dense
/// oracle for n = 16..256. Throws std::invalid_argument unless 10 <= max_exp <= 22.
std::vector<BenchRow> run_bench(const BenchOptions& options, FrequencyConvention conv = {});

/// Median per-call time of gcs at one size.
double time_gcs(std::size_t n, int samples, double min_sample_seconds, FrequencyConvention conv = {});

}  // namespace gcs::checks
