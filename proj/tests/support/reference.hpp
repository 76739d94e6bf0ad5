#pragma once

// Test-only references that share no code with the library's numeric paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gcs/core.hpp"

namespace gcs::testing {

// Signed frequency of bin m, written out independently of gcs::frequencies.
inline double reference_frequency(std::int64_t m, std::int64_t n, int nyquist_sign) {
  if (2 * m < n) return static_cast<double>(m);
  if (2 * m > n) return static_cast<double>(m - n);
  return nyquist_sign * n / 2.0;
}

// (P^k)_{jl} = (1/n) sum_m exp(2*pi*i*m*(j-l)/n) * exp(-2*pi*i*f(m)*k/n), applied
// by direct O(n^2) summation.
inline CVector direct_sum_shift(const CVector& v, double k, int nyquist_sign) {
  const auto n = static_cast<std::int64_t>(v.size());
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> ramp(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    const double f = reference_frequency(m, n, nyquist_sign);
    ramp[static_cast<std::size_t>(m)] = std::polar(1.0, -two_pi * f * k / static_cast<double>(n));
  }
  CVector out = CVector::Zero(v.size());
  for (std::int64_t j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (std::int64_t l = 0; l < n; ++l) {
      Complex entry = 0.0;
      for (std::int64_t m = 0; m < n; ++m) {
        const auto phase = static_cast<double>(((m * (j - l)) % n + n) % n) / static_cast<double>(n);
        entry += std::polar(1.0, two_pi * phase) * ramp[static_cast<std::size_t>(m)];
      }
      acc += entry * v[l];
    }
    out[j] = acc / static_cast<double>(n);
  }
  return out;
}

inline CVector random_real_vector(std::mt19937_64& rng, Eigen::Index n, double scale = 5.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  CVector v(n);
  for (auto& x : v) x = Complex(dist(rng), 0.0);
  return v;
}

inline CVector random_complex_vector(std::mt19937_64& rng, Eigen::Index n, double scale = 5.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  CVector v(n);
  for (auto& x : v) x = Complex(dist(rng), dist(rng));
  return v;
}

inline CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double scale = 5.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(dist(rng), 0.0);
  return m;
}

template <class A, class B>
double max_abs_diff(const A& a, const B& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

inline CMatrix make_matrix(int rows, int cols, std::initializer_list<Complex> values) {
  CMatrix m(rows, cols);
  int i = 0;
  for (const auto& v : values) m.data()[i++] = v;
  return m;
}

}  // namespace gcs::testing
