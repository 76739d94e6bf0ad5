#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "gcs/core.hpp"

namespace gcs {
namespace {

using DenseC = Eigen::MatrixXcd;

// L = F^{-1} diag(-2*pi*i*f(m)/n) F with F the unnormalized DFT matrix.
DenseC shift_logarithm(Eigen::Index n, FrequencyConvention conv) {
  const auto freq = frequencies(static_cast<std::size_t>(n), conv);
  const double len = static_cast<double>(n);
  DenseC fourier(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double turns = static_cast<double>((m * j) % n) / len;
      fourier(m, j) = std::polar(1.0, -2.0 * std::numbers::pi * turns);
    }
  }
  Eigen::VectorXcd eig(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    eig[m] = Complex(0.0, -2.0 * std::numbers::pi * static_cast<double>(freq[m]) / len);
  }
  const DenseC inverse = fourier.adjoint() / len;
  return inverse * eig.asDiagonal() * fourier;
}

}  // namespace

CMatrix fractional_shift_matrix(Eigen::Index n, double k, FrequencyConvention conv) {
  if (n < 1) throw std::invalid_argument("oracle: n must be positive");
  if (n > kOracleMaxSize) throw std::invalid_argument("oracle: n exceeds validation limit");
  if (!std::isfinite(k)) throw std::invalid_argument("oracle: shift amount must be finite");
  const DenseC scaled = k * shift_logarithm(n, conv);
  const DenseC power = scaled.exp();
  return power;
}

CVector gcs_dense_oracle(const CVector& v, double k, FrequencyConvention conv) {
  if (v.size() == 0) throw std::invalid_argument("oracle: empty vector");
  if (!all_finite(v)) throw std::invalid_argument("oracle: vector has non-finite entries");
  return fractional_shift_matrix(v.size(), k, conv) * v;
}

}  // namespace gcs
