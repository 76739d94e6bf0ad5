#pragma once

// Generalized circular shift of a single vector.
//
// P is the n x n cyclic permutation matrix that moves v[i] to v[i+1]
// (wrapping), and gcs(v, k) evaluates P^k v for any real k. P is circulant,
// so it is diagonalized by the DFT: P^k v = IDFT(DFT(v) * exp(-2*pi*i*f(m)*k/n)),
// where f(m) picks one branch of the matrix logarithm of P. Picking the
// symmetric frequency range makes odd-length real vectors stay real; for even
// n the Nyquist bin has no real branch and the sign of f(n/2) is a process-wide
// convention.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace gcs {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Nyquist sign that reproduces the published 4x4 complex example.
inline constexpr int kDefaultNyquistSign = -1;

/// Branch choice for the logarithm of P. Only matters for even n.
struct FrequencyConvention {
  int nyquist_sign = kDefaultNyquistSign;

  /// Reads GCS_NYQUIST_SIGN ("+1", "1", "-1"); falls back to the default.
  /// Throws std::invalid_argument on any other value.
  static FrequencyConvention from_env();

  friend bool operator==(const FrequencyConvention&, const FrequencyConvention&) = default;
};

/// The cyclic permutation matrix: entry(0, n-1) = 1 and entry(i, i-1) = 1.
class ShiftMatrix {
 public:
  explicit ShiftMatrix(Eigen::Index n);

  Eigen::Index size() const { return dense_.rows(); }
  const Eigen::MatrixXd& dense() const { return dense_; }

  CVector operator*(const CVector& v) const;

 private:
  Eigen::MatrixXd dense_;
};

inline ShiftMatrix shift_matrix(Eigen::Index n) { return ShiftMatrix(n); }

/// result[i] = v[(i - k) mod n]. Exact.
CVector integer_cshift(const CVector& v, std::int64_t k);

/// Signed DFT frequency of every bin, in DFT index order.
std::vector<std::int64_t> frequencies(std::size_t n, FrequencyConvention conv = {});

/// P^k v via the FFT phase ramp. Throws std::invalid_argument for an empty
/// vector, non-finite entries, or non-finite k.
CVector gcs(const CVector& v, double k, FrequencyConvention conv = {});

/// Largest n accepted by gcs_dense_oracle.
inline constexpr Eigen::Index kOracleMaxSize = 256;

/// Dense reference: builds L with exp(L) = P on the chosen branch, forms
/// exp(kL) with a matrix exponential and multiplies. For validation only.
CVector gcs_dense_oracle(const CVector& v, double k, FrequencyConvention conv = {});

/// Dense exp(kL) itself (the n x n matrix P^k on the chosen branch).
CMatrix fractional_shift_matrix(Eigen::Index n, double k, FrequencyConvention conv = {});

/// Imaginary residue below which a complex value is treated as real.
inline constexpr double kRealResidue = 1e-9;

/// Real part of v. Throws std::domain_error if any |im| exceeds max_residue.
Eigen::VectorXd real_view(const CVector& v, double max_residue = kRealResidue);

double max_abs_imag(const CVector& v);
bool all_finite(const CVector& v);

/// Convenience for literals: {1, 2, 3} -> CVector.
CVector make_vector(std::initializer_list<Complex> values);

}  // namespace gcs
