#include "gcs/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "core/dft.hpp"

namespace gcs {

FrequencyConvention FrequencyConvention::from_env() {
  const char* raw = std::getenv("GCS_NYQUIST_SIGN");
  if (raw == nullptr || *raw == '\0') return {};
  const std::string value(raw);
  if (value == "1" || value == "+1") return {+1};
  if (value == "-1") return {-1};
  throw std::invalid_argument("GCS_NYQUIST_SIGN must be +1 or -1, got '" + value + "'");
}

ShiftMatrix::ShiftMatrix(Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("shift matrix size must be positive");
  dense_ = Eigen::MatrixXd::Zero(n, n);
  dense_(0, n - 1) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) dense_(i, i - 1) = 1.0;
}

CVector ShiftMatrix::operator*(const CVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("shift matrix / vector size mismatch");
  return dense_.cast<Complex>() * v;
}

CVector integer_cshift(const CVector& v, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(v.size());
  CVector out(v.size());
  if (n == 0) return out;
  const std::int64_t s = ((k % n) + n) % n;
  for (std::int64_t i = 0; i < n; ++i) out[(i + s) % n] = v[i];
  return out;
}

std::vector<std::int64_t> frequencies(std::size_t n, FrequencyConvention conv) {
  if (n == 0) throw std::invalid_argument("frequencies: n must be positive");
  const auto len = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> f(n);
  for (std::int64_t m = 0; m < len; ++m) {
    if (2 * m < len) {
      f[m] = m;
    } else if (2 * m > len) {
      f[m] = m - len;
    } else {
      f[m] = conv.nyquist_sign * (len / 2);
    }
  }
  return f;
}

bool all_finite(const CVector& v) {
  for (const auto& x : v) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

double max_abs_imag(const CVector& v) {
  double worst = 0.0;
  for (const auto& x : v) worst = std::max(worst, std::abs(x.imag()));
  return worst;
}

CVector gcs(const CVector& v, double k, FrequencyConvention conv) {
  if (v.size() == 0) throw std::invalid_argument("gcs: empty vector");
  if (!std::isfinite(k)) throw std::invalid_argument("gcs: shift amount must be finite");
  if (!all_finite(v)) throw std::invalid_argument("gcs: vector has non-finite entries");
  if (v.size() == 1 || k == 0.0) return v;

  const auto n = static_cast<std::size_t>(v.size());
  const double len = static_cast<double>(n);
  const auto freq = frequencies(n, conv);

  CVector spectrum = v;
  std::span<Complex> data(spectrum.data(), n);
  detail::dft_forward(data);
  for (std::size_t m = 0; m < n; ++m) {
    if (freq[m] == 0) continue;
    // Reduce f*k modulo n first so integer shifts hit exact multiples of 2*pi/n.
    const double turns = std::fmod(static_cast<double>(freq[m]) * k, len) / len;
    data[m] *= std::polar(1.0, -2.0 * std::numbers::pi * turns);
  }
  detail::dft_inverse(data);
  return spectrum;
}

Eigen::VectorXd real_view(const CVector& v, double max_residue) {
  const double residue = max_abs_imag(v);
  if (residue > max_residue) {
    throw std::domain_error("real_view: imaginary residue " + std::to_string(residue) +
                            " exceeds " + std::to_string(max_residue));
  }
  return v.real();
}

CVector make_vector(std::initializer_list<Complex> values) {
  CVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v[i++] = x;
  return v;
}

}  // namespace gcs
