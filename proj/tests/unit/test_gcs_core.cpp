#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <future>
#include <numbers>
#include <random>
#include <vector>

#include "gcs/core.hpp"
#include "support/reference.hpp"

using namespace gcs;
using gcs::testing::direct_sum_shift;
using gcs::testing::max_abs_diff;
using gcs::testing::random_complex_vector;
using gcs::testing::random_real_vector;

namespace {

constexpr FrequencyConvention kPlus{+1};
constexpr FrequencyConvention kMinus{-1};

void expect_near(const CVector& got, const CVector& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (Eigen::Index i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "index " << i;
    EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "index " << i;
  }
}

}  // namespace

TEST(IntegerCshift, PublishedExamples) {
  EXPECT_EQ(integer_cshift(make_vector({1, 2, 3}), 1), make_vector({3, 1, 2}));
  EXPECT_EQ(integer_cshift(make_vector({1, 2, 3, 4, 5}), 2), make_vector({4, 5, 1, 2, 3}));
}

TEST(IntegerCshift, DegenerateCases) {
  EXPECT_EQ(integer_cshift(make_vector({7}), 5), make_vector({7}));
  EXPECT_EQ(integer_cshift(make_vector({1, 2, 3}), 0), make_vector({1, 2, 3}));
  EXPECT_EQ(integer_cshift(make_vector({1, 2, 3}), -1), make_vector({2, 3, 1}));
  EXPECT_EQ(integer_cshift(make_vector({1, 2, 3}), 7), make_vector({3, 1, 2}));
}

TEST(ShiftMatrix, PublishedInstances) {
  Eigen::MatrixXd p3(3, 3);
  p3 << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  Eigen::MatrixXd p4(4, 4);
  p4 << 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0;
  EXPECT_EQ(shift_matrix(3).dense(), p3);
  EXPECT_EQ(shift_matrix(4).dense(), p4);
  EXPECT_EQ(shift_matrix(1).dense(), Eigen::MatrixXd::Ones(1, 1));
}

TEST(ShiftMatrix, RejectsZeroSize) { EXPECT_THROW(shift_matrix(0), std::invalid_argument); }

TEST(ShiftMatrix, ProductIsUnitCshift) {
  std::mt19937_64 rng(11);
  for (Eigen::Index n = 1; n <= 12; ++n) {
    const CVector v = random_complex_vector(rng, n);
    EXPECT_EQ(shift_matrix(n) * v, integer_cshift(v, 1)) << "n=" << n;
    const ShiftMatrix shift = shift_matrix(n);
    const auto& p = shift.dense();
    EXPECT_EQ(p.rowwise().sum(), Eigen::VectorXd::Ones(n));
    EXPECT_EQ(p.colwise().sum(), Eigen::RowVectorXd::Ones(n));
  }
}

TEST(Frequencies, SymmetricRange) {
  EXPECT_EQ(frequencies(3), (std::vector<std::int64_t>{0, 1, -1}));
  EXPECT_EQ(frequencies(5), (std::vector<std::int64_t>{0, 1, 2, -2, -1}));
  EXPECT_EQ(frequencies(1), (std::vector<std::int64_t>{0}));
}

TEST(Frequencies, NyquistFollowsConvention) {
  EXPECT_EQ(frequencies(4, kPlus), (std::vector<std::int64_t>{0, 1, 2, -1}));
  EXPECT_EQ(frequencies(4, kMinus), (std::vector<std::int64_t>{0, 1, -2, -1}));
  EXPECT_EQ(frequencies(2, kPlus), (std::vector<std::int64_t>{0, 1}));
  EXPECT_THROW(frequencies(0), std::invalid_argument);
}

TEST(Gcs, IntegerShiftReproducesRotation) {
  expect_near(gcs::gcs(make_vector({1, 2, 3}), 1.0), make_vector({3, 1, 2}), 1e-12);
  expect_near(gcs::gcs(make_vector({1, 2, 3, 4, 5}), 2.0), make_vector({4, 5, 1, 2, 3}), 1e-12);
}

TEST(Gcs, FractionalRowFromPublishedTable) {
  const CVector got = gcs::gcs(make_vector({1, 2, 3}), 1.08);
  expect_near(got, make_vector({3.0823, 1.1103, 1.8074}), 5e-4);
  EXPECT_LT(max_abs_imag(got), 1e-12);
}

TEST(Gcs, AllEqualVectorIsFixed) {
  const CVector flat = make_vector({4.25, 4.25, 4.25});
  for (double k : {0.1, 0.5, 1.7, -3.3}) expect_near(gcs::gcs(flat, k), flat, 1e-12);
  const CVector flat4 = make_vector({-2, -2, -2, -2});
  for (double k : {0.5, 2.25}) expect_near(gcs::gcs(flat4, k), flat4, 1e-12);
}

// Frozen from gcs_dense_oracle (and the direct-sum reference) before the FFT
// path existed: a half shift of [1 3 1 3] is invertible and complex, unlike
// the [2 2 2 2] a simple interpolation would give.
TEST(Gcs, HalfShiftOfAlternatingVectorIsComplex) {
  using namespace std::complex_literals;
  const CVector v = make_vector({1, 3, 1, 3});
  const CVector plus = make_vector({2.0 + 1i, 2.0 - 1i, 2.0 + 1i, 2.0 - 1i});
  expect_near(gcs_dense_oracle(v, 0.5, kPlus), plus, 1e-12);
  expect_near(direct_sum_shift(v, 0.5, +1), plus, 1e-12);

  expect_near(gcs::gcs(v, 0.5, kPlus), plus, 1e-12);
  expect_near(gcs::gcs(v, 0.5, kMinus), plus.conjugate(), 1e-12);
  for (const auto& x : gcs::gcs(v, 0.5, kMinus)) EXPECT_NEAR(std::abs(x), std::sqrt(5.0), 1e-12);
  expect_near(gcs::gcs(gcs::gcs(v, 0.5), -0.5), v, 1e-12);
}

TEST(Gcs, TwoElementHalfShift) {
  using namespace std::complex_literals;
  // Closed form: [(1 - i*s)/2, (1 + i*s)/2] with s the Nyquist sign.
  expect_near(gcs::gcs(make_vector({1, 0}), 0.5, kMinus), make_vector({0.5 + 0.5i, 0.5 - 0.5i}), 1e-15);
  expect_near(gcs::gcs(make_vector({1, 0}), 0.5, kPlus), make_vector({0.5 - 0.5i, 0.5 + 0.5i}), 1e-15);
}

TEST(Gcs, SingleElementIsIdentity) {
  expect_near(gcs::gcs(make_vector({3.5}), 0.77), make_vector({3.5}), 0.0);
}

TEST(Gcs, RejectsBadInput) {
  EXPECT_THROW(gcs::gcs(make_vector({1, 2}), std::nan("")), std::invalid_argument);
  EXPECT_THROW(gcs::gcs(make_vector({1, 2}), INFINITY), std::invalid_argument);
  EXPECT_THROW(gcs::gcs(CVector(0), 1.0), std::invalid_argument);
  EXPECT_THROW(gcs::gcs(make_vector({1, std::numeric_limits<double>::infinity()}), 1.0), std::invalid_argument);
}

TEST(Gcs, MatchesDirectSummation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> amount(-6.0, 6.0);
  for (Eigen::Index n = 1; n <= 20; ++n) {
    for (int sign : {-1, +1}) {
      const CVector v = random_complex_vector(rng, n);
      const double k = amount(rng);
      EXPECT_LT(max_abs_diff(gcs::gcs(v, k, {sign}), direct_sum_shift(v, k, sign)), 1e-10) << "n=" << n;
    }
  }
}

TEST(DenseOracle, PublishedAndTrivialExamples) {
  expect_near(gcs_dense_oracle(make_vector({1, 2, 3, 4, 5}), 2.0), make_vector({4, 5, 1, 2, 3}), 1e-8);
  expect_near(gcs_dense_oracle(make_vector({1, 2, 3}), 0.0), make_vector({1, 2, 3}), 1e-12);
}

TEST(DenseOracle, MatchesFftPathOnRandomInput) {
  std::mt19937_64 rng(7);
  const CVector v = random_real_vector(rng, 7);
  EXPECT_LT(max_abs_diff(gcs_dense_oracle(v, 0.37), gcs::gcs(v, 0.37)), 1e-8);
}

TEST(DenseOracle, LogarithmExponentiatesToShiftMatrix) {
  for (Eigen::Index n = 1; n <= 9; ++n) {
    for (int sign : {-1, +1}) {
      const CMatrix p = fractional_shift_matrix(n, 1.0, {sign});
      EXPECT_LT(max_abs_diff(p, CMatrix(shift_matrix(n).dense().cast<Complex>())), 1e-12) << "n=" << n;
    }
  }
}

TEST(DenseOracle, RejectsOversize) {
  EXPECT_THROW(gcs_dense_oracle(CVector::Ones(257), 0.5), std::invalid_argument);
  EXPECT_NO_THROW(gcs_dense_oracle(CVector::Ones(kOracleMaxSize), 0.5));
}

TEST(RealView, ClampsResidueAndRejectsComplex) {
  using namespace std::complex_literals;
  const CVector almost = make_vector({1.0 + 1e-12i, 2.0 - 3e-10i});
  EXPECT_EQ(real_view(almost), Eigen::Vector2d(1.0, 2.0));
  EXPECT_THROW(real_view(make_vector({1.0 + 1e-3i})), std::domain_error);
  EXPECT_THROW(real_view(gcs::gcs(make_vector({1, 3, 1, 3}), 0.5)), std::domain_error);
}

TEST(FrequencyConventionEnv, ReadsOverride) {
  ::setenv("GCS_NYQUIST_SIGN", "+1", 1);
  EXPECT_EQ(FrequencyConvention::from_env().nyquist_sign, 1);
  ::setenv("GCS_NYQUIST_SIGN", "-1", 1);
  EXPECT_EQ(FrequencyConvention::from_env().nyquist_sign, -1);
  ::setenv("GCS_NYQUIST_SIGN", "2", 1);
  EXPECT_THROW(FrequencyConvention::from_env(), std::invalid_argument);
  ::unsetenv("GCS_NYQUIST_SIGN");
  EXPECT_EQ(FrequencyConvention::from_env().nyquist_sign, kDefaultNyquistSign);
}

// Property suite, hand-rolled generators.
class GcsProperties : public ::testing::TestWithParam<int> {};

TEST_P(GcsProperties, InverseAdditivityConservation) {
  const Eigen::Index n = GetParam();
  std::mt19937_64 rng(1000 + n);
  std::uniform_real_distribution<double> amount(-2.0 * n, 2.0 * n);
  for (int trial = 0; trial < 200; ++trial) {
    const CVector v = trial % 2 ? random_complex_vector(rng, n) : random_real_vector(rng, n);
    const double a = amount(rng);
    const double b = amount(rng);
    const CVector shifted = gcs::gcs(v, a);

    EXPECT_LT(max_abs_diff(gcs::gcs(shifted, -a), v), 1e-9);
    EXPECT_LT(max_abs_diff(gcs::gcs(shifted, b), gcs::gcs(v, a + b)), 1e-9);
    EXPECT_NEAR(shifted.squaredNorm(), v.squaredNorm(), 1e-9 * v.squaredNorm());
    EXPECT_LT(std::abs(shifted.sum() - v.sum()), 1e-9);
    if (n % 2 == 1 && trial % 2 == 0) {
      EXPECT_LT(max_abs_imag(shifted), 1e-9);
    }
  }
}

TEST_P(GcsProperties, IntegerConsistencyAndFixedPoint) {
  const Eigen::Index n = GetParam();
  std::mt19937_64 rng(2000 + n);
  const CVector v = random_complex_vector(rng, n);
  for (std::int64_t k = -2 * n; k <= 2 * n; ++k) {
    EXPECT_LT(max_abs_diff(gcs::gcs(v, static_cast<double>(k)), integer_cshift(v, k)), 1e-12) << "k=" << k;
  }
  const CVector flat = CVector::Constant(n, Complex(1.5, -0.5));
  std::uniform_real_distribution<double> amount(-10.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) EXPECT_LT(max_abs_diff(gcs::gcs(flat, amount(rng)), flat), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Sizes, GcsProperties, ::testing::Range(1, 18));

TEST(GcsProperties, EvenLengthWitnessGoesComplex) {
  EXPECT_GT(max_abs_imag(gcs::gcs(make_vector({1, 3, 1, 3}), 0.5)), 0.9);
}

TEST(GcsConcurrency, ParallelCallersMatchSerial) {
  std::mt19937_64 rng(99);
  std::vector<CVector> inputs;
  std::vector<CVector> serial;
  for (int i = 0; i < 32; ++i) {
    inputs.push_back(random_complex_vector(rng, 3 + (i * 7) % 61));
    serial.push_back(gcs::gcs(inputs.back(), 0.3 * i - 4.0));
  }
  std::vector<std::future<bool>> jobs;
  for (int t = 0; t < 8; ++t) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (int rep = 0; rep < 20; ++rep) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
          if (max_abs_diff(gcs::gcs(inputs[i], 0.3 * static_cast<double>(i) - 4.0), serial[i]) > 0.0) return false;
        }
      }
      return true;
    }));
  }
  for (auto& job : jobs) EXPECT_TRUE(job.get());
}
