#include <gtest/gtest.h>

#include <random>

#include "gcs/matrix.hpp"
#include "support/reference.hpp"

using namespace gcs;
using gcs::testing::make_matrix;
using gcs::testing::max_abs_diff;
using gcs::testing::random_matrix;

namespace {

const CMatrix kScrambled = make_matrix(3, 3, {1, 5, 3, 4, 8, 6, 9, 7, 2});
const CMatrix kHalfway = make_matrix(3, 3, {1, 5, 3, 4, 8, 6, 7, 2, 9});
const CMatrix kSorted = make_matrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});

std::vector<double> random_params(std::mt19937_64& rng, std::size_t n, double scale = 3.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::vector<double> p(n);
  for (auto& x : p) x = dist(rng);
  return p;
}

}  // namespace

TEST(RowShiftOp, FinalMovesExample) {
  const std::vector<double> params{0, 0, 2};
  EXPECT_LT(max_abs_diff(row_shift_op(params, kScrambled), kHalfway), 1e-12);
}

TEST(RowShiftOp, IdentityCollapsesToRankOne) {
  const std::vector<double> params{0, -1, -2};
  const CMatrix got = row_shift_op(params, CMatrix::Identity(3, 3));
  EXPECT_LT(max_abs_diff(got, make_matrix(3, 3, {1, 0, 0, 1, 0, 0, 1, 0, 0})), 1e-12);
}

// The published 4-decimal matrix is the forward image of the rank-one matrix,
// so the negated amounts take it back to rank one.
TEST(RowShiftOp, ContrivedRankOneExample) {
  const std::vector<double> params{1.2, 1.4, 1.8};
  const CMatrix rank_one = make_matrix(3, 3, {1, 2, 3, 3, 6, 9, 2, 4, 6});
  const CMatrix published =
      make_matrix(3, 3, {3.1484, 1.3213, 1.5303, 9.2946, 5.2798, 3.4257, 4.9393, 5.3574, 1.7033});
  EXPECT_LT(max_abs_diff(row_shift_op(params, rank_one), published), 5e-4);

  const Program back = invert_program({{LineKind::Row, params}});
  const CMatrix recovered = apply_program(back, published);
  EXPECT_LT(max_abs_diff(recovered, rank_one), 5e-4);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(recovered);
  EXPECT_LT(svd.singularValues()(1) / svd.singularValues()(0), 1e-4);
}

TEST(RowShiftOp, ZeroShiftsAndLengthMismatch) {
  const std::vector<double> zeros{0, 0, 0};
  EXPECT_EQ(row_shift_op(zeros, kSorted), kSorted);
  const std::vector<double> two{1, 2};
  EXPECT_THROW(row_shift_op(two, kSorted), std::invalid_argument);
}

TEST(ColShiftOp, FinalMovesExample) {
  const std::vector<double> params{0, 1, 0};
  EXPECT_LT(max_abs_diff(col_shift_op(params, kHalfway), kSorted), 1e-12);
}

TEST(ColShiftOp, PositiveAmountMovesDown) {
  const std::vector<double> params{1, 0, 0};
  EXPECT_LT(max_abs_diff(col_shift_op(params, kSorted), make_matrix(3, 3, {7, 2, 3, 1, 5, 6, 4, 8, 9})), 1e-12);
}

TEST(ColShiftOp, ConservesEveryColumn) {
  std::mt19937_64 rng(3);
  const CMatrix m = random_matrix(rng, 3, 4);
  const std::vector<double> params{0.3, -1.1, 2.0, 0.9};
  const CMatrix got = col_shift_op(params, m);
  for (Eigen::Index j = 0; j < 4; ++j) {
    EXPECT_LT(std::abs(got.col(j).sum() - m.col(j).sum()), 1e-12);
    EXPECT_NEAR(got.col(j).squaredNorm(), m.col(j).squaredNorm(), 1e-12 * m.col(j).squaredNorm());
    EXPECT_LT(max_abs_diff(CVector(got.col(j)), gcs::gcs(CVector(m.col(j)), params[j])), 1e-15);
  }
}

TEST(ColShiftOp, ZeroShiftsAndLengthMismatch) {
  const std::vector<double> zeros{0, 0, 0};
  EXPECT_EQ(col_shift_op(zeros, kSorted), kSorted);
  EXPECT_THROW(col_shift_op(std::vector<double>{1, 2, 3, 4}, kSorted), std::invalid_argument);
}

TEST(ApplyProgram, JointFinalMoves) {
  const Program program{{LineKind::Col, {0, 1, 0}}, {LineKind::Row, {0, 0, 2}}};
  EXPECT_LT(max_abs_diff(apply_program(program, kScrambled), kSorted), 1e-12);
}

TEST(ApplyProgram, EmptyProgramIsIdentity) { EXPECT_EQ(apply_program({}, kScrambled), kScrambled); }

TEST(ApplyProgram, SameKindOpsAddParameters) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix m = random_matrix(rng, 3, 5);
    for (auto kind : {LineKind::Row, LineKind::Col}) {
      const std::size_t len = kind == LineKind::Row ? 3 : 5;
      const auto p = random_params(rng, len);
      const auto q = random_params(rng, len);
      std::vector<double> sum(len);
      for (std::size_t i = 0; i < len; ++i) sum[i] = p[i] + q[i];
      EXPECT_LT(max_abs_diff(apply_program({{kind, p}, {kind, q}}, m), apply_program({{kind, sum}}, m)), 1e-9);
    }
  }
}

TEST(ApplyProgram, StageMismatchRejectedBeforeRunning) {
  const Program program{{LineKind::Col, {0, 1}}, {LineKind::Row, {0, 0, 2}}};
  EXPECT_THROW(apply_program(program, kScrambled), std::invalid_argument);
}

TEST(ApplyProgram, NonSquareTakesPerDimensionParameters) {
  std::mt19937_64 rng(23);
  const CMatrix m = random_matrix(rng, 3, 4);
  const Program ok{{LineKind::Row, {0.5, 1.0, -0.2}}, {LineKind::Col, {0.1, 0.2, 0.3, 0.4}}};
  EXPECT_NO_THROW(apply_program(ok, m));
  const Program swapped{{LineKind::Row, {0.1, 0.2, 0.3, 0.4}}};
  EXPECT_THROW(apply_program(swapped, m), std::invalid_argument);
}

TEST(InvertProgram, NegatesAndReverses) {
  const Program single{{LineKind::Row, {0.5, -1.5, 2.0}}};
  EXPECT_EQ(invert_program(single), (Program{{LineKind::Row, {-0.5, 1.5, -2.0}}}));
  EXPECT_TRUE(invert_program({}).empty());
  const Program two{{LineKind::Col, {1, 2}}, {LineKind::Row, {3, 4}}};
  EXPECT_EQ(invert_program(two), (Program{{LineKind::Row, {-3, -4}}, {LineKind::Col, {-1, -2}}}));
}

TEST(InvertProgram, MixedProgramRoundTrips) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const CMatrix m = random_matrix(rng, 4, 4);
    Program program;
    for (int i = 0; i < 5; ++i) {
      program.push_back({rng() % 2 ? LineKind::Row : LineKind::Col, random_params(rng, 4)});
    }
    const CMatrix there = apply_program(program, m);
    EXPECT_LT(max_abs_diff(apply_program(invert_program(program), there), m), 1e-9);
  }
}

TEST(LineOps, RowsAndColumnsDoNotCommute) {
  std::mt19937_64 rng(41);
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix m = random_matrix(rng, 3, 4);
    const auto rp = random_params(rng, 3);
    const auto cp = random_params(rng, 4);
    const CMatrix row_then_col = col_shift_op(cp, row_shift_op(rp, m));
    const CMatrix col_then_row = row_shift_op(rp, col_shift_op(cp, m));
    if (max_abs_diff(row_then_col, col_then_row) > 1e-6) ++mismatches;
  }
  EXPECT_GE(mismatches, 99);
}

TEST(LineOps, RowOpConservesEveryRow) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = random_matrix(rng, 4, 6);
    const CMatrix got = row_shift_op(random_params(rng, 4), m);
    for (Eigen::Index i = 0; i < 4; ++i) {
      EXPECT_LT(std::abs(got.row(i).sum() - m.row(i).sum()), 1e-9);
      EXPECT_NEAR(got.row(i).squaredNorm(), m.row(i).squaredNorm(), 1e-9 * m.row(i).squaredNorm());
    }
  }
}

TEST(ProgramJson, FileOrderIsExecutionOrder) {
  const Program program = program_from_json(R"([{"kind":"row","params":[0,0,2]},{"kind":"col","params":[0,1,0]}])");
  // Row runs first, so in written order it is the last element.
  ASSERT_EQ(program.size(), 2u);
  EXPECT_EQ(program[1].kind, LineKind::Row);
  EXPECT_LT(max_abs_diff(apply_program(program, kScrambled), kSorted), 1e-12);
  EXPECT_EQ(program_from_json(program_to_json(program)), program);
}

TEST(ProgramJson, RejectsMalformed) {
  EXPECT_THROW(program_from_json("{"), std::invalid_argument);
  EXPECT_THROW(program_from_json(R"({"kind":"row"})"), std::invalid_argument);
  EXPECT_THROW(program_from_json(R"([{"kind":"diag","params":[1]}])"), std::invalid_argument);
  EXPECT_THROW(program_from_json(R"([{"kind":"row","params":["x"]}])"), std::invalid_argument);
  EXPECT_TRUE(program_from_json("[]").empty());
}

namespace {

// Pixel value encodes (tile row, tile col, y, x) so tile moves are traceable.
TileImage labelled_image(int t, int b) {
  CMatrix px(t * b, t * b);
  for (int y = 0; y < t * b; ++y) {
    for (int x = 0; x < t * b; ++x) px(y, x) = 1000.0 * (y / b) + 100.0 * (x / b) + 10.0 * (y % b) + (x % b);
  }
  return TileImage(t, b, std::move(px));
}

CMatrix tile(const TileImage& img, int tr, int tc) {
  const int b = img.tile_size();
  return img.pixels().block(tr * b, tc * b, b, b);
}

}  // namespace

TEST(BlockShift, IntegerRowShiftRotatesTiles) {
  const TileImage img = labelled_image(3, 2);
  const TileImage out = block_row_shift(img, 0, 1.0);
  EXPECT_EQ(tile(out, 0, 0), tile(img, 0, 2));
  EXPECT_EQ(tile(out, 0, 1), tile(img, 0, 0));
  EXPECT_EQ(tile(out, 0, 2), tile(img, 0, 1));
  EXPECT_EQ(out.pixels().bottomRows(4), img.pixels().bottomRows(4));
}

TEST(BlockShift, IntegerColShiftRotatesTilesDown) {
  const TileImage img = labelled_image(3, 2);
  const TileImage out = block_col_shift(img, 2, 1.0);
  EXPECT_EQ(tile(out, 0, 2), tile(img, 2, 2));
  EXPECT_EQ(tile(out, 1, 2), tile(img, 0, 2));
  EXPECT_EQ(tile(out, 2, 2), tile(img, 1, 2));
  EXPECT_EQ(out.pixels().leftCols(4), img.pixels().leftCols(4));
}

TEST(BlockShift, ZeroIsIdentity) {
  const TileImage img = labelled_image(3, 4);
  EXPECT_EQ(block_row_shift(img, 1, 0.0).pixels(), img.pixels());
  EXPECT_EQ(block_col_shift(img, 2, 0.0).pixels(), img.pixels());
}

TEST(BlockShift, FractionalShiftConservesRowSumsAndStaysReal) {
  const TileImage img = labelled_image(3, 4);
  const TileImage out = block_row_shift(img, 1, 0.5);
  for (int r = 4; r < 8; ++r) {
    EXPECT_LT(std::abs(out.pixels().row(r).sum() - img.pixels().row(r).sum()), 1e-9);
  }
  for (Eigen::Index i = 0; i < out.pixels().size(); ++i) EXPECT_LT(std::abs(out.pixels().data()[i].imag()), 1e-9);
}

TEST(BlockShift, RoundTripRestoresImage) {
  const TileImage img = labelled_image(3, 4);
  const TileImage there = block_col_shift(img, 1, 0.73);
  EXPECT_LT(max_abs_diff(block_col_shift(there, 1, -0.73).pixels(), img.pixels()), 1e-9);
}

TEST(BlockShift, UnitTilesMatchRowOp) {
  std::mt19937_64 rng(53);
  const CMatrix px = random_matrix(rng, 5, 5);
  const TileImage img(5, 1, px);
  const TileImage out = block_row_shift(img, 2, 0.61);
  const std::vector<double> params{0, 0, 0.61, 0, 0};
  EXPECT_LT(max_abs_diff(out.pixels(), row_shift_op(params, px)), 1e-15);
}

TEST(BlockShift, RejectsBadBandOrShape) {
  const TileImage img = labelled_image(3, 2);
  EXPECT_THROW(block_row_shift(img, 3, 1.0), std::out_of_range);
  EXPECT_THROW(block_col_shift(img, -1, 1.0), std::out_of_range);
  EXPECT_THROW(block_row_shift(img, 0, std::nan("")), std::invalid_argument);
  EXPECT_THROW(TileImage(3, 2, CMatrix::Zero(5, 6)), std::invalid_argument);
}

TEST(BlockShift, ProgramRoundTrip) {
  const TileImage img = labelled_image(3, 3);
  const Program program{{LineKind::Row, {0.4, -1.2, 0}}, {LineKind::Col, {1, 0.25, -0.6}}};
  const TileImage there = apply_block_program(program, img);
  const TileImage back = apply_block_program(invert_program(program), there);
  EXPECT_LT(max_abs_diff(back.pixels(), img.pixels()), 1e-9);
  EXPECT_THROW(apply_block_program({{LineKind::Row, {1, 2}}}, img), std::invalid_argument);
}
