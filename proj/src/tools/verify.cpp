#include <algorithm>
#include <cmath>
#include <limits>

#include "gcs/checks.hpp"
#include "gcs/matrix.hpp"
#include "gcs/puzzle.hpp"

namespace gcs::checks {
namespace {

CMatrix matrix(int rows, int cols, std::initializer_list<Complex> values) {
  CMatrix m(rows, cols);
  int i = 0;
  for (const auto& v : values) m.data()[i++] = v;
  return m;
}

template <class A, class B>
double max_component_deviation(const A& got, const B& want) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < got.size(); ++i) {
    worst = std::max(worst, std::abs(got.data()[i].real() - want.data()[i].real()));
    worst = std::max(worst, std::abs(got.data()[i].imag() - want.data()[i].imag()));
  }
  return worst;
}

template <class A, class B>
CheckResult compare(std::string name, std::string description, const A& got, const B& want, double tol) {
  const double dev = (got.rows() == want.rows() && got.cols() == want.cols())
                         ? max_component_deviation(got, want)
                         : std::numeric_limits<double>::infinity();
  return CheckResult{std::move(name), std::move(description), dev <= tol, dev, tol};
}

}  // namespace

CMatrix published_complex_4x4() {
  using namespace std::complex_literals;
  return matrix(4, 4, {14.89 + 1.63i, 11.08 - 2.15i, 2.83 + 1.76i, 8.13 - 2.40i,  //
                       9.67 - 2.65i, 14.17 + 3.32i, 7.93 - 2.56i, 9.40 + 3.06i,   //
                       5.63 - 1.05i, 7.83 + 0.38i, 10.43 - 0.78i, 14.77 + 0.29i,  //
                       3.19 - 2.36i, 6.40 + 3.13i, 8.87 - 2.45i, 0.78 + 2.86i});
}

CheckResult check_complex_4x4(FrequencyConvention conv) {
  CMatrix m(4, 4);
  for (int i = 0; i < 16; ++i) m.data()[i] = i + 1;
  const Program program{{LineKind::Row, {1.3, 3.2, -2.2, 2.8}}, {LineKind::Col, {2.7, 3.2, 2.4, 1.2}}};
  return compare("complex-4x4", "column then row program on [1..16] yields the published complex matrix",
                 apply_program(program, m, conv), published_complex_4x4(), 2e-2);
}

std::vector<CheckResult> run_published_checks(FrequencyConvention conv) {
  std::vector<CheckResult> out;

  {
    const CMatrix p3 = shift_matrix(3).dense().cast<Complex>();
    const CMatrix p4 = shift_matrix(4).dense().cast<Complex>();
    const auto r3 = compare("shift-matrix-3", "P for n=3", p3, matrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0}), 0.0);
    const auto r4 = compare("shift-matrix-4", "P for n=4", p4,
                            matrix(4, 4, {0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0}), 0.0);
    out.push_back(r3);
    out.push_back(r4);
  }

  const CVector v3 = make_vector({1, 2, 3});
  const CVector v5 = make_vector({1, 2, 3, 4, 5});
  out.push_back(compare("cshift-3", "[1 2 3] shifted by 1 is [3 1 2]", gcs(v3, 1.0, conv), make_vector({3, 1, 2}), 1e-12));
  out.push_back(compare("cshift-5-by-2", "P^2 [1..5] is [4 5 1 2 3]", gcs(v5, 2.0, conv),
                        make_vector({4, 5, 1, 2, 3}), 1e-12));
  out.push_back(compare("cshift-5-by-2-dense", "dense P^2 [1..5] is [4 5 1 2 3]", gcs_dense_oracle(v5, 2.0, conv),
                        make_vector({4, 5, 1, 2, 3}), 1e-8));
  out.push_back(compare("swipe-4-3-7", "integer row shift 4-3-7 becomes 7-4-3",
                        integer_cshift(make_vector({4, 3, 7}), 1), make_vector({7, 4, 3}), 0.0));
  {
    const CVector flat = make_vector({2.5, 2.5, 2.5, 2.5, 2.5});
    out.push_back(compare("all-equal-fixed-point", "constant vector is invariant under gcs", gcs(flat, 0.731, conv),
                          flat, 1e-12));
  }

  const CMatrix identity = CMatrix::Identity(3, 3);
  const std::vector<double> rank_drop{0, -1, -2};
  out.push_back(compare("rank-one-identity", "[0 -1 -2] row op collapses I3 to rank one",
                        row_shift_op(rank_drop, identity, conv), matrix(3, 3, {1, 0, 0, 1, 0, 0, 1, 0, 0}), 1e-12));

  {
    // The published 4-decimal matrix is the forward image of the rank-one
    // matrix under these amounts; check that direction.
    const std::vector<double> params{1.2, 1.4, 1.8};
    const CMatrix rank_one = matrix(3, 3, {1, 2, 3, 3, 6, 9, 2, 4, 6});
    const CMatrix published = matrix(3, 3, {3.1484, 1.3213, 1.5303, 9.2946, 5.2798, 3.4257, 4.9393, 5.3574, 1.7033});
    out.push_back(compare("rank-one-contrived", "[1.2 1.4 1.8] row op links the rank-one and 4-decimal matrices",
                          row_shift_op(params, rank_one, conv), published, 5e-4));
  }

  const CMatrix scrambled = matrix(3, 3, {1, 5, 3, 4, 8, 6, 9, 7, 2});
  const CMatrix halfway = matrix(3, 3, {1, 5, 3, 4, 8, 6, 7, 2, 9});
  const CMatrix sorted = matrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  const std::vector<double> row_params{0, 0, 2};
  const std::vector<double> col_params{0, 1, 0};
  out.push_back(compare("final-moves-row", "[0 0 2] row op on the scrambled board", row_shift_op(row_params, scrambled, conv),
                        halfway, 1e-12));
  out.push_back(compare("final-moves-col", "[0 1 0] column op finishes the board", col_shift_op(col_params, halfway, conv),
                        sorted, 1e-12));
  out.push_back(compare("final-moves-joint", "joint column-after-row program",
                        apply_program({{LineKind::Col, col_params}, {LineKind::Row, row_params}}, scrambled, conv),
                        sorted, 1e-12));

  {
    const std::vector<double> params{1.08, 0.61, 2.64};
    const CMatrix published = matrix(3, 3, {3.0823, 1.1103, 1.8074, 5.2637, 3.8946, 5.8417, 6.8758, 8.7904, 8.3337});
    out.push_back(compare("fractional-3x3", "[1.08 0.61 2.64] row op on [1..9]", row_shift_op(params, sorted, conv),
                          published, 5e-4));
  }

  {
    auto board = puzzle::new_board(puzzle::GameMode::ContinuousGcs, 3, 3, {}, conv);
    const CMatrix goal = matrix(3, 3, {-1, 1, 1, 1, -1, 1, 1, 1, -1});
    out.push_back(compare("goal-matrix", "3x3 +/-1 goal state", board.goal, goal, 0.0));
    board.cells = matrix(3, 3, {1, 1, -1, -1, 1, 1, 1, -1, 1});
    const bool solved = puzzle::is_solved(board);
    out.push_back(CheckResult{"sign-permuted-goal", "sign-permuted goal counts as solved", solved,
                              solved ? 0.0 : 1.0, 0.0});
  }

  out.push_back(check_complex_4x4(conv));
  return out;
}

}  // namespace gcs::checks
