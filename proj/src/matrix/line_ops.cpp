#include <stdexcept>
#include <string>

#include "gcs/matrix.hpp"

namespace gcs {
namespace {

void check_length(std::size_t got, Eigen::Index want, const char* what) {
  if (static_cast<Eigen::Index>(got) != want) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " parameters, got " + std::to_string(got));
  }
}

}  // namespace

CMatrix row_shift_op(std::span<const double> params, const CMatrix& m, FrequencyConvention conv) {
  check_length(params.size(), m.rows(), "row_shift_op");
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const CVector line = m.row(i).transpose();
    out.row(i) = gcs(line, params[i], conv).transpose();
  }
  return out;
}

CMatrix col_shift_op(std::span<const double> params, const CMatrix& m, FrequencyConvention conv) {
  check_length(params.size(), m.cols(), "col_shift_op");
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const CVector line = m.col(j);
    out.col(j) = gcs(line, params[j], conv);
  }
  return out;
}

CMatrix apply_program(const Program& ops, const CMatrix& m, FrequencyConvention conv) {
  for (const auto& op : ops) {
    check_length(op.params.size(), op.kind == LineKind::Row ? m.rows() : m.cols(), "apply_program");
  }
  CMatrix state = m;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    state = it->kind == LineKind::Row ? row_shift_op(it->params, state, conv)
                                      : col_shift_op(it->params, state, conv);
  }
  return state;
}

Program invert_program(const Program& ops) {
  Program inverse(ops.rbegin(), ops.rend());
  for (auto& op : inverse) {
    for (auto& p : op.params) p = -p;
  }
  return inverse;
}

}  // namespace gcs
