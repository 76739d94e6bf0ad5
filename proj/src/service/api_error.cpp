#include "gcs/service.hpp"

namespace gcs::service {

std::string_view code_name(ApiCode code) {
  switch (code) {
    case ApiCode::NotFound: return "NOT_FOUND";
    case ApiCode::IllegalMove: return "ILLEGAL_MOVE";
    case ApiCode::InvalidAmount: return "INVALID_AMOUNT";
    case ApiCode::InvalidIndex: return "INVALID_INDEX";
    case ApiCode::NothingToUndo: return "NOTHING_TO_UNDO";
    case ApiCode::BadRequest: return "BAD_REQUEST";
  }
  return "BAD_REQUEST";
}

int http_status(ApiCode code) {
  switch (code) {
    case ApiCode::NotFound: return 404;
    case ApiCode::IllegalMove: return 409;
    case ApiCode::InvalidAmount: return 422;
    case ApiCode::InvalidIndex: return 422;
    case ApiCode::NothingToUndo: return 409;
    case ApiCode::BadRequest: return 400;
  }
  return 400;
}

ApiCode code_for(puzzle::ErrorKind kind) {
  using puzzle::ErrorKind;
  switch (kind) {
    case ErrorKind::NoOpIllegalMove: return ApiCode::IllegalMove;
    case ErrorKind::InvalidAmount: return ApiCode::InvalidAmount;
    case ErrorKind::InvalidIndex: return ApiCode::InvalidIndex;
    case ErrorKind::NothingToUndo: return ApiCode::NothingToUndo;
    case ErrorKind::ModeMismatch:
    case ErrorKind::ParseError:
    case ErrorKind::ImageFormatError:
    case ErrorKind::InvalidArgument: return ApiCode::BadRequest;
  }
  return ApiCode::BadRequest;
}

nlohmann::json ApiError::body() const { return {{"code", code_name(code_)}, {"message", what()}}; }

}  // namespace gcs::service
