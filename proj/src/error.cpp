#include "hypsub/error.hpp"

namespace hypsub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PresentationInvalid: return "PresentationInvalid";
    case ErrorCode::BallTooLarge: return "BallTooLarge";
    case ErrorCode::OutOfBall: return "OutOfBall";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::EmptyTuple: return "EmptyTuple";
    case ErrorCode::RipsViolation: return "RipsViolation";
    case ErrorCode::RadiusScheduleExceeded: return "RadiusScheduleExceeded";
    case ErrorCode::VertexNotInHull: return "VertexNotInHull";
    case ErrorCode::BasisNotClosed: return "BasisNotClosed";
    case ErrorCode::HomotopyIdentityFailed: return "HomotopyIdentityFailed";
    case ErrorCode::ApproximationConstraint: return "ApproximationConstraint";
    case ErrorCode::ChainMapResidual: return "ChainMapResidual";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string path)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      path_(std::move(path)),
      message_(message) {}

}  // namespace hypsub
