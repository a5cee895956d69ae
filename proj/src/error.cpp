#include "tiltbg/error.hpp"

namespace tiltbg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankZero: return "RankZero";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::WrongVariety: return "WrongVariety";
    case ErrorCode::StraddleViolation: return "StraddleViolation";
    case ErrorCode::UnsupportedRadicalPair: return "UnsupportedRadicalPair";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tiltbg
