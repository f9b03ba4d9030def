#include "fourcirc/error.hpp"

namespace fourcirc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonUnitLambda: return "NonUnitLambda";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::RowSumMismatch: return "RowSumMismatch";
    case ErrorKind::BadBorder: return "BadBorder";
    case ErrorKind::BadC: return "BadC";
    case ErrorKind::BadX: return "BadX";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::MissingWeights: return "MissingWeights";
    case ErrorKind::UnsupportedLength: return "UnsupportedLength";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::EmptyRow: return "EmptyRow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::UnknownTable: return "UnknownTable";
  }
  return "Unknown";
}

}  // namespace fourcirc
