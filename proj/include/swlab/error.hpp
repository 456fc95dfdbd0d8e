#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swlab {

enum class ErrorKind {
  EmptyInput,
  MalformedFacet,
  DimensionOutOfRange,
  DegreeOutOfRange,
  DegreeOverflow,
  IndexOutOfRange,
  SimplexNotInComplex,
  EmptyComplex,
  NotPseudomanifold,
  NotAFlagCell,
  NotACycle,
  NotACocycle,
  DimensionMismatch,
  PairingDegenerate,
  OracleConflict,
  OutOfDomain,
  SingularMetric,
  LeftDomain,
  GridTooCoarse,
  NonConvergent,
  ParseError,
  UnknownCorpusEntry,
  CorpusValidationFailed,
  UnknownModel,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::MalformedFacet: return "MalformedFacet";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::NotAFlagCell: return "NotAFlagCell";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PairingDegenerate: return "PairingDegenerate";
    case ErrorKind::OracleConflict: return "OracleConflict";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::SingularMetric: return "SingularMetric";
    case ErrorKind::LeftDomain: return "LeftDomain";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownCorpusEntry: return "UnknownCorpusEntry";
    case ErrorKind::CorpusValidationFailed: return "CorpusValidationFailed";
    case ErrorKind::UnknownModel: return "UnknownModel";
  }
  return "Unknown";
}

/// Base exception for every failure reported by the library. The kind is
/// stable and machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) +
                                         ", column " + std::to_string(column) +
                                         ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace swlab
