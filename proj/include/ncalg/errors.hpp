#pragma once

#include <stdexcept>
#include <string>

namespace ncalg {

enum class ErrorCode {
  DivisionByZero,
  NonInvertible,
  ReducibleRequiresBranch,
  MixedFields,
  MixedAlphabets,
  ZeroPolynomial,
  NotCompletedThatFar,
  SharedGeneratorMismatch,
  SubalgebraRelationFails,
  SingularChange,
  NonQuadraticRelation,
  NoInvertibleSolution,
  EmptySolutionSpace,
  UnsupportedDegree,
  NonSquareSystem,
  RankDeficient,
  NotOnScheme,
  RankDeficientOnComponent,
  NotNormalAtStage,
  ConstraintViolated,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

// Every failure surfaced by the library. The code is what callers branch on;
// the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::ParseError, "at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ncalg
