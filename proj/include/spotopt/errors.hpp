#ifndef SPOTOPT_ERRORS_HPP
#define SPOTOPT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spotopt {

enum class ErrorCode {
  InvalidSpec,
  ParseError,
  DuplicateId,
  NonMonotonicTimestamps,
  NoFeasibleCandidates,
  EmptyCandidateSet,
  InsufficientCapacity,
  ProblemTooLarge,
  OracleTooLarge,
  EmptyAllocation,
  NoCandidatesPassFilter,
  MissingAvailabilityData,
  UnknownCandidate,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidSpecError : public Error {
 public:
  explicit InvalidSpecError(std::string field)
      : Error(ErrorCode::InvalidSpec, "invalid pod spec: field '" + field + "'"),
        field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : Error(ErrorCode::ParseError, "parse error at line " + std::to_string(line) +
                                         ", column " + std::to_string(column) + ": " + reason),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// demand minus the total pod capacity actually available
class InsufficientCapacityError : public Error {
 public:
  InsufficientCapacityError(std::int64_t gap, std::string detail)
      : Error(ErrorCode::InsufficientCapacity,
              "insufficient capacity: short by " + std::to_string(gap) + " pods" +
                  (detail.empty() ? "" : " (" + detail + ")")),
        gap_(gap) {}
  std::int64_t gap() const noexcept { return gap_; }

 private:
  std::int64_t gap_;
};

}  // namespace spotopt

#endif  // SPOTOPT_ERRORS_HPP
