// Copyright 2026 The cover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVER_ERROR_HPP_
#define COVER_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cover {

enum class ErrorCode {
  // Instance validation.
  kElementOutOfRange,
  kEmptySet,
  kNegativeWeight,
  kUnionNotUniverse,
  kEmptyInstance,
  kIndexOutOfRange,
  // Parsing and file access.
  kSyntaxError,
  kIoError,
  // Greedy / bounds.
  kNonPositiveWeight,
  kInvalidTrace,
  kTraceMismatch,
  kNonPositiveArgument,
  kArgumentTooSmall,
  // LP.
  kLengthMismatch,
  kNonOptimalLp,
  kIterationLimit,
  kNumericalFailure,
  // Exact solver.
  kTooManySets,
  // Generators.
  kSingletonSequence,
  kEpsilonOutOfRange,
  kKOutOfRange,
  kInvalidSpec,
  // Experiments.
  kMTooLargeForMode,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kUnionNotUniverse: return "UnionNotUniverse";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kInvalidTrace: return "InvalidTrace";
    case ErrorCode::kTraceMismatch: return "TraceMismatch";
    case ErrorCode::kNonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::kArgumentTooSmall: return "ArgumentTooSmall";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonOptimalLp: return "NonOptimalLp";
    case ErrorCode::kIterationLimit: return "IterationLimit";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kTooManySets: return "TooManySets";
    case ErrorCode::kSingletonSequence: return "SingletonSequence";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kMTooLargeForMode: return "MTooLargeForMode";
  }
  return "Unknown";
}

// Every failure in the library is reported as a cover::Error. Validation
// errors carry the index of the first offending set, parse errors carry a
// 1-based line/column.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  static Error AtSet(ErrorCode code, std::size_t set_index,
                     const std::string& what) {
    Error e(code, "set " + std::to_string(set_index) + ": " + what);
    e.set_index_ = set_index;
    return e;
  }

  static Error AtPosition(std::size_t line, std::size_t column,
                          const std::string& what) {
    Error e(ErrorCode::kSyntaxError, std::to_string(line) + ":" +
                                         std::to_string(column) + ": " + what);
    e.line_ = line;
    e.column_ = column;
    return e;
  }

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> set_index() const { return set_index_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> set_index_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

}  // namespace cover

#endif  // COVER_ERROR_HPP_
