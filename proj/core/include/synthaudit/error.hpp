// Copyright 2026 The synth-audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNTHAUDIT_ERROR_HPP_
#define SYNTHAUDIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace synthaudit {

enum class ErrorKind {
  kDimension,
  kSize,
  kParameter,
  kParse,
  kData,
  kSchema,
  kDegenerateColumn,
  kDegenerateLabels,
  kConfig,
  kNumeric,
  kTrainingDiverged,
};

std::string_view to_string(ErrorKind kind);

// Base of every error raised by the library. The kind drives the CLI exit
// code, so callers that only care about the category can catch Error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SYNTHAUDIT_DEFINE_ERROR(Name, Kind)                              \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(Kind, message) {} \
  }

SYNTHAUDIT_DEFINE_ERROR(DimensionError, ErrorKind::kDimension);
SYNTHAUDIT_DEFINE_ERROR(SizeError, ErrorKind::kSize);
SYNTHAUDIT_DEFINE_ERROR(ParameterError, ErrorKind::kParameter);
SYNTHAUDIT_DEFINE_ERROR(ParseError, ErrorKind::kParse);
SYNTHAUDIT_DEFINE_ERROR(DataError, ErrorKind::kData);
SYNTHAUDIT_DEFINE_ERROR(SchemaError, ErrorKind::kSchema);
SYNTHAUDIT_DEFINE_ERROR(DegenerateColumnError, ErrorKind::kDegenerateColumn);
SYNTHAUDIT_DEFINE_ERROR(DegenerateLabelsError, ErrorKind::kDegenerateLabels);
SYNTHAUDIT_DEFINE_ERROR(ConfigError, ErrorKind::kConfig);
SYNTHAUDIT_DEFINE_ERROR(NumericError, ErrorKind::kNumeric);

#undef SYNTHAUDIT_DEFINE_ERROR

// Raised when a training loss turns non-finite; carries the optimizer step.
class TrainingDivergedError : public Error {
 public:
  TrainingDivergedError(std::size_t step, const std::string& what);

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace synthaudit

#endif  // SYNTHAUDIT_ERROR_HPP_
