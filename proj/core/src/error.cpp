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

#include "synthaudit/error.hpp"

namespace synthaudit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimension:
      return "dimension error";
    case ErrorKind::kSize:
      return "size error";
    case ErrorKind::kParameter:
      return "parameter error";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kData:
      return "data error";
    case ErrorKind::kSchema:
      return "schema error";
    case ErrorKind::kDegenerateColumn:
      return "degenerate column";
    case ErrorKind::kDegenerateLabels:
      return "degenerate labels";
    case ErrorKind::kConfig:
      return "config error";
    case ErrorKind::kNumeric:
      return "numeric error";
    case ErrorKind::kTrainingDiverged:
      return "training diverged";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

TrainingDivergedError::TrainingDivergedError(std::size_t step,
                                             const std::string& what)
    : Error(ErrorKind::kTrainingDiverged,
            what + " (step " + std::to_string(step) + ")"),
      step_(step) {}

}  // namespace synthaudit
