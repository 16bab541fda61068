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

#ifndef SYNTHAUDIT_DATA_CSV_HPP_
#define SYNTHAUDIT_DATA_CSV_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "synthaudit/data/dataset.hpp"

namespace synthaudit::data {

struct CsvOptions {
  // When set, a column whose values are all 0 or 1 is typed binary.
  bool infer_binary = true;
};

// Comma-separated, header row, no quoting, no missing values.
// Errors name the 1-based data row (the header is not counted).
Dataset read_csv(std::istream& in, const CsvOptions& options = {});
Dataset load_csv(const std::filesystem::path& path,
                 const CsvOptions& options = {});

// Values printed with 17 significant digits, so write -> read -> write is
// byte-identical.
void write_csv(std::ostream& out, const Dataset& data);
void save_csv(const std::filesystem::path& path, const Dataset& data);

std::string format_double(double value);

}  // namespace synthaudit::data

#endif  // SYNTHAUDIT_DATA_CSV_HPP_
