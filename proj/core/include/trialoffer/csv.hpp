// Copyright 2026 The trialoffer Authors
//
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

#ifndef TRIALOFFER_CSV_HPP_
#define TRIALOFFER_CSV_HPP_

// Fixed CSV dialect: comma separated, '.' decimal point, a header row,
// '\n' line endings, UTF-8. Reals are written in the shortest form that
// round-trips, so identical inputs give byte-identical files.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace trialoffer {

std::string format_real(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  // Cells are appended left to right; end_row() checks the width.
  CsvTable& add(std::string_view cell);
  CsvTable& add(double x) { return add(format_real(x)); }
  CsvTable& add(std::int64_t x) { return add(std::to_string(x)); }
  CsvTable& add(std::uint64_t x) { return add(std::to_string(x)); }
  CsvTable& add(int x) { return add(std::to_string(x)); }
  void end_row();

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> pending_;
};

// Parses the dialect above (no quoting). Throws ParseError on ragged rows.
CsvTable parse_csv(std::string_view text, const std::string& source);

// Whole-file helpers; both throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace trialoffer

#endif  // TRIALOFFER_CSV_HPP_
