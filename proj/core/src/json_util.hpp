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

#ifndef TRIALOFFER_SRC_JSON_UTIL_HPP_
#define TRIALOFFER_SRC_JSON_UTIL_HPP_

// Typed accessors over nlohmann::json that raise ParseError naming the
// offending field.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "trialoffer/errors.hpp"

namespace trialoffer::json_util {

using Json = nlohmann::json;

// Parses `text`, converting syntax errors to ParseError with a line number.
Json parse(std::string_view text, const std::string& source);

class Reader {
 public:
  Reader(const Json& node, std::string path, const std::string& source)
      : node_(node), path_(std::move(path)), source_(source) {}

  bool has(const char* key) const;
  Reader child(const char* key) const;
  const Json& node() const { return node_; }
  const std::string& path() const { return path_; }

  double real(const char* key) const;
  double real_or(const char* key, double fallback) const;
  std::int64_t integer(const char* key) const;
  std::int64_t integer_or(const char* key, std::int64_t fallback) const;
  std::uint64_t unsigned_or(const char* key, std::uint64_t fallback) const;
  bool boolean_or(const char* key, bool fallback) const;
  std::string string(const char* key) const;
  std::string string_or(const char* key, std::string fallback) const;
  std::vector<double> reals(const char* key) const;

  [[noreturn]] void fail(const std::string& field,
                         const std::string& what) const;

 private:
  const Json& at(const char* key) const;
  std::string field(const char* key) const;

  const Json& node_;
  std::string path_;
  const std::string& source_;
};

// Reals from a JSON array at `field`.
std::vector<double> reals_of(const Json& node, const std::string& field,
                             const std::string& source);

}  // namespace trialoffer::json_util

#endif  // TRIALOFFER_SRC_JSON_UTIL_HPP_
