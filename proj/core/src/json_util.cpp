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

#include "json_util.hpp"

#include <algorithm>
#include <cmath>

namespace trialoffer::json_util {

Json parse(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const int line =
        1 + static_cast<int>(std::count(text.begin(),
                                        text.begin() + static_cast<long>(
                                                           byte > 0 ? byte - 1
                                                                    : 0),
                                        '\n'));
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (const auto pos = what.find("] "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw ParseError(source, line, "syntax error: " + what);
  }
}

bool Reader::has(const char* key) const {
  return node_.is_object() && node_.contains(key) && !node_.at(key).is_null();
}

std::string Reader::field(const char* key) const {
  return path_.empty() ? std::string(key) : path_ + "." + key;
}

void Reader::fail(const std::string& field, const std::string& what) const {
  throw ParseError(source_, 0, "field '" + field + "': " + what);
}

const Json& Reader::at(const char* key) const {
  if (!node_.is_object()) {
    fail(path_.empty() ? "<root>" : path_, "expected an object");
  }
  if (!has(key)) fail(field(key), "missing required field");
  return node_.at(key);
}

Reader Reader::child(const char* key) const {
  return Reader(at(key), field(key), source_);
}

double Reader::real(const char* key) const {
  const Json& v = at(key);
  if (!v.is_number()) fail(field(key), "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(field(key), "expected a finite number");
  return x;
}

double Reader::real_or(const char* key, double fallback) const {
  return has(key) ? real(key) : fallback;
}

std::int64_t Reader::integer(const char* key) const {
  const Json& v = at(key);
  if (!v.is_number_integer()) fail(field(key), "expected an integer");
  return v.get<std::int64_t>();
}

std::int64_t Reader::integer_or(const char* key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::uint64_t Reader::unsigned_or(const char* key,
                                  std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_number_unsigned()) {
    fail(field(key), "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

bool Reader::boolean_or(const char* key, bool fallback) const {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_boolean()) fail(field(key), "expected true or false");
  return v.get<bool>();
}

std::string Reader::string(const char* key) const {
  const Json& v = at(key);
  if (!v.is_string()) fail(field(key), "expected a string");
  return v.get<std::string>();
}

std::string Reader::string_or(const char* key, std::string fallback) const {
  return has(key) ? string(key) : std::move(fallback);
}

std::vector<double> Reader::reals(const char* key) const {
  return reals_of(at(key), field(key), source_);
}

std::vector<double> reals_of(const Json& node, const std::string& field,
                             const std::string& source) {
  if (!node.is_array()) {
    throw ParseError(source, 0, "field '" + field + "': expected an array");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) {
      throw ParseError(source, 0,
                       "field '" + field + "[" + std::to_string(i + 1) +
                           "]': expected a number");
    }
    out.push_back(node[i].get<double>());
  }
  return out;
}

}  // namespace trialoffer::json_util
