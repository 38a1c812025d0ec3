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

#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {
std::string FormatParseMessage(const std::string& source, int line,
                               const std::string& what) {
  std::string out = source.empty() ? std::string("<input>") : source;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": " + what;
  return out;
}
}  // namespace

ParseError::ParseError(const std::string& source, int line,
                       const std::string& what)
    : Error(FormatParseMessage(source, line, what)), line_(line) {}

}  // namespace trialoffer
