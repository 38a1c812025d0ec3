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

#ifndef TRIALOFFER_IO_HPP_
#define TRIALOFFER_IO_HPP_

// Market instance files. The format is a JSON object:
//
//   {
//     "n": 3,                                  // optional, checked if given
//     "quality":    [0.9, 0.2, 0.6],
//     "appeal":     [0.9, 0.1, 0.3],
//     "visibility": [0.8, 0.5, 0.1],
//     "continuation": {"kind": "polynomial", "rho": 0.8, "r": 0.7},
//     "allow_unsorted_visibility": false,      // optional
//     "reduced": false                         // optional
//   }
//
// "continuation" is optional (default {"kind": "none"}); the other kinds are
// {"kind": "none"} and {"kind": "explicit", "values": [c_1, ..., c_n]}.
// A reduced market carries "reduced": true and no continuation.

#include <filesystem>
#include <string>
#include <string_view>

#include "trialoffer/market.hpp"

namespace trialoffer {

// Throws ParseError with the line of a syntax error, or naming the field of
// a schema or invariant violation.
Market parse_market(std::string_view text, const std::string& source = "");
Market load_market(const std::filesystem::path& path);

// Pretty-printed JSON; reals keep full round-trip precision.
std::string serialize_market(const Market& market);
void save_market(const Market& market, const std::filesystem::path& path);

}  // namespace trialoffer

#endif  // TRIALOFFER_IO_HPP_
