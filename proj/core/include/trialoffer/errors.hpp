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

#ifndef TRIALOFFER_ERRORS_HPP_
#define TRIALOFFER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace trialoffer {

// Every error raised by the library derives from Error. The CLI maps the
// category onto its exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative method failed to converge within its cap.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A request whose size would make an exact method intractable.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An invalid configuration value; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input text, with line/field diagnostics in the message.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what);

  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trialoffer

#endif  // TRIALOFFER_ERRORS_HPP_
