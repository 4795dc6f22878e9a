// Copyright 2026 The Emboot Authors.
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

#ifndef EMBOOT_ERRORS_H_
#define EMBOOT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emboot {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string &what) : Error(what), line_(0) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Invalid configuration, seeds, or inconsistent inputs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numerical failure during embedding training.
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace emboot

#endif  // EMBOOT_ERRORS_H_
