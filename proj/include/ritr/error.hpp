/*
 * Copyright 2026 The RITR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ritr {

// Root of every error the library throws. The CLI maps subclasses to exit
// codes (argument/validation 2, numeric 3, IO 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class StateError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; carries the 1-based line number.
class ParseError : public IoError {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : IoError(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Input data violates a dataset invariant (e.g. NaN feature).
class DataError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Checkpoint or pattern file is corrupt, truncated or of the wrong version.
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace ritr
