// Copyright 2026 The x0n Authors
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

#ifndef X0N_ERROR_HPP
#define X0N_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace x0n {

// Every failure the library can report. The numeric values double as the
// command-line tool's exit codes, so they must stay stable.
enum class ErrorCode : int {
  InvalidArgument = 2,
  ConductorMismatch = 3,
  DivisionByZero = 4,
  RingMismatch = 5,
  NonUnitLeadingCoefficient = 6,
  BadConstantTerm = 7,
  InnerNotSmall = 8,
  LogarithmicTerm = 9,
  InsufficientOuterOrder = 10,
  ZeroSeries = 11,
  RamificationMismatch = 12,
  LevelNotFound = 13,
  InsufficientPrecision = 14,
  NotPrime = 15,
  PrecisionTooLow = 16,
  OracleMismatch = 17,
  ParseError = 18,
  NonPositiveExponent = 19,
  ZeroConstant = 20,
  NotRootOfUnity = 21,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures additionally carry the zero-based offset of the offending
// character.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace x0n

#endif  // X0N_ERROR_HPP
