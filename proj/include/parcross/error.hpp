/*
 * Copyright 2026 The parcross Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PARCROSS_ERROR_HPP
#define PARCROSS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace parcross {

/// Failure categories raised by the library. The C API maps each one onto a
/// status code of the same name.
enum class ErrorCode {
  malformed_table,
  not_inverse_semigroup,
  out_of_range,
  bad_shape,
  not_unit,
  dim_mismatch,
  not_an_ideal,
  not_closed,
  not_associative,
  not_validated,
  missing_unit,
  well_definedness_breach,
  membership_breach,
  target_not_unital,
  action_axiom_failure,
  non_unital_ideal,
  homomorphism_breach,
  relation_breach,
  iso_breach,
  cap_exceeded,
  parse_error,
  consistency_error,
  usage_error,
  io_error,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace parcross

#endif  // PARCROSS_ERROR_HPP
