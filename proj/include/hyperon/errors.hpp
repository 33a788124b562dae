// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperon {

/// Invalid argument: a value violates a type invariant or precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input text. Line and column are 1-based; column counts fields.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        message_(what),
        line_(line),
        column_(column) {}

  /// Same location with `prefix` prepended to the message (e.g. a file name).
  ParseError with_context(const std::string& prefix) const {
    return ParseError(prefix + message_, line_, column_);
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input whose content is unusable (bad row, wrong role, I/O).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperon
