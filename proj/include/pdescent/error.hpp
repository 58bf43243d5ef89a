// Copyright (c) The pdescent authors. All rights reserved.
// Licensed under the Apache 2.0 License.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pdescent {

enum class ErrorCode {
  InvalidOperand,
  NotANorm,
  ParseError,
  DegenerateInput,
  NotAFrame,
  NeedsReduction,
  Misuse,
  TooSmall,
  TooLarge,
  UndecidedDegenerate,
  NotACocycle,
  InvalidParameter,
  InternalError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above. Parse
/// errors additionally record the byte offset at which the input went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what),
        position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> position_;
};

}  // namespace pdescent
