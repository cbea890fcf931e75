#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zf {

enum class ErrorCode {
  InvalidEdge,
  SelfLoop,
  InvalidVertex,
  EmptyGraph,
  DuplicateVertex,
  InvalidParams,
  InvalidForceAtStep,
  DuplicateTarget,
  IncompleteChronology,
  TooLarge,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every library fault; `code()` distinguishes them.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// A scripted force that is not legal at its time-step (1-based `step`).
class InvalidForceAtStep : public Error {
public:
  InvalidForceAtStep(std::size_t step, std::size_t source, std::size_t target,
                     const std::string& reason);

  std::size_t step() const noexcept { return step_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }

private:
  std::size_t step_;
  std::size_t source_;
  std::size_t target_;
};

} // namespace zf
