#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wondercheck {

enum class ErrorKind {
  InvalidRank,
  InvalidType,
  NotARoot,
  NonDominant,
  BadIndex,
  BadArgs,
  NotNef,
  DimensionMismatch,
  InvalidPlace,
  InvalidPoint,
  TooFewPoints,
  NotConverging,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wondercheck
