#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zg {

enum class ErrorKind {
  InvalidTruncation,
  TruncationMismatch,
  RelationArity,
  InvalidInput,
  ParseError,
  PrecisionExceeded,
  ImpreciseInput,
  InvalidBasis,
  RejectedQuery,
  InternalInconsistency,
};

/// Stable kebab-case identifier used in CLI diagnostics.
std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace zg
