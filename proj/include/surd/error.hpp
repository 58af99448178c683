#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surd {

enum class ErrorKind {
  Domain,
  NotCoprime,
  NotGreaterThanOne,
  PerfectSquare,
  InternalInvariantViolation,
  PeriodNotFound,
  NotRegular,
  BadDivisor,
  NotRegularIndex,
  TheoremViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` says which contract broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Validation errors are the caller's fault; everything else is a failed check.
  bool is_validation() const noexcept {
    return kind_ == ErrorKind::Domain || kind_ == ErrorKind::NotCoprime ||
           kind_ == ErrorKind::NotGreaterThanOne || kind_ == ErrorKind::PerfectSquare;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace surd
