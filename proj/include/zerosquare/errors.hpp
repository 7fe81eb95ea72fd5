#pragma once

#include <stdexcept>
#include <string>

namespace zsq {

/// Failure categories surfaced by the library. Everything is thrown as
/// zsq::Error; the code tells callers (and the CLI exit-code mapping)
/// whether the problem is misuse, bad input, or an internal bug.
enum class Errc {
  ContractViolation,        // precondition broken by the caller
  CapabilityMissing,        // operation needs a ring capability this ring lacks
  NonUnit,                  // inverse requested for a non-unit
  NotDivisible,             // exact division with a non-divisor
  NotRankOne,               // a nonzero 2x2 minor where rank <= 1 was required
  ZeroMatrix,               // zero matrix where a nonzero one was required
  NotZeroSquare,            // T^2 != 0 where zero-square input was required
  InternalInvariantBroken,  // a proved identity failed; bug signal
  ParseError,               // malformed textual/JSON input
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

}  // namespace zsq
