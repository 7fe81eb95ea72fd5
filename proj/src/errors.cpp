#include "zerosquare/errors.hpp"

namespace zsq {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ContractViolation: return "contract-violation";
    case Errc::CapabilityMissing: return "capability-missing";
    case Errc::NonUnit: return "non-unit";
    case Errc::NotDivisible: return "not-divisible";
    case Errc::NotRankOne: return "not-rank-one";
    case Errc::ZeroMatrix: return "zero-matrix";
    case Errc::NotZeroSquare: return "not-zero-square";
    case Errc::InternalInvariantBroken: return "internal-invariant-broken";
    case Errc::ParseError: return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace zsq
