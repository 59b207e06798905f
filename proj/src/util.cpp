#include <string>

#include "chern/errors.hpp"
#include "chern/rational.hpp"
#include "chern/subset.hpp"

namespace chern {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::InvalidLinearSpace: return "invalid-linear-space";
    case ErrorCode::UnsupportedOrder: return "unsupported-order";
    case ErrorCode::NotAMatroid: return "not-a-matroid";
    case ErrorCode::TooLarge: return "too-large";
    case ErrorCode::RankError: return "rank-error";
    case ErrorCode::LoopError: return "loop-error";
    case ErrorCode::DimensionError: return "dimension-error";
    case ErrorCode::BalancingViolation: return "balancing-violation";
    case ErrorCode::LiftFailure: return "lift-failure";
    case ErrorCode::InvalidExponents: return "invalid-exponents";
    case ErrorCode::InvalidFlat: return "invalid-flat";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::ColoopError: return "coloop-error";
    case ErrorCode::Overflow: return "overflow";
  }
  return "unknown-error";
}

std::string subset_str(Bits s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

long long binomial(long long a, long long b) {
  if (a < 0) fail(ErrorCode::InvalidInput, "binomial with negative top argument");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) {
    r = checked_mul(r, a - b + i);
    r /= i;
  }
  return r;
}

}  // namespace chern
