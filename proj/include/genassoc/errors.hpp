#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genassoc {

/// Internal invariant broken (construction bug or a violated identity): the
/// computation cannot be trusted past this point.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Caller violated a documented precondition (e.g. subplus off the mutual
/// degree-1 locus).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Support values rejected by condition (5) or (6); `failing` lists the
/// offending indices (1-based simple-root indices).
struct SupportConditionError : std::domain_error {
  std::vector<int> failing;
  SupportConditionError(const std::string& msg, std::vector<int> f)
      : std::domain_error(msg), failing(std::move(f)) {}
};

}  // namespace genassoc
