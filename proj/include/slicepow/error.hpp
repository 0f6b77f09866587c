#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slicepow {

enum class ErrorKind {
  NearReal,
  OnVinfinity,
  NotInOmega,
  PoleAtMinusI,
  OutOfDomain,
  RealPointsInDomain,
  IdenticallyZero,
  AmbiguousTracking,
  StratumHit,
  MatchingFailure,
  AnchorNotReal,
  AnchorNotInOmega,
  PathNotSymmetric,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain failure raised by the library. `stratum` names the degenerate set
/// (e.g. "V_INF") when the failure comes from a stratum test.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::string> stratum = std::nullopt)
      : std::runtime_error(message), kind_(kind), stratum_(std::move(stratum)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& stratum() const noexcept { return stratum_; }

 private:
  ErrorKind kind_;
  std::optional<std::string> stratum_;
};

}  // namespace slicepow
