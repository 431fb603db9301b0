#pragma once

#include <stdexcept>
#include <string>

namespace saa {

/// A bid that violates the auction protocol (below the ask price, above the
/// price cap, or on a good the bidder already holds). Always a strategy bug.
class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A batch of simulated auctions could not be completed.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Analysis was asked for payoffs the empirical game does not contain.
class IncompleteDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration. `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace saa
