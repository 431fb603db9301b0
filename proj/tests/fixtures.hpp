#pragma once

// Scenario drivers shared by the unit tests and the acceptance run.

#include <cstdint>
#include <string>

namespace saa::fixture {

struct KappaReport {
  int environments = 0;
  int price_violations = 0;
  int value_violations = 0;
  int worst_price_gap = 0;   // max |p - p*| seen
  long worst_value_gap = 0;  // max W* - W seen
  std::string first_failure;
};

/// Random single-unit environments (M, N in 1..4, values in 0..20), all
/// agents straightforward, checked against the assignment oracle.
KappaReport kappa_bounds(int environments, std::uint64_t seed);

struct ExposureReport {
  long runs = 0;                // distinct tie-break paths explored
  long agent1_bid = 0;          // paths where the complementary agent bid
  long agent1_nonnegative = 0;  // ... and still ended with surplus >= 0
  long mismatches = 0;          // replay disagreed with run_auction
  long min_surplus = 0;
  long max_surplus = 0;
};

/// Every tie-break path of the all-SB exposure example auction.
ExposureReport exposure_paths();

}  // namespace saa::fixture
