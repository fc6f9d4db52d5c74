#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcclab {

enum class Scale { Smoke, Desk, Extended };

// "smoke", "desk" or "extended"; anything else is a DomainError.
Scale parse_scale(const std::string& name);

struct ClaimResult {
  std::string claim;
  bool passed = false;
  std::size_t cases = 0;
  double seconds = 0;
  std::string detail;
};

struct VerifyReport {
  std::string scale;
  std::vector<ClaimResult> claims;

  bool passed() const;
};

/**
 * Runs every claim-level check at the given scale. Smoke stays at n <= 5 and
 * skips the Monte Carlo and q-function claims; desk covers the full set at
 * the sizes used by the acceptance suite; extended pushes the enumerations
 * one vertex further.
 */
VerifyReport verify_all(Scale scale, unsigned workers = 0, std::uint64_t seed = 0);

} // namespace mcclab
