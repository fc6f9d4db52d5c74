#pragma once

#include "mcclab/bigint.hpp"

#include <vector>

namespace mcclab {

/// q_r(n, x) = r/x - alpha r Q_r(n, x) / (n^r x), evaluated exactly.
struct QEvaluation {
  int n = 0;
  int r = 0;
  int x = 0;
  Rational alpha;
  Rational q_value;
  BigInt Q_value;
};

// Requires r >= 2, r+1 <= x <= n/2 and alpha > 0.
QEvaluation q_eval(int n, int r, int x, const Rational& alpha);

// Sum over i = 1..r of 1 / (2^r i! (r+1-i)!).
Rational a_r(int r);

// min{alpha/(r-1)! - r/(r+1), 2 alpha r A_r}; requires alpha > r!/(r+1).
Rational epsilon_r(int r, const Rational& alpha);

// r/(r+1) - alpha/(r-1)!.
Rational lower_endpoint_limit(int r, const Rational& alpha);
// -2 alpha r A_r as stated for x = n/2.
Rational upper_endpoint_limit(int r, const Rational& alpha);
// Leading term of q_r(n, n/2) from Q_r(n, n/2) ~ n^(r+1) A_r / 2.
Rational upper_endpoint_leading_term(int r, const Rational& alpha);

// q at every integer x in [r+1, floor(n/2)].
std::vector<QEvaluation> q_scan(int n, int r, const Rational& alpha);

struct EndpointReport {
  int n = 0;
  int r = 0;
  Rational alpha;
  int lower_x = 0;
  int upper_x = 0;
  int argmax = 0;
  bool argmax_at_endpoint = false;
  Rational max_value;
  Rational lower_value;
  Rational upper_value;
  // Sign changes of q(x+1) - q(x) over the scan, zero differences skipped.
  int sign_changes = 0;
  Rational epsilon;
  // Smallest c >= 0 with max <= -epsilon + c/n.
  Rational fitted_c;
  std::size_t points = 0;
};

// Requires alpha > r!/(r+1) and r+1 < n/2.
EndpointReport endpoint_max_check(int n, int r, const Rational& alpha);
EndpointReport endpoint_max_check(const std::vector<QEvaluation>& scan);

struct SlopeReport {
  bool decreasing = false;  // q(r+2) - q(r+1) < 0
  Rational difference;
  // dq/dx at x = r+1 from the polynomial Q_r, exact.
  Rational derivative;
  Rational target;  // -r/(r+1)^2
  Rational derivative_ratio;
  Rational difference_ratio;
};

SlopeReport initial_slope_check(int n, int r, const Rational& alpha);

} // namespace mcclab
