#include "mcclab/qfunc.hpp"

#include "mcclab/errors.hpp"
#include "mcclab/random_complex.hpp"

#include <string>

namespace mcclab {

namespace {

void check_alpha_above_threshold(int r, const Rational& alpha) {
  if (r < 2) throw DomainError("the q-analysis needs r >= 2");
  const Rational threshold = fraction(factorial(static_cast<unsigned>(r)), r + 1);
  if (alpha <= threshold)
    throw DomainError("alpha must exceed r!/(r+1) = " + to_string(threshold));
}

Rational q_of(int n, int r, int x, const Rational& alpha, const BigInt& big) {
  Rational value = fraction(r, x) - alpha * r * Rational(big) / Rational(power(n, static_cast<unsigned long>(r)) * x);
  value.canonicalize();
  return value;
}

int sign(const Rational& v) { return sgn(v); }

} // namespace

QEvaluation q_eval(int n, int r, int x, const Rational& alpha) {
  if (r < 2) throw DomainError("the q-analysis needs r >= 2");
  if (alpha <= 0) throw DomainError("alpha must be positive");
  if (x < r + 1 || 2 * x > n)
    throw DomainError("x = " + std::to_string(x) + " is outside [r+1, n/2]");
  QEvaluation out;
  out.n = n;
  out.r = r;
  out.x = x;
  out.alpha = alpha;
  out.Q_value = big_Q(n, x, r);
  out.q_value = q_of(n, r, x, alpha, out.Q_value);
  return out;
}

Rational a_r(int r) {
  Rational total = 0;
  for (int i = 1; i <= r; ++i)
    total += fraction(1, power(2, static_cast<unsigned long>(r)) * factorial(static_cast<unsigned>(i)) *
                             factorial(static_cast<unsigned>(r + 1 - i)));
  total.canonicalize();
  return total;
}

Rational epsilon_r(int r, const Rational& alpha) {
  check_alpha_above_threshold(r, alpha);
  const Rational first = alpha / Rational(factorial(static_cast<unsigned>(r - 1))) - fraction(r, r + 1);
  const Rational second = 2 * alpha * r * a_r(r);
  return first < second ? first : second;
}

Rational lower_endpoint_limit(int r, const Rational& alpha) {
  Rational value = fraction(r, r + 1) - alpha / Rational(factorial(static_cast<unsigned>(r - 1)));
  value.canonicalize();
  return value;
}

Rational upper_endpoint_limit(int r, const Rational& alpha) {
  Rational value = -2 * alpha * r * a_r(r);
  value.canonicalize();
  return value;
}

Rational upper_endpoint_leading_term(int r, const Rational& alpha) {
  Rational value = -alpha * r * a_r(r);
  value.canonicalize();
  return value;
}

std::vector<QEvaluation> q_scan(int n, int r, const Rational& alpha) {
  if (2 * (r + 1) > n) throw DomainError("scan interval [r+1, n/2] is empty");
  std::vector<QEvaluation> out;
  for (int x = r + 1; 2 * x <= n; ++x) out.push_back(q_eval(n, r, x, alpha));
  return out;
}

EndpointReport endpoint_max_check(int n, int r, const Rational& alpha) {
  check_alpha_above_threshold(r, alpha);
  if (2 * (r + 1) >= n) throw DomainError("n is too small: need r+1 < n/2");
  return endpoint_max_check(q_scan(n, r, alpha));
}

EndpointReport endpoint_max_check(const std::vector<QEvaluation>& scan) {
  if (scan.empty()) throw DomainError("empty scan");
  EndpointReport out;
  out.n = scan.front().n;
  out.r = scan.front().r;
  out.alpha = scan.front().alpha;
  out.lower_x = scan.front().x;
  out.upper_x = scan.back().x;
  out.lower_value = scan.front().q_value;
  out.upper_value = scan.back().q_value;
  out.points = scan.size();

  const QEvaluation* best = &scan.front();
  int last_sign = 0;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    if (scan[i].q_value > best->q_value) best = &scan[i];
    if (i + 1 < scan.size()) {
      const int s = sign(scan[i + 1].q_value - scan[i].q_value);
      if (s != 0 && last_sign != 0 && s != last_sign) ++out.sign_changes;
      if (s != 0) last_sign = s;
    }
  }
  out.argmax = best->x;
  out.max_value = best->q_value;
  out.argmax_at_endpoint = out.argmax == out.lower_x || out.argmax == out.upper_x;
  out.epsilon = epsilon_r(out.r, out.alpha);
  const Rational c = out.n * (out.max_value + out.epsilon);
  out.fitted_c = c > 0 ? c : Rational(0);
  return out;
}

SlopeReport initial_slope_check(int n, int r, const Rational& alpha) {
  check_alpha_above_threshold(r, alpha);
  if (n < 2 * r + 4) throw DomainError("n is too small for the initial slope");
  SlopeReport out;
  const int x = r + 1;
  out.difference = q_eval(n, r, x + 1, alpha).q_value - q_eval(n, r, x, alpha).q_value;
  out.decreasing = out.difference < 0;

  // Q'(x) by the product rule on falling factorials, all factors nonzero here.
  const BigInt big = big_Q(n, x, r);
  Rational big_prime = 0;
  for (int i = 1; i <= r; ++i) {
    const int m = r + 1 - i;
    const Rational left = Rational(binomial(x, i));
    const Rational right = Rational(binomial(n - x, m));
    Rational dleft = 0, dright = 0;
    for (int j = 0; j < i; ++j) dleft += fraction(1, x - j);
    for (int j = 0; j < m; ++j) dright -= fraction(1, n - x - j);
    big_prime += left * right * (dleft + dright);
  }
  const Rational nr(power(n, static_cast<unsigned long>(r)));
  out.derivative = fraction(-r, x * x) - alpha * r / nr * (x * big_prime - Rational(big)) / (x * x);
  out.derivative.canonicalize();
  out.target = fraction(-r, (r + 1) * (r + 1));
  out.derivative_ratio = out.derivative / out.target;
  out.difference_ratio = out.difference / out.target;
  return out;
}

} // namespace mcclab
