#pragma once

#include "mcclab/bigint.hpp"
#include "mcclab/complex.hpp"

#include <cstdint>
#include <vector>

namespace mcclab {

/// Pure random r-complex on {1..n}: each (r+1)-subset is a facet
/// independently with probability p.
struct RandomModel {
  int n = 0;
  int r = 1;
  double p = 0;
  std::uint64_t seed = 0;

  // Throws DomainError on n < 0, r < 1 or p outside [0, 1].
  void validate() const;
};

struct TrialOutcome {
  std::vector<std::size_t> component_sizes;  // descending
  std::size_t isolated_vertex_count = 0;
  std::size_t isolated_simplex_count = 0;
  std::size_t facet_count = 0;

  // Exactly one component with more than one vertex.
  bool giant_dust() const;
  // One component; a single vertex counts as connected.
  bool connected() const;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

// Counter-based draw: a 64-bit value determined by (key, counter) alone.
std::uint64_t stream_value(std::uint64_t key, std::uint64_t counter);

// Seed of trial t in a run keyed by `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// p = alpha log n / n^r, clamped to [0, 1].
double alpha_to_p(double alpha, int n, int r);

/// The facet with colexicographic rank i is present when the draw for
/// (seed, i) falls below p.
PureComplex sample(const RandomModel& model);
TrialOutcome trial_statistics(const RandomModel& model);

// Sum over i = 1..r of C(k, i) C(n-k, r-i+1).
BigInt big_Q(int n, int k, int r);
// (r+1)-subsets meeting both of two fixed disjoint (r+1)-sets; needs n >= 2r+2.
BigInt big_R(int n, int r);

double expected_isolated_simplices(int n, int r, double p);
// n (1-p)^C(n-1, r).
double expected_isolated_vertices(int n, int r, double p);

// C^k C(n,k) k^k p^ceil((k-1)/r) (1-p)^Q(n,k), for r+1 <= k <= n.
double expected_components_bound(int n, int k, int r, double p, double c);
// 2^C(r+1,2) r.
double default_component_constant(int r);

struct SweepRow {
  double alpha = 0;
  double p = 0;
  std::size_t trials = 0;
  std::size_t isolated_simplex = 0;
  std::size_t giant_dust = 0;
  std::size_t isolated_vertex = 0;
  std::size_t connected = 0;

  double fraction(std::size_t count) const { return trials ? static_cast<double>(count) / trials : 0.0; }
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/**
 * Empirical event frequencies per alpha. Trial t uses trial_seed(seed, t) at
 * every alpha, so rows share their facet draws and only p changes.
 */
std::vector<SweepRow> threshold_sweep(int n, int r, const std::vector<double>& alphas, std::size_t trials,
                                      std::uint64_t seed, unsigned workers = 0);

// `steps` evenly spaced values from lo to hi inclusive.
std::vector<double> alpha_grid(double lo, double hi, int steps);

} // namespace mcclab
