#pragma once

#include "mcclab/bigint.hpp"
#include "mcclab/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mcclab {

/// A vertex lying in exactly one facet (its branch). The leaf is external when
/// removing the branch leaves at most one component with more than one vertex.
struct LeafReport {
  Vertex vertex = 0;
  Facet branch;
  bool external = false;

  friend bool operator==(const LeafReport&, const LeafReport&) = default;
};

struct FacetCountRange {
  int lo = 1;
  int hi = 0;
  bool empty() const { return lo > hi; }
};

/// Exact count of M_r(n), when known, sandwiched between the lower chain
/// (treelike count at the largest n' <= n with n' = 1 mod r) and the upper
/// chain (number of partial r-trees on n labeled vertices).
struct CountLedger {
  int n = 0;
  int r = 0;
  std::optional<BigInt> exact_count;
  int lower_chain_vertices = 0;
  BigInt lower_chain;
  BigInt upper_chain;
  // Display-only asymptotic envelope: A = 1/(2e r!), B = 2^C(r+1,2) r, and
  // log10 of A^n n^n and B^n n^n.
  double envelope_a = 0;
  double envelope_b = 0;
  double log10_lower_envelope = 0;
  double log10_upper_envelope = 0;

  bool sandwich_holds() const;
};

// Connected and every facet removal disconnects. Requires n >= 2.
bool is_mcc(const PureComplex& complex);

// ceil((n-1)/r) <= f_r(Y) <= n - r; empty when n < r + 1.
FacetCountRange facet_count_bounds(int n, int r);

enum class SearchOrder { Forward, Reverse };

struct EnumerationOptions {
  SearchOrder order = SearchOrder::Forward;
  unsigned workers = 0;  // 0: hardware concurrency
  std::optional<std::uint64_t> max_candidates;
};

// Unpruned number of facet subsets in the search (saturating).
std::uint64_t enumeration_work_estimate(int n, int r);

/**
 * All members of M_r(n) in canonical order. The search picks facet subsets
 * within facet_count_bounds, pruning on coverage, component count and
 * redundant facets. Throws BudgetExceeded when the work estimate is above
 * the budget.
 */
std::vector<PureComplex> enumerate_mcc(int n, int r, const EnumerationOptions& options = {});
BigInt count_mcc(int n, int r, const EnumerationOptions& options = {});

std::vector<LeafReport> find_leaves(const PureComplex& complex);

/**
 * Injective map M_r(n) -> M_r(n+1): take the smallest-labeled leaf v with
 * branch {v, v1..vr} and add the facet {v1..vr, n+1}.
 */
PureComplex extend_to_next(const PureComplex& complex);

// Pairwise facet intersections of at most one vertex and collapsible to a point.
bool is_treelike(const PureComplex& complex);

// (n-1)! n^(k-1) / (k! r!^k) for n = k r + 1.
BigInt count_treelike_formula(int n, int r);

CountLedger bound_chain(int n, int r, std::optional<BigInt> exact_count = std::nullopt);

} // namespace mcclab
