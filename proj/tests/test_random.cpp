#include "mcclab/errors.hpp"
#include "mcclab/random_complex.hpp"

#include "doctest.h"

#include <bit>
#include <cmath>

using namespace mcclab;

namespace {

// Bitmask enumeration of (r+1)-subsets of {0..n-1}.
template <class Pred>
long count_subsets(int n, int r, Pred&& pred) {
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == r + 1 && pred(mask)) ++count;
  return count;
}

struct Moments {
  double mean = 0;
  double standard_error = 0;
};

template <class F>
Moments monte_carlo(int trials, F&& value) {
  double sum = 0, sum_sq = 0;
  for (int t = 0; t < trials; ++t) {
    const double x = value(static_cast<std::uint64_t>(t));
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / trials;
  const double var = std::max(0.0, sum_sq / trials - mean * mean);
  return {mean, std::sqrt(var / trials)};
}

} // namespace

TEST_SUITE_BEGIN("random");

TEST_CASE("Q and R match subset counts") {
  int cases = 0;
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= 3; ++r) {
      for (int k = 0; k <= n; ++k) {
        const unsigned inside = (1u << k) - 1;
        const long expected = count_subsets(n, r, [&](unsigned m) { return (m & inside) && (m & ~inside); });
        CHECK(big_Q(n, k, r) == expected);
        ++cases;
      }
      if (n >= 2 * r + 2) {
        const unsigned a = (1u << (r + 1)) - 1;
        const unsigned b = a << (r + 1);
        const long expected = count_subsets(n, r, [&](unsigned m) { return (m & a) && (m & b); });
        CHECK(big_R(n, r) == expected);
        CHECK(big_R(n, r) <= 2 * big_Q(n, r + 1, r));
        ++cases;
      }
    }
  CHECK(cases > 200);
  CHECK(big_Q(6, 3, 2) == 18);
  CHECK(big_Q(10, 3, 2) == 84);
  CHECK(big_R(10, 2) == 54);
  CHECK(big_R(8, 2) == 36);
  CHECK_THROWS_AS(big_R(5, 2), DomainError);
  CHECK_THROWS_AS(big_Q(5, 6, 2), DomainError);
}

TEST_CASE("Q expansion at large n") {
  for (int r : {2, 3}) {
    const double n = 1e4;
    const double ratio = big_Q(10000, r + 1, r).get_d() / std::pow(n, r);
    const double limit = (r + 1) / std::tgamma(r + 1);
    CHECK(std::abs(ratio / limit - 1) < 0.05);
  }
}

TEST_CASE("sampling extremes and determinism") {
  const auto full = sample({7, 2, 1.0, 3});
  CHECK(full.facet_count() == 35);
  CHECK(trial_statistics({7, 2, 1.0, 3}).connected());
  const auto none = trial_statistics({7, 2, 0.0, 3});
  CHECK(none.component_sizes == std::vector<std::size_t>(7, 1));
  CHECK(none.isolated_vertex_count == 7);
  CHECK(none.isolated_simplex_count == 0);
  CHECK(trial_statistics({1, 2, 0.0, 0}).connected());
  CHECK_FALSE(trial_statistics({2, 1, 0.0, 0}).connected());

  const RandomModel model{20, 2, 0.1, 42};
  CHECK(sample(model) == sample(model));
  CHECK(trial_statistics(model) == trial_statistics(model));
  CHECK_FALSE(sample(model) == sample({20, 2, 0.1, 43}));
  // Coupled draws: raising p only adds facets.
  const auto low = sample({20, 2, 0.05, 9});
  const auto high = sample({20, 2, 0.2, 9});
  for (const auto& f : low.facets()) CHECK(high.complex().has_facet(f));
  CHECK_THROWS_AS(sample({5, 2, 1.5, 0}), DomainError);
}

TEST_CASE("trial statistics agree with the complex") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RandomModel model{15, 2, 0.02, seed};
    const auto y = sample(model);
    const auto stats = trial_statistics(model);
    const auto parts = connected_components(y.complex());
    auto sizes = parts.block_sizes();
    std::sort(sizes.rbegin(), sizes.rend());
    CHECK(stats.component_sizes == sizes);
    CHECK(stats.facet_count == y.facet_count());
    const auto degree = y.complex().vertex_degrees();
    std::size_t isolated = 0, lonely = 0;
    for (int v = 1; v <= 15; ++v) isolated += degree[static_cast<std::size_t>(v)] == 0;
    for (const auto& f : y.facets()) {
      bool disjoint = true;
      for (const auto& g : y.facets())
        if (f != g)
          for (int v : f)
            if (std::find(g.begin(), g.end(), v) != g.end()) disjoint = false;
      lonely += disjoint;
    }
    CHECK(stats.isolated_vertex_count == isolated);
    CHECK(stats.isolated_simplex_count == lonely);
  }
  // A planted lone triangle.
  const auto planted = PureComplex(10, 2, {{1, 2, 3}});
  CHECK(connected_components(planted.complex()).block_count() == 8);
}

TEST_CASE("facet count mean") {
  const auto m = monte_carlo(500, [](std::uint64_t t) {
    return static_cast<double>(trial_statistics({30, 2, 0.05, trial_seed(1, t)}).facet_count);
  });
  CHECK(std::abs(m.mean - 0.05 * 4060) <= 3 * m.standard_error);
}

TEST_CASE("expectation formulas") {
  CHECK(expected_isolated_simplices(10, 2, 0.0) == 0);
  CHECK(expected_isolated_simplices(10, 2, 1.0) == 0);
  CHECK(expected_isolated_simplices(3, 2, 1.0) == 1);
  CHECK(expected_isolated_vertices(10, 2, 0.0) == 10);
  CHECK(expected_isolated_vertices(10, 2, 1.0) == 0);
  CHECK(expected_components_bound(10, 3, 2, 0.0, 32) == 0);
  CHECK(expected_components_bound(10, 3, 2, 1.0, 32) == 0);
  CHECK(default_component_constant(2) == 16);

  {
    const double p = (2.0 / 3) * std::log(50.0) / 2500;
    const auto m = monte_carlo(2000, [p](std::uint64_t t) {
      return static_cast<double>(trial_statistics({50, 2, p, trial_seed(2, t)}).isolated_simplex_count);
    });
    CHECK(std::abs(m.mean - expected_isolated_simplices(50, 2, p)) <= 3 * m.standard_error);
  }
  {
    const double p = 2 * std::log(40.0) / 1600;
    const auto m = monte_carlo(2000, [p](std::uint64_t t) {
      return static_cast<double>(trial_statistics({40, 2, p, trial_seed(3, t)}).isolated_vertex_count);
    });
    CHECK(std::abs(m.mean - expected_isolated_vertices(40, 2, p)) <= 3 * m.standard_error);
  }
  {
    const double p = std::log(60.0) / 3600;
    const auto m = monte_carlo(2000, [p](std::uint64_t t) {
      const auto s = trial_statistics({60, 2, p, trial_seed(4, t)});
      return static_cast<double>(std::count(s.component_sizes.begin(), s.component_sizes.end(), 3));
    });
    CHECK(m.mean <= expected_components_bound(60, 3, 2, p, 32));
  }
}

TEST_CASE("sweeps") {
  const auto grid = alpha_grid(0.5, 4, 8);
  CHECK(grid.size() == 8);
  CHECK(grid.back() == 4);
  const auto rows = threshold_sweep(30, 2, grid, 40, 5, 3);
  CHECK(rows == threshold_sweep(30, 2, grid, 40, 5, 1));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].connected >= rows[i - 1].connected);
    CHECK(rows[i].isolated_vertex <= rows[i - 1].isolated_vertex);
  }
  CHECK_THROWS_AS(threshold_sweep(30, 2, grid, 0, 5), DomainError);

  // Above 2 r!/(r+1) everything outside one component is isolated vertices.
  const auto unique = threshold_sweep(150, 2, {4.0 / 3}, 200, 0);
  CHECK(unique[0].fraction(unique[0].giant_dust) >= 0.9);
  CHECK_THROWS_AS(alpha_grid(2, 1, 3), DomainError);
}

TEST_SUITE_END();
