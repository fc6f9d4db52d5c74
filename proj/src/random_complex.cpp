#include "mcclab/random_complex.hpp"

#include "mcclab/disjoint_sets.hpp"
#include "mcclab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace mcclab {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

// Visits the (r+1)-subsets present in the sample, in colex order.
template <class Visit>
void for_each_facet(const RandomModel& model, Visit&& visit) {
  const int k = model.r + 1;
  if (model.n < k || model.p <= 0) return;
  const bool all = model.p >= 1;
  const auto cutoff = static_cast<std::uint64_t>(std::ldexp(model.p, 53));
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  for (std::uint64_t rank = 0;; ++rank) {
    if (all || (stream_value(model.seed, rank) >> 11) < cutoff) visit(c);
    int i = 0;
    while (i + 1 < k && c[static_cast<std::size_t>(i)] + 1 == c[static_cast<std::size_t>(i + 1)]) ++i;
    if (i + 1 == k && c[static_cast<std::size_t>(i)] == model.n) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j + 1;
  }
}

} // namespace

void RandomModel::validate() const {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (!(p >= 0 && p <= 1)) throw DomainError("probability must lie in [0, 1]");
}

bool TrialOutcome::giant_dust() const {
  return std::count_if(component_sizes.begin(), component_sizes.end(), [](std::size_t s) { return s > 1; }) == 1;
}

bool TrialOutcome::connected() const { return component_sizes.size() == 1; }

std::uint64_t stream_value(std::uint64_t key, std::uint64_t counter) {
  return mix64(mix64(key) ^ (counter * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed ^ mix64(trial + 0x2545f4914f6cdd1dULL));
}

double alpha_to_p(double alpha, int n, int r) {
  if (n < 2) return alpha > 0 ? 1.0 : 0.0;
  const double p = alpha * std::log(static_cast<double>(n)) / std::pow(static_cast<double>(n), r);
  return std::clamp(p, 0.0, 1.0);
}

PureComplex sample(const RandomModel& model) {
  model.validate();
  std::vector<Facet> facets;
  for_each_facet(model, [&](const std::vector<int>& c) { facets.push_back(c); });
  return PureComplex(model.n, model.r, std::move(facets));
}

TrialOutcome trial_statistics(const RandomModel& model) {
  model.validate();
  const auto n = static_cast<std::size_t>(model.n);
  DisjointSets sets(n + 1);
  std::vector<std::size_t> degree(n + 1, 0);
  std::vector<int> flat;
  TrialOutcome out;
  for_each_facet(model, [&](const std::vector<int>& c) {
    ++out.facet_count;
    for (int v : c) {
      ++degree[static_cast<std::size_t>(v)];
      sets.unite(static_cast<std::size_t>(c.front()), static_cast<std::size_t>(v));
      flat.push_back(v);
    }
  });
  const auto k = static_cast<std::size_t>(model.r) + 1;
  for (std::size_t i = 0; i < flat.size(); i += k)
    if (std::all_of(flat.begin() + static_cast<std::ptrdiff_t>(i), flat.begin() + static_cast<std::ptrdiff_t>(i + k),
                    [&](int v) { return degree[static_cast<std::size_t>(v)] == 1; }))
      ++out.isolated_simplex_count;
  for (std::size_t v = 1; v <= n; ++v) {
    if (sets.find(v) == v) out.component_sizes.push_back(sets.set_size(v));
    if (degree[v] == 0) ++out.isolated_vertex_count;
  }
  std::sort(out.component_sizes.rbegin(), out.component_sizes.rend());
  return out;
}

BigInt big_Q(int n, int k, int r) {
  if (k < 0 || k > n) throw DomainError("big_Q needs 0 <= k <= n");
  if (r < 1) throw DomainError("dimension must be at least 1");
  BigInt total = 0;
  for (int i = 1; i <= r; ++i) total += binomial(k, i) * binomial(n - k, r - i + 1);
  return total;
}

BigInt big_R(int n, int r) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (n < 2 * r + 2) throw DomainError("big_R needs n >= 2r + 2");
  BigInt total = 0;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (r + 1 - i - j >= 0) total += binomial(r + 1, i) * binomial(r + 1, j) * binomial(n - 2 * r - 2, r + 1 - i - j);
  return total;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0 && p <= 1)) throw DomainError("probability must lie in [0, 1]");
}

// exp(log_prefix) * p^a * (1-p)^b with the conventions 0^0 = 1.
double log_domain_product(double log_prefix, double p, double a, double b) {
  if (a > 0 && p == 0) return 0;
  if (b > 0 && p == 1) return 0;
  double log_value = log_prefix;
  if (a > 0) log_value += a * std::log(p);
  if (b > 0) log_value += b * std::log1p(-p);
  return std::exp(log_value);
}

} // namespace

double expected_isolated_simplices(int n, int r, double p) {
  check_probability(p);
  if (n < r + 1) return 0;
  const double q = big_Q(n, r + 1, r).get_d();
  return log_domain_product(log_binomial(n, r + 1), p, 1, q);
}

double expected_isolated_vertices(int n, int r, double p) {
  check_probability(p);
  if (n == 0) return 0;
  const double exponent = binomial(n - 1, r).get_d();
  return n * log_domain_product(0, p, 0, exponent);
}

double expected_components_bound(int n, int k, int r, double p, double c) {
  check_probability(p);
  if (k < r + 1 || k > n) throw DomainError("component bound needs r+1 <= k <= n");
  const double prefix = k * std::log(c) + log_binomial(n, k) + k * std::log(static_cast<double>(k));
  const double a = (k - 1 + r - 1) / r;
  return log_domain_product(prefix, p, a, big_Q(n, k, r).get_d());
}

double default_component_constant(int r) { return std::ldexp(1.0, r * (r + 1) / 2) * r; }

std::vector<SweepRow> threshold_sweep(int n, int r, const std::vector<double>& alphas, std::size_t trials,
                                      std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw DomainError("a sweep needs at least one trial");
  RandomModel{n, r, 0, seed}.validate();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));

  std::vector<SweepRow> rows;
  for (double alpha : alphas) {
    SweepRow row;
    row.alpha = alpha;
    row.p = alpha_to_p(alpha, n, r);
    row.trials = trials;
    std::vector<SweepRow> partial(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          auto& acc = partial[w];
          for (std::size_t t = w; t < trials; t += workers) {
            const auto outcome = trial_statistics({n, r, row.p, trial_seed(seed, t)});
            acc.isolated_simplex += outcome.isolated_simplex_count > 0;
            acc.giant_dust += outcome.giant_dust();
            acc.isolated_vertex += outcome.isolated_vertex_count > 0;
            acc.connected += outcome.connected();
          }
        });
      }
    }
    for (const auto& acc : partial) {
      row.isolated_simplex += acc.isolated_simplex;
      row.giant_dust += acc.giant_dust;
      row.isolated_vertex += acc.isolated_vertex;
      row.connected += acc.connected;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> alpha_grid(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("grid needs at least one step");
  if (!(lo <= hi)) throw DomainError("grid needs alpha-min <= alpha-max");
  if (steps == 1) return {lo};
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * i / (steps - 1));
  return out;
}

} // namespace mcclab
