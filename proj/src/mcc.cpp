#include "mcclab/mcc.hpp"

#include "mcclab/budget.hpp"
#include "mcclab/errors.hpp"
#include "mcclab/rtrees.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>

namespace mcclab {

bool is_mcc(const PureComplex& complex) {
  if (complex.vertex_count() < 2) throw DomainError("is_mcc needs at least two vertices");
  if (!is_connected(complex.complex())) return false;
  for (const auto& f : complex.facets())
    if (is_connected(remove_facet(complex.complex(), f))) return false;
  return true;
}

FacetCountRange facet_count_bounds(int n, int r) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (n < r + 1) return {};
  return {(n - 1 + r - 1) / r, n - r};
}

std::uint64_t enumeration_work_estimate(int n, int r) {
  const auto range = facet_count_bounds(n, r);
  if (range.empty()) return 0;
  const auto candidates = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r) + 1);
  std::uint64_t total = 0;
  for (int f = range.lo; f <= range.hi; ++f) {
    const auto term = binomial_u64(candidates, static_cast<std::uint64_t>(f));
    if (term > UINT64_MAX - total) return UINT64_MAX;
    total += term;
  }
  return total;
}

namespace {

using Mask = std::uint64_t;

// Depth-first search over facet subsets with facets encoded as vertex masks
// (bit v-1 for vertex v).
class MccSearch {
public:
  using Visit = std::function<void(const std::vector<Mask>&)>;

  MccSearch(int n, int r, SearchOrder order) : n_(n), r_(r), range_(facet_count_bounds(n, r)) {
    full_ = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
    // (r+1)-subsets in lexicographic order of their sorted vertex lists.
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(pick.size()) == r + 1) {
        Mask m = 0;
        for (int v : pick) m |= Mask{1} << v;
        candidates_.push_back(m);
        return;
      }
      for (int v = start; v < n; ++v) {
        pick.push_back(v);
        rec(v + 1);
        pick.pop_back();
      }
    };
    rec(0);
    if (order == SearchOrder::Reverse) std::reverse(candidates_.begin(), candidates_.end());
    last_with_vertex_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < candidates_.size(); ++i)
      for (int v = 0; v < n; ++v)
        if (candidates_[i] & (Mask{1} << v)) last_with_vertex_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }

  std::size_t root_count() const { return candidates_.size(); }

  // Explores every selection whose first facet is candidates_[root].
  void run_root(std::size_t root, const Visit& visit) const {
    if (range_.empty()) return;
    std::vector<Mask> chosen{candidates_[root]};
    descend(root + 1, chosen, visit);
  }

private:
  // Vertices reachable from `seed` through facets other than chosen[skip].
  static Mask reach(const std::vector<Mask>& chosen, std::size_t skip, Mask seed) {
    Mask reached = seed;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (i == skip || !(chosen[i] & reached) || (chosen[i] & ~reached) == 0) continue;
        reached |= chosen[i];
        grew = true;
      }
    }
    return reached;
  }

  static bool redundant(const std::vector<Mask>& chosen, std::size_t i) {
    const Mask f = chosen[i];
    return (f & ~reach(chosen, i, f & (~f + 1))) == 0;
  }

  int component_count(const std::vector<Mask>& chosen, Mask covered) const {
    int count = std::popcount(full_ & ~covered);
    Mask seen = 0;
    for (Mask f : chosen) {
      if (f & seen) continue;
      seen |= reach(chosen, chosen.size(), f);
      ++count;
    }
    return count;
  }

  void descend(std::size_t next, std::vector<Mask>& chosen, const Visit& visit) const {
    const auto depth = static_cast<int>(chosen.size());
    Mask covered = 0;
    for (Mask f : chosen) covered |= f;
    const int components = component_count(chosen, covered);

    if (components == 1) {
      if (depth >= range_.lo) visit(chosen);
      // Any further facet would be redundant.
      return;
    }
    if (depth >= range_.hi) return;
    if (components - 1 > r_ * (range_.hi - depth)) return;
    for (int v = 0; v < n_; ++v)
      if (!(covered & (Mask{1} << v)) && last_with_vertex_[static_cast<std::size_t>(v)] < static_cast<int>(next))
        return;

    for (std::size_t i = next; i < candidates_.size(); ++i) {
      chosen.push_back(candidates_[i]);
      bool ok = true;
      for (std::size_t j = 0; j < chosen.size() && ok; ++j) ok = !redundant(chosen, j);
      if (ok) descend(i + 1, chosen, visit);
      chosen.pop_back();
    }
  }

  int n_;
  int r_;
  FacetCountRange range_;
  Mask full_ = 0;
  std::vector<Mask> candidates_;
  std::vector<int> last_with_vertex_;
};

PureComplex to_complex(int n, int r, const std::vector<Mask>& masks) {
  std::vector<Facet> facets;
  facets.reserve(masks.size());
  for (Mask m : masks) {
    Facet f;
    for (int v = 0; v < n; ++v)
      if (m & (Mask{1} << v)) f.push_back(v + 1);
    facets.push_back(std::move(f));
  }
  return PureComplex(n, r, std::move(facets));
}

void check_budget(int n, int r, const EnumerationOptions& options) {
  const auto work = enumeration_work_estimate(n, r);
  const auto limit = options.max_candidates.value_or(work_budget(budget::kEnumeration));
  if (n > 63 || work > limit)
    throw BudgetExceeded("enumerating M_" + std::to_string(r) + "(" + std::to_string(n) +
                         ") needs up to " + std::to_string(work) + " candidate facet sets, budget is " +
                         std::to_string(limit));
}

// Runs the search with root facets distributed over worker threads, one sink
// per worker.
template <class Sink>
std::vector<Sink> run_search(int n, int r, const EnumerationOptions& options) {
  check_budget(n, r, options);
  const MccSearch search(n, r, options.order);
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(search.root_count())));
  std::vector<Sink> sinks(workers);
  std::atomic<std::size_t> next_root{0};
  auto work = [&](unsigned w) {
    auto visit = [&sink = sinks[w], n, r](const std::vector<Mask>& masks) { sink.add(n, r, masks); };
    for (std::size_t root; (root = next_root.fetch_add(1)) < search.root_count();)
      search.run_root(root, visit);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return sinks;
}

struct CollectSink {
  std::vector<PureComplex> found;
  void add(int n, int r, const std::vector<Mask>& masks) { found.push_back(to_complex(n, r, masks)); }
};

struct CountSink {
  std::uint64_t count = 0;
  void add(int, int, const std::vector<Mask>&) { ++count; }
};

} // namespace

std::vector<PureComplex> enumerate_mcc(int n, int r, const EnumerationOptions& options) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (n < r + 1) return {};
  std::vector<PureComplex> out;
  for (auto& sink : run_search<CollectSink>(n, r, options))
    std::move(sink.found.begin(), sink.found.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

BigInt count_mcc(int n, int r, const EnumerationOptions& options) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (n < r + 1) return 0;
  BigInt total = 0;
  for (const auto& sink : run_search<CountSink>(n, r, options))
    total += static_cast<unsigned long>(sink.count);
  return total;
}

std::vector<LeafReport> find_leaves(const PureComplex& complex) {
  const auto degree = complex.complex().vertex_degrees();
  std::vector<LeafReport> out;
  for (Vertex v = 1; v <= complex.vertex_count(); ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    const auto& facets = complex.facets();
    const auto branch = std::find_if(facets.begin(), facets.end(), [v](const Facet& f) {
      return std::binary_search(f.begin(), f.end(), v);
    });
    const auto rest = connected_components(remove_facet(complex.complex(), *branch));
    out.push_back({v, *branch, rest.nontrivial_block_count() <= 1});
  }
  return out;
}

PureComplex extend_to_next(const PureComplex& complex) {
  const auto leaves = find_leaves(complex);
  if (leaves.empty()) throw InvariantViolation("complex has no leaf to extend from");
  const auto& smallest = leaves.front();
  Facet added;
  for (Vertex u : smallest.branch)
    if (u != smallest.vertex) added.push_back(u);
  added.push_back(complex.vertex_count() + 1);
  auto facets = complex.facets();
  facets.push_back(std::move(added));
  return PureComplex(complex.vertex_count() + 1, complex.dimension(), std::move(facets));
}

bool is_treelike(const PureComplex& complex) {
  const auto& facets = complex.facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      Facet common;
      std::set_intersection(facets[i].begin(), facets[i].end(), facets[j].begin(), facets[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) return false;
    }
  if (!is_connected(complex.complex())) return false;

  // Facet/vertex incidence graph is a tree iff edges = nodes - 1.
  const auto degree = complex.complex().vertex_degrees();
  const auto covered = static_cast<std::size_t>(
      std::count_if(degree.begin() + 1, degree.end(), [](int d) { return d > 0; }));
  const auto incidences = facets.size() * static_cast<std::size_t>(complex.dimension() + 1);
  const bool forest = incidences + 1 == facets.size() + covered;
  if (!forest) return false;

  const auto core = collapse(complex.complex());
  if (core.vertex_count() != 1 || core.facet_count() != 0)
    throw InvariantViolation("acyclic incidence graph but complex does not collapse to a point");
  return true;
}

BigInt count_treelike_formula(int n, int r) {
  if (r < 1 || n < r + 1 || (n - 1) % r != 0)
    throw DomainError("treelike count needs n = k r + 1 with k >= 1");
  const auto k = static_cast<unsigned>((n - 1) / r);
  const BigInt numerator = factorial(static_cast<unsigned>(n - 1)) * power(n, k - 1);
  const BigInt denominator = factorial(k) * power(factorial(static_cast<unsigned>(r)), k);
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw InvariantViolation("treelike count is not an integer");
  return numerator / denominator;
}

bool CountLedger::sandwich_holds() const {
  if (!exact_count) return lower_chain <= upper_chain;
  return lower_chain <= *exact_count && *exact_count <= upper_chain;
}

CountLedger bound_chain(int n, int r, std::optional<BigInt> exact_count) {
  if (r < 1 || n < r + 1) throw DomainError("bound_chain needs n >= r + 1 >= 2");
  CountLedger out;
  out.n = n;
  out.r = r;
  out.exact_count = std::move(exact_count);
  out.lower_chain_vertices = n - (n - 1) % r;
  out.lower_chain = count_treelike_formula(out.lower_chain_vertices, r);
  const auto edges = static_cast<unsigned long>(r * (r - 1) / 2 + r * (n - r));
  out.upper_chain = power(2, edges) * count_r_trees(n, r);

  const double r_fact = std::tgamma(r + 1.0);
  out.envelope_a = 1.0 / (2.0 * std::numbers::e * r_fact);
  out.envelope_b = std::pow(2.0, r * (r + 1) / 2.0) * r;
  out.log10_lower_envelope = n * (std::log10(out.envelope_a) + std::log10(static_cast<double>(n)));
  out.log10_upper_envelope = n * (std::log10(out.envelope_b) + std::log10(static_cast<double>(n)));
  return out;
}

} // namespace mcclab
