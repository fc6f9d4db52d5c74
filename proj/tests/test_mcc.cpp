#include "mcclab/errors.hpp"
#include "mcclab/homology.hpp"
#include "mcclab/mcc.hpp"

#include "doctest.h"
#include "support.hpp"

#include <functional>
#include <numeric>
#include <set>

using namespace mcclab;

namespace {

std::vector<Facet> all_simplices(int n, int size) {
  std::vector<Facet> out;
  Facet pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == size) return out.push_back(pick);
    for (int v = start; v <= n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return out;
}

// Spanning and connected, checked through the reachability matrix.
bool covers_connected(int n, const std::vector<Facet>& facets) {
  if (facets.empty()) return false;
  const auto reach = testing::transitive_closure(SimplicialComplex(n, facets));
  for (int v = 1; v <= n; ++v)
    if (!reach[1][static_cast<std::size_t>(v)]) return false;
  return true;
}

// Every subset of r-simplices tested directly against the definition.
std::set<std::vector<Facet>> brute_force_mcc(int n, int r) {
  const auto simplices = all_simplices(n, r + 1);
  std::set<std::vector<Facet>> out;
  const std::size_t m = simplices.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Facet> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) chosen.push_back(simplices[i]);
    if (!covers_connected(n, chosen)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < chosen.size() && minimal; ++i) {
      auto rest = chosen;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (covers_connected(n, rest)) minimal = false;
    }
    if (minimal) out.insert(chosen);
  }
  return out;
}

std::set<std::vector<Facet>> as_set(const std::vector<PureComplex>& complexes) {
  std::set<std::vector<Facet>> out;
  for (const auto& c : complexes) out.insert(c.facets());
  return out;
}

} // namespace

TEST_SUITE_BEGIN("mcc");

TEST_CASE("is_mcc") {
  CHECK(is_mcc(PureComplex(3, 2, {{1, 2, 3}})));
  CHECK(is_mcc(PureComplex(5, 2, {{1, 2, 3}, {3, 4, 5}})));
  CHECK_FALSE(is_mcc(PureComplex(5, 2, {{1, 2, 3}, {3, 4, 5}, {2, 3, 4}})));
  CHECK_FALSE(is_mcc(PureComplex(4, 2, {{1, 2, 3}})));
  CHECK_FALSE(is_mcc(PureComplex(6, 2, {{1, 2, 3}, {4, 5, 6}})));
  CHECK_THROWS_AS(is_mcc(PureComplex(1, 1, {})), DomainError);
}

TEST_CASE("facet count bounds") {
  auto b = facet_count_bounds(7, 2);
  CHECK(b.lo == 3);
  CHECK(b.hi == 5);
  b = facet_count_bounds(4, 3);
  CHECK(b.lo == 1);
  CHECK(b.hi == 1);
  CHECK(facet_count_bounds(2, 3).empty());
}

TEST_CASE("enumeration matches brute force") {
  for (auto [n, r] : {std::pair{2, 1}, {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2},
                      {4, 3}, {5, 3}, {6, 3}, {6, 4}}) {
    CAPTURE(n);
    CAPTURE(r);
    const auto expected = brute_force_mcc(n, r);
    const auto forward = enumerate_mcc(n, r);
    CHECK(as_set(forward) == expected);
    CHECK(forward.size() == expected.size());
    CHECK(std::is_sorted(forward.begin(), forward.end()));
    EnumerationOptions reverse;
    reverse.order = SearchOrder::Reverse;
    reverse.workers = 3;
    CHECK(enumerate_mcc(n, r, reverse) == forward);
    for (const auto& y : forward) {
      const auto b = facet_count_bounds(n, r);
      CHECK(static_cast<int>(y.facet_count()) >= b.lo);
      CHECK(static_cast<int>(y.facet_count()) <= b.hi);
    }
  }
}

TEST_CASE("small counts") {
  CHECK(count_mcc(4, 2) == 6);
  CHECK(count_mcc(3, 1) == 3);
  CHECK(count_mcc(2, 2) == 0);
  for (int n = 2; n <= 7; ++n) CHECK(count_mcc(n, 1) == power(n, static_cast<unsigned long>(n - 2)));
}

TEST_CASE("budget refusal") {
  EnumerationOptions tight;
  tight.max_candidates = 10;
  CHECK_THROWS_AS(enumerate_mcc(6, 2, tight), BudgetExceeded);
  CHECK(enumeration_work_estimate(4, 2) > 0);
}

TEST_CASE("leaves") {
  const auto simplex = find_leaves(PureComplex(3, 2, {{1, 2, 3}}));
  REQUIRE(simplex.size() == 3);
  for (const auto& leaf : simplex) {
    CHECK(leaf.external);
    CHECK(leaf.branch == Facet{1, 2, 3});
  }
  const auto path = find_leaves(PureComplex(5, 2, {{1, 2, 3}, {3, 4, 5}}));
  REQUIRE(path.size() == 4);
  CHECK(path[0].vertex == 1);
  CHECK(path[3].branch == Facet{3, 4, 5});
  // Middle facet {3,4,5} separates {1,2,3} from {5,6,7}: its leaf 4 is internal.
  const auto star = find_leaves(PureComplex(7, 2, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}}));
  for (const auto& leaf : star) CHECK(leaf.external == (leaf.vertex != 4));
}

TEST_CASE("every mcc has an external leaf and homology signature") {
  for (auto [n, r] : {std::pair{5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    for (const auto& y : enumerate_mcc(n, r)) {
      const auto leaves = find_leaves(y);
      CHECK(std::any_of(leaves.begin(), leaves.end(), [](const LeafReport& l) { return l.external; }));
      CHECK(verify_mcc_homology(y));
    }
  }
}

TEST_CASE("extension map is injective into the next level") {
  for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 2}, {5, 3}, {5, 1}}) {
    const auto level = enumerate_mcc(n, r);
    const auto next = as_set(enumerate_mcc(n + 1, r));
    std::set<std::vector<Facet>> images;
    for (const auto& y : level) {
      const auto z = extend_to_next(y);
      CHECK(z.vertex_count() == n + 1);
      CHECK(next.count(z.facets()) == 1);
      images.insert(z.facets());
    }
    CHECK(images.size() == level.size());
  }
}

TEST_CASE("treelike complexes") {
  CHECK(is_treelike(PureComplex(5, 2, {{1, 2, 3}, {3, 4, 5}})));
  CHECK_FALSE(is_treelike(PureComplex(4, 2, {{1, 2, 3}, {2, 3, 4}})));
  CHECK(count_treelike_formula(5, 2) == 15);
  CHECK(count_treelike_formula(7, 2) == 735);
  CHECK(count_treelike_formula(3, 1) == 3);
  for (auto [n, r] : {std::pair{5, 2}, {7, 2}, {7, 3}, {4, 1}, {6, 1}}) {
    const auto all = enumerate_mcc(n, r);
    const auto treelike = std::count_if(all.begin(), all.end(), [](const PureComplex& y) { return is_treelike(y); });
    CHECK(BigInt(static_cast<long>(treelike)) == count_treelike_formula(n, r));
  }
}

TEST_CASE("bound chain") {
  const auto small = bound_chain(4, 2, count_mcc(4, 2));
  CHECK(small.lower_chain_vertices == 3);
  CHECK(small.lower_chain == 1);
  CHECK(small.upper_chain == 192);
  CHECK(small.sandwich_holds());
  const auto line = bound_chain(3, 1);
  CHECK(line.lower_chain == 3);
  CHECK(line.upper_chain == 12);
  for (auto [n, r] : {std::pair{5, 2}, {6, 2}, {7, 2}, {6, 3}, {7, 3}}) {
    const auto ledger = bound_chain(n, r, count_mcc(n, r));
    CHECK(ledger.sandwich_holds());
    CHECK(ledger.log10_lower_envelope < ledger.log10_upper_envelope);
  }
}

TEST_SUITE_END();
