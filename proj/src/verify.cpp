#include "mcclab/verify.hpp"

#include "mcclab/constructions.hpp"
#include "mcclab/errors.hpp"
#include "mcclab/homology.hpp"
#include "mcclab/io.hpp"
#include "mcclab/mcc.hpp"
#include "mcclab/qfunc.hpp"
#include "mcclab/random_complex.hpp"
#include "mcclab/rtrees.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace mcclab {

namespace {

struct Outcome {
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

ClaimResult run_claim(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  ClaimResult result;
  result.claim = name;
  try {
    const auto outcome = body();
    result.passed = outcome.passed;
    result.cases = outcome.cases;
    result.detail = outcome.detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string label(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

class Corpus {
public:
  explicit Corpus(unsigned workers) { options_.workers = workers; }

  const std::vector<PureComplex>& get(int n, int r) {
    auto it = cache_.find({n, r});
    if (it == cache_.end()) it = cache_.emplace(std::pair{n, r}, enumerate_mcc(n, r, options_)).first;
    return it->second;
  }
  const EnumerationOptions& options() const { return options_; }

private:
  EnumerationOptions options_;
  std::map<std::pair<int, int>, std::vector<PureComplex>> cache_;
};

long subset_count(int n, int r, const std::function<bool(unsigned)>& keep) {
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == r + 1 && keep(mask)) ++count;
  return count;
}

Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

} // namespace

Scale parse_scale(const std::string& name) {
  if (name == "smoke") return Scale::Smoke;
  if (name == "desk") return Scale::Desk;
  if (name == "extended") return Scale::Extended;
  throw DomainError("unknown scale '" + name + "' (expected smoke, desk or extended)");
}

bool VerifyReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

VerifyReport verify_all(Scale scale, unsigned workers, std::uint64_t seed) {
  VerifyReport report;
  report.scale = scale == Scale::Smoke ? "smoke" : scale == Scale::Desk ? "desk" : "extended";
  const int top = scale == Scale::Smoke ? 5 : scale == Scale::Desk ? 6 : 7;
  Corpus corpus(workers);
  std::vector<std::pair<int, int>> corpora;
  for (int r : {2, 3})
    for (int n = r + 1; n <= top; ++n) corpora.emplace_back(n, r);

  report.claims.push_back(run_claim("cayley-base-case", [&] {
    Outcome o;
    for (int n = 3; n <= top; ++n)
      o.expect(count_mcc(n, 1, corpus.options()) == power(n, static_cast<unsigned long>(n - 2)), "n=" + std::to_string(n));
    return o;
  }));

  report.claims.push_back(run_claim("exact-mcc-counts", [&] {
    Outcome o;
    o.expect(corpus.get(4, 2).size() == 6, "M_2(4)");
    for (int r = 2; r <= 4; ++r) o.expect(count_mcc(r + 1, r, corpus.options()) == 1, "M_r(r+1) at r=" + std::to_string(r));
    for (int n = 5; n <= top; ++n) {
      auto reverse = corpus.options();
      reverse.order = SearchOrder::Reverse;
      o.expect(enumerate_mcc(n, 2, reverse) == corpus.get(n, 2), "order independence " + label(n, 2));
    }
    return o;
  }));

  report.claims.push_back(run_claim("treelike-count", [&] {
    Outcome o;
    std::vector<std::pair<int, int>> cases{{5, 2}, {4, 3}};
    if (scale != Scale::Smoke) cases.emplace_back(7, 2);
    if (scale == Scale::Extended) cases.emplace_back(7, 3);
    for (auto [n, r] : cases) {
      const auto& all = corpus.get(n, r);
      const auto treelike = std::count_if(all.begin(), all.end(), [](const PureComplex& y) { return is_treelike(y); });
      o.expect(BigInt(static_cast<long>(treelike)) == count_treelike_formula(n, r), label(n, r));
    }
    return o;
  }));

  report.claims.push_back(run_claim("r-tree-count", [&] {
    Outcome o;
    std::vector<std::pair<int, int>> cases{{4, 2}, {5, 2}, {5, 1}, {5, 3}};
    if (scale != Scale::Smoke) cases.emplace_back(6, 2);
    if (scale == Scale::Extended) cases.insert(cases.end(), {{7, 2}, {7, 3}});
    for (auto [n, r] : cases) {
      const auto trees = enumerate_r_trees(n, r);
      o.expect(BigInt(static_cast<long>(trees.size())) == count_r_trees(n, r), label(n, r));
      for (const auto& t : trees) o.expect(is_r_tree(t, r), "is_r_tree " + label(n, r));
    }
    return o;
  }));

  report.claims.push_back(run_claim("kalai-identity", [&] {
    Outcome o;
    o.expect(kalai_sum(4, 2) == 4, "(4,2)");
    if (scale != Scale::Smoke) o.expect(kalai_sum(5, 2) == 125, "(5,2)");
    if (scale == Scale::Extended) o.expect(kalai_sum(5, 3) == 5, "(5,3)");
    return o;
  }));

  report.claims.push_back(run_claim("mcc-homology", [&] {
    Outcome o;
    for (auto [n, r] : corpora)
      for (const auto& y : corpus.get(n, r)) {
        o.expect(verify_mcc_homology(y), "homology " + complex_to_json(y.complex()));
        for (const auto& f : y.facets())
          o.expect(!free_faces(y, f).empty(), "free face " + complex_to_json(y.complex()));
      }
    return o;
  }));

  report.claims.push_back(run_claim("mcc-structure", [&] {
    Outcome o;
    for (auto [n, r] : corpora) {
      const auto& level = corpus.get(n, r);
      const auto bounds = facet_count_bounds(n, r);
      std::set<std::vector<Edge>> skeletons;
      std::set<PureComplex> images;
      const auto& next = corpus.get(n + 1, r);
      for (const auto& y : level) {
        const auto f = static_cast<int>(y.facet_count());
        o.expect(bounds.lo <= f && f <= bounds.hi, "facet bounds " + label(n, r));
        const auto leaves = find_leaves(y);
        o.expect(std::any_of(leaves.begin(), leaves.end(), [](const LeafReport& l) { return l.external; }),
                 "external leaf " + label(n, r));
        skeletons.insert(one_skeleton(y.complex()));
        const auto z = extend_to_next(y);
        o.expect(std::binary_search(next.begin(), next.end(), z), "extension lands in M_r(n+1) " + label(n, r));
        images.insert(z);
      }
      o.expect(skeletons.size() == level.size(), "distinct 1-skeletons " + label(n, r));
      o.expect(images.size() == level.size(), "injective extension " + label(n, r));
    }
    return o;
  }));

  report.claims.push_back(run_claim("r-tree-embedding", [&] {
    Outcome o;
    for (auto [n, r] : corpora) {
      const auto& level = corpus.get(n, r);
      for (const auto& y : level) {
        const auto t = embed_in_r_tree(y);
        o.expect(is_r_tree(t, r) && t.contains(skeleton_graph(y.complex())), "embedding " + label(n, r));
      }
      o.expect(bound_chain(n, r, BigInt(static_cast<long>(level.size()))).sandwich_holds(), "sandwich " + label(n, r));
    }
    return o;
  }));

  report.claims.push_back(run_claim("group-realization", [&] {
    Outcome o;
    struct Case {
      GroupSpec group;
      int k;
      int r;
    };
    std::vector<Case> cases{{{1, {}}, 1, 2}, {{0, {2}}, 1, 3}};
    if (scale != Scale::Smoke)
      cases.insert(cases.end(), {{{0, {3}}, 1, 3}, {{0, {6}}, 1, 3}, {{1, {2}}, 1, 3}, {{1, {}}, 3, 4},
                                 {{0, {2}}, 2, 4}, {{0, {6}}, 2, 4}, {{1, {2}}, 2, 4}});
    for (const auto& c : cases) {
      const auto y = realize_group(c.group, c.k, c.r);
      const auto h = homology(y.complex(), c.k);
      o.expect(is_mcc(y) && verify_mcc_homology(y) && h.betti == static_cast<std::size_t>(c.group.free_rank) &&
                   h.torsion == c.group.invariant_factors(),
               "group at k=" + std::to_string(c.k) + " r=" + std::to_string(c.r));
    }
    return o;
  }));

  report.claims.push_back(run_claim("q-r-subset-counts", [&] {
    Outcome o;
    const int limit = scale == Scale::Smoke ? 8 : 12;
    for (int n = 1; n <= limit; ++n)
      for (int r = 1; r <= 3; ++r) {
        for (int k = 0; k <= n; ++k) {
          const unsigned in = (1u << k) - 1;
          o.expect(big_Q(n, k, r) == subset_count(n, r, [&](unsigned m) { return (m & in) && (m & ~in); }),
                   "Q" + label(n, r));
        }
        if (n >= 2 * r + 2) {
          const unsigned a = (1u << (r + 1)) - 1, b = a << (r + 1);
          o.expect(big_R(n, r) == subset_count(n, r, [&](unsigned m) { return (m & a) && (m & b); }), "R" + label(n, r));
        }
      }
    return o;
  }));

  if (scale != Scale::Smoke) {
    const std::size_t trials = scale == Scale::Desk ? 200 : 400;
    report.claims.push_back(run_claim("connectivity-thresholds", [&] {
      Outcome o;
      const auto rows = threshold_sweep(150, 2, {2.0 / 9, 2.0 / 3, 2.0, 6.0}, trials, seed, workers);
      o.expect(rows[0].fraction(rows[0].isolated_simplex) >= 0.9, "isolated simplex below threshold");
      o.expect(rows[2].fraction(rows[2].isolated_simplex) <= 0.1, "isolated simplex above threshold");
      o.expect(rows[1].fraction(rows[1].isolated_vertex) >= 0.9, "isolated vertex below threshold");
      o.expect(rows[3].fraction(rows[3].isolated_vertex) <= 0.1, "isolated vertex above threshold");
      o.expect(rows[2].fraction(rows[2].giant_dust) >= 0.9, "giant plus dust");
      const auto line = threshold_sweep(400, 1, alpha_grid(0.25, 3.0, 12), trials, seed, workers);
      auto crossing = [&](auto member) {
        for (const auto& row : line)
          if (row.fraction(row.*member) >= 0.5) return row.alpha;
        return 1e9;
      };
      o.expect(crossing(&SweepRow::giant_dust) < crossing(&SweepRow::connected), "giant plus dust precedes connectivity");
      for (const auto& row : line) o.expect(row.giant_dust >= row.connected, "giant plus dust dominates");
      return o;
    }));

    report.claims.push_back(run_claim("q-endpoint-maximum", [&] {
      Outcome o;
      std::vector<int> sizes{1000, 10000};
      for (int r : {2, 3})
        for (int a : {1, 2}) {
          const Rational alpha = a;
          if (alpha <= fraction(factorial(static_cast<unsigned>(r)), r + 1)) continue;
          for (int n : sizes) {
            const auto rep = endpoint_max_check(n, r, alpha);
            const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " alpha=" + std::to_string(a);
            o.expect(rep.argmax_at_endpoint, "endpoint argmax " + tag);
            o.expect(rep.max_value < 0, "negative maximum " + tag);
            o.expect(rep.sign_changes <= 1, "sign changes " + tag);
            o.expect(abs_value(rep.lower_value - lower_endpoint_limit(r, alpha)) <= fraction(10, n), "lower limit " + tag);
            o.expect(abs_value(rep.upper_value - upper_endpoint_limit(r, alpha)) <= fraction(10, n), "upper limit " + tag);
          }
        }
      return o;
    }));
  }

  report.claims.push_back(run_claim("determinism", [&] {
    Outcome o;
    const auto grid = alpha_grid(0.5, 3, 4);
    o.expect(sweep_csv(threshold_sweep(40, 2, grid, 20, seed, workers)) ==
                 sweep_csv(threshold_sweep(40, 2, grid, 20, seed, 1)),
             "sweep");
    const RandomModel model{30, 2, 0.01, seed};
    o.expect(complex_to_json(sample(model).complex()) == complex_to_json(sample(model).complex()), "sample");
    return o;
  }));

  return report;
}

} // namespace mcclab
