#include "mcclab/constructions.hpp"
#include "mcclab/homology.hpp"
#include "mcclab/io.hpp"
#include "mcclab/mcc.hpp"
#include "mcclab/qfunc.hpp"
#include "mcclab/random_complex.hpp"
#include "mcclab/rtrees.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace mcclab;

namespace {

class Criterion {
public:
  Criterion(int id, std::string name) : id_(id), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

  void within(double limit) { expect(seconds() < limit, "time limit " + std::to_string(limit) + " s"); }

  bool report() const {
    const bool ok = failures_.empty();
    std::printf("%s %2d %-28s checks=%zu seconds=%.2f", ok ? "PASS" : "FAIL", id_, name_.c_str(), checks_, seconds());
    for (std::size_t i = 0; i < failures_.size() && i < 10; ++i) std::printf(" | %s", failures_[i].c_str());
    if (failures_.size() > 10) std::printf(" | (+%zu more)", failures_.size() - 10);
    std::printf("\n");
    std::fflush(stdout);
    return ok;
  }

private:
  int id_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::string tag(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

std::map<std::pair<int, int>, std::vector<PureComplex>> corpus;

const std::vector<PureComplex>& mcc_corpus(int n, int r) {
  auto it = corpus.find({n, r});
  if (it == corpus.end()) it = corpus.emplace(std::pair{n, r}, enumerate_mcc(n, r)).first;
  return it->second;
}

std::vector<std::pair<int, int>> corpora() {
  std::vector<std::pair<int, int>> out;
  for (int r : {2, 3})
    for (int n = r + 1; n <= 6; ++n) out.emplace_back(n, r);
  return out;
}

// Facets containing each (r-1)-face, counted directly.
std::map<Facet, int> ridge_degrees(const PureComplex& y) {
  std::map<Facet, int> out;
  for (const auto& f : y.facets())
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Facet ridge = f;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(skip));
      ++out[ridge];
    }
  return out;
}

long subset_count(int n, int r, const std::function<bool(unsigned)>& keep) {
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == r + 1 && keep(mask)) ++count;
  return count;
}

Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

template <class Body>
bool run(int id, const std::string& name, Body&& body) {
  Criterion c(id, name);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  return c.report();
}

} // namespace

int main() {
  int failed = 0;

  failed += !run(1, "cayley-base-case", [](Criterion& c) {
    const long expected[] = {3, 16, 125, 1296};
    for (int n = 3; n <= 6; ++n) c.expect(count_mcc(n, 1) == expected[n - 3], "n=" + std::to_string(n));
    c.within(10);
  });

  failed += !run(2, "exact-mcc-counts", [](Criterion& c) {
    c.expect(mcc_corpus(4, 2).size() == 6, "M_2(4) = 6");
    for (int r = 2; r <= 4; ++r) c.expect(count_mcc(r + 1, r) == 1, "M_r(r+1) = 1 at r=" + std::to_string(r));
    for (int n : {5, 6}) {
      EnumerationOptions reverse;
      reverse.order = SearchOrder::Reverse;
      const auto& forward = mcc_corpus(n, 2);
      const auto backward = enumerate_mcc(n, 2, reverse);
      c.expect(std::set<PureComplex>(forward.begin(), forward.end()) ==
                   std::set<PureComplex>(backward.begin(), backward.end()),
               "order independence " + tag(n, 2));
    }
    c.within(120);
  });

  failed += !run(3, "treelike-count", [](Criterion& c) {
    for (auto [n, r, expected] : {std::tuple{5, 2, 15L}, std::tuple{7, 2, 735L}}) {
      const auto& all = mcc_corpus(n, r);
      const long filtered = std::count_if(all.begin(), all.end(), [](const PureComplex& y) { return is_treelike(y); });
      c.expect(filtered == expected, "filter " + tag(n, r));
      c.expect(count_treelike_formula(n, r) == expected, "formula " + tag(n, r));
    }
  });

  failed += !run(4, "r-tree-count", [](Criterion& c) {
    for (auto [n, r, expected] : {std::tuple{4, 2, 6L}, std::tuple{5, 2, 70L}, std::tuple{6, 2, 1215L}, std::tuple{5, 1, 125L}}) {
      const auto trees = enumerate_r_trees(n, r);
      c.expect(static_cast<long>(trees.size()) == expected, "enumerated " + tag(n, r));
      c.expect(count_r_trees(n, r) == expected, "formula " + tag(n, r));
    }
  });

  failed += !run(5, "kalai-identity", [](Criterion& c) {
    c.expect(kalai_sum(4, 2) == 4, "(4,2)");
    c.expect(kalai_sum(5, 2) == 125, "(5,2)");
    c.within(60);
  });

  failed += !run(6, "mcc-homology", [](Criterion& c) {
    for (auto [n, r] : corpora())
      for (const auto& y : mcc_corpus(n, r)) {
        const auto below = homology(y.complex(), r - 1);
        const auto top = homology(y.complex(), r);
        c.expect(below.torsion.empty(), "torsion in H_{r-1} " + complex_to_json(y.complex()));
        c.expect(top == HomologyGroup{}, "nonzero H_r " + complex_to_json(y.complex()));
        const auto degrees = ridge_degrees(y);
        for (const auto& f : y.facets()) {
          bool free_face = false;
          for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Facet ridge = f;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(skip));
            free_face |= degrees.at(ridge) == 1;
          }
          c.expect(free_face, "facet without free face " + complex_to_json(y.complex()));
        }
      }
  });

  failed += !run(7, "mcc-structure", [](Criterion& c) {
    for (auto [n, r] : corpora()) {
      const auto& level = mcc_corpus(n, r);
      const auto& next = mcc_corpus(n + 1, r);
      std::set<std::vector<Edge>> skeletons;
      std::set<PureComplex> images;
      for (const auto& y : level) {
        const int f = static_cast<int>(y.facet_count());
        c.expect((n - 1 + r - 1) / r <= f && f + r <= n, "facet count " + complex_to_json(y.complex()));
        const auto leaves = find_leaves(y);
        c.expect(std::any_of(leaves.begin(), leaves.end(), [](const LeafReport& l) { return l.external; }),
                 "no external leaf " + complex_to_json(y.complex()));
        skeletons.insert(one_skeleton(y.complex()));
        const auto z = extend_to_next(y);
        c.expect(is_mcc(z) && std::binary_search(next.begin(), next.end(), z), "extension outside M_r(n+1)");
        images.insert(z);
      }
      c.expect(skeletons.size() == level.size(), "repeated 1-skeleton " + tag(n, r));
      c.expect(images.size() == level.size(), "extension not injective " + tag(n, r));
    }
  });

  failed += !run(8, "r-tree-embedding", [](Criterion& c) {
    for (auto [n, r] : corpora()) {
      const auto& level = mcc_corpus(n, r);
      for (const auto& y : level) {
        const auto t = embed_in_r_tree(y);
        c.expect(is_r_tree(t, r), "not an r-tree " + complex_to_json(y.complex()));
        c.expect(t.contains(skeleton_graph(y.complex())), "skeleton not contained " + complex_to_json(y.complex()));
      }
    }
    for (auto& [key, level] : corpus) {
      const auto ledger = bound_chain(key.first, key.second, BigInt(static_cast<long>(level.size())));
      c.expect(ledger.lower_chain <= *ledger.exact_count && *ledger.exact_count <= ledger.upper_chain,
               "sandwich " + tag(key.first, key.second));
    }
  });

  failed += !run(9, "group-realization", [](Criterion& c) {
    const std::vector<std::pair<std::string, GroupSpec>> groups{
        {"Z", {1, {}}}, {"Z2", {0, {2}}}, {"Z3", {0, {3}}}, {"Z6", {0, {6}}}, {"Z+Z2", {1, {2}}}};
    for (const auto& [name, group] : groups)
      for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= (group.torsion.empty() ? r - 1 : r - 2); ++k) {
          const auto y = realize_group(group, k, r);
          const auto h = homology(y.complex(), k);
          const std::string where = name + " k=" + std::to_string(k) + " r=" + std::to_string(r);
          c.expect(y.dimension() == r && is_mcc(y) && verify_mcc_homology(y), "not an MCC " + where);
          c.expect(h.betti == static_cast<std::size_t>(group.free_rank), "betti " + where);
          c.expect(h.torsion == std::vector<BigInt>(group.torsion.begin(), group.torsion.end()), "torsion " + where);
        }
  });

  failed += !run(10, "q-r-subset-oracles", [](Criterion& c) {
    for (int n = 1; n <= 12; ++n)
      for (int r = 1; r <= 3; ++r) {
        for (int k = 0; k <= n; ++k) {
          const unsigned in = (1u << k) - 1;
          c.expect(big_Q(n, k, r) == subset_count(n, r, [&](unsigned m) { return (m & in) && (m & ~in); }),
                   "Q n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
        }
        if (n >= 2 * r + 2) {
          const unsigned a = (1u << (r + 1)) - 1, b = a << (r + 1);
          c.expect(big_R(n, r) == subset_count(n, r, [&](unsigned m) { return (m & a) && (m & b); }), "R " + tag(n, r));
        }
      }
  });

  failed += !run(11, "connectivity-thresholds", [](Criterion& c) {
    const double t_star = 2.0 / 3;
    const double r_factorial = 2;
    const auto rows = threshold_sweep(150, 2, {t_star / 3, 3 * t_star, r_factorial / 3, 3 * r_factorial}, 200, 0);
    c.expect(rows[0].fraction(rows[0].isolated_simplex) >= 0.9, "isolated simplex frequency below t*");
    c.expect(rows[1].fraction(rows[1].isolated_simplex) <= 0.1, "isolated simplex frequency above t*");
    c.expect(rows[1].fraction(rows[1].giant_dust) >= 0.9, "giant plus dust above t*");
    c.expect(rows[2].fraction(rows[2].isolated_vertex) >= 0.9, "isolated vertex frequency below r!");
    c.expect(rows[3].fraction(rows[3].isolated_vertex) <= 0.1, "isolated vertex frequency above r!");

    // Erdos-Renyi: giant plus dust settles near alpha = 1/2, connectivity near alpha = 1.
    const auto line = threshold_sweep(400, 1, {0.25, 1.0, 3.0}, 200, 0);
    c.expect(line[0].fraction(line[0].giant_dust) <= 0.1, "giant plus dust at alpha 1/4");
    c.expect(line[1].fraction(line[1].giant_dust) >= 0.9, "giant plus dust at alpha 1");
    c.expect(line[1].fraction(line[1].connected) < 0.9, "connectivity not yet settled at alpha 1");
    c.expect(line[2].fraction(line[2].connected) >= 0.9, "connectivity at alpha 3");
    for (const auto& row : line) c.expect(row.giant_dust >= row.connected, "giant plus dust dominates connectivity");
    c.within(300);
  });

  failed += !run(12, "q-endpoint-maximum", [](Criterion& c) {
    for (int r : {2, 3})
      for (int a : {1, 2}) {
        const Rational alpha = a;
        if (alpha <= fraction(factorial(static_cast<unsigned>(r)), r + 1)) continue;
        for (int n : {1000, 10000}) {
          const auto rep = endpoint_max_check(n, r, alpha);
          const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " alpha=" + std::to_string(a);
          c.expect(rep.argmax_at_endpoint, "interior argmax " + where);
          c.expect(rep.max_value < 0, "nonnegative maximum " + where);
          c.expect(rep.sign_changes <= 1, "sign changes " + where);
          const auto lower_gap = abs_value(rep.lower_value - lower_endpoint_limit(r, alpha));
          const auto upper_gap = abs_value(rep.upper_value - upper_endpoint_limit(r, alpha));
          std::ostringstream gaps;
          gaps.precision(4);
          gaps << " (n*gap = " << Rational(lower_gap * n).get_d() << ", " << Rational(upper_gap * n).get_d() << ")";
          c.expect(lower_gap <= fraction(10, n), "lower endpoint off its limit " + where + gaps.str());
          c.expect(upper_gap <= fraction(10, n), "upper endpoint off -2 alpha r A_r " + where + gaps.str());
        }
      }
    c.within(120);
  });

  failed += !run(13, "determinism", [](Criterion& c) {
    const auto grid = alpha_grid(0.1, 4, 9);
    c.expect(sweep_csv(threshold_sweep(60, 2, grid, 50, 11)) == sweep_csv(threshold_sweep(60, 2, grid, 50, 11, 1)),
             "sweep");
    c.expect(sweep_csv(threshold_sweep(100, 1, grid, 50, 3)) == sweep_csv(threshold_sweep(100, 1, grid, 50, 3)),
             "sweep r=1");
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
      const RandomModel model{25, 3, 0.01, seed};
      c.expect(complex_to_json(sample(model).complex()) == complex_to_json(sample(model).complex()), "sample");
      c.expect(trial_statistics(model) == trial_statistics(model), "trial statistics");
    }
  });

  std::printf("%d of 13 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
