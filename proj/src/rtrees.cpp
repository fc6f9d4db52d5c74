#include "mcclab/rtrees.hpp"

#include "mcclab/budget.hpp"
#include "mcclab/errors.hpp"
#include "mcclab/mcc.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <set>
#include <string>

namespace mcclab {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 1 || b > vertex_count)
      throw DomainError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw DomainError("repeated edge");
  edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(vertex_count_) + 1);
  for (const auto& [a, b] : edges_) {
    out[static_cast<std::size_t>(a)].push_back(b);
    out[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : out) std::sort(row.begin(), row.end());
  return out;
}

bool Graph::contains(const Graph& other) const {
  return vertex_count_ == other.vertex_count_ &&
         std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

Graph skeleton_graph(const SimplicialComplex& complex) {
  return Graph(complex.vertex_count(), one_skeleton(complex));
}

BigInt count_r_trees(int n, int r) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (n < r) throw DomainError("an r-tree needs at least r vertices");
  if (n <= r + 1) return 1;
  return binomial(n, r) * power(r * (n - r) + 1, static_cast<unsigned long>(n - r - 2));
}

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

// Adjacency-matrix r-tree under construction, with its complete list of
// r-cliques.
class RTreeBuilder {
public:
  RTreeBuilder(int n, int r, const Facet& base)
      : n_(n), r_(r), adj_(static_cast<std::size_t>(n) + 1, std::vector<char>(static_cast<std::size_t>(n) + 1, 0)) {
    if (static_cast<int>(base.size()) != r) throw DomainError("base clique must have r vertices");
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) link(base[i], base[j]);
    cliques_.push_back(base);
  }

  bool adjacent(Vertex a, Vertex b) const {
    return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0;
  }

  bool is_clique(const Facet& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adjacent(vs[i], vs[j])) return false;
    return true;
  }

  // Joins a new vertex to an existing r-clique.
  void attach(Vertex v, Facet clique) {
    std::sort(clique.begin(), clique.end());
    if (static_cast<int>(clique.size()) != r_ || !is_clique(clique))
      throw InvariantViolation("attachment set is not an r-clique");
    for (Vertex u : clique) link(v, u);
    for (std::size_t drop = 0; drop < clique.size(); ++drop) {
      Facet next = clique;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(drop));
      next.insert(std::upper_bound(next.begin(), next.end(), v), v);
      cliques_.push_back(std::move(next));
    }
  }

  // Lexicographically smallest r-clique containing `part`.
  std::optional<Facet> clique_containing(const Facet& part) const {
    std::optional<Facet> best;
    for (const auto& k : cliques_)
      if (std::includes(k.begin(), k.end(), part.begin(), part.end()) && (!best || k < *best)) best = k;
    return best;
  }

  Graph graph() const {
    std::vector<Edge> edges;
    for (Vertex a = 1; a <= n_; ++a)
      for (Vertex b = a + 1; b <= n_; ++b)
        if (adjacent(a, b)) edges.emplace_back(a, b);
    return Graph(n_, std::move(edges));
  }

private:
  void link(Vertex a, Vertex b) {
    adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adj_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }

  int n_;
  int r_;
  std::vector<std::vector<char>> adj_;
  std::vector<Facet> cliques_;
};

} // namespace

std::vector<Graph> enumerate_r_trees(int n, int r, std::optional<std::uint64_t> max_states) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  if (n < r) throw DomainError("an r-tree needs at least r vertices");

  BigInt states = 0;
  for (int m = r; m <= n; ++m) states += binomial(n, m) * count_r_trees(m, r);
  const auto limit = max_states.value_or(work_budget(budget::kRTrees));
  if (n > 63 || states > BigInt(std::to_string(limit), 10))
    throw BudgetExceeded("enumerating " + std::to_string(r) + "-trees on " + std::to_string(n) +
                         " vertices visits about " + states.get_str() + " states, budget is " +
                         std::to_string(limit));

  struct State {
    Mask used = 0;
    std::vector<Mask> adj;  // index v-1
    std::vector<Mask> cliques;
  };
  const Mask all = (Mask{1} << n) - 1;
  std::set<std::vector<Mask>> seen;
  std::set<Graph> found;

  auto key_of = [](const State& s) {
    auto key = s.adj;
    key.push_back(s.used);
    return key;
  };
  auto to_graph = [n](const State& s) {
    std::vector<Edge> edges;
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b)
        if (s.adj[static_cast<std::size_t>(a - 1)] & bit(b)) edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
  };

  std::function<void(const State&)> grow = [&](const State& s) {
    if (s.used == all) {
      found.insert(to_graph(s));
      return;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (s.used & bit(v)) continue;
      for (Mask k : s.cliques) {
        State next = s;
        next.used |= bit(v);
        for (Mask rest = k; rest; rest &= rest - 1) {
          const auto u = std::countr_zero(rest) + 1;
          next.adj[static_cast<std::size_t>(u - 1)] |= bit(v);
          next.adj[static_cast<std::size_t>(v - 1)] |= bit(u);
          next.cliques.push_back((k & ~bit(u)) | bit(v));
        }
        if (seen.insert(key_of(next)).second) grow(next);
      }
    }
  };

  // Root cliques: every r-subset of the labels.
  std::vector<Vertex> pick;
  std::function<void(Vertex)> roots = [&](Vertex start) {
    if (static_cast<int>(pick.size()) == r) {
      State s;
      s.adj.assign(static_cast<std::size_t>(n), 0);
      Mask k = 0;
      for (Vertex v : pick) k |= bit(v);
      s.used = k;
      for (Vertex v : pick) s.adj[static_cast<std::size_t>(v - 1)] = k & ~bit(v);
      s.cliques.push_back(k);
      if (seen.insert(key_of(s)).second) grow(s);
      return;
    }
    for (Vertex v = start; v <= n; ++v) {
      pick.push_back(v);
      roots(v + 1);
      pick.pop_back();
    }
  };
  roots(1);
  return {found.begin(), found.end()};
}

bool is_r_tree(const Graph& graph, int r) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  const int n = graph.vertex_count();
  if (n < r) return false;
  const auto expected = static_cast<std::size_t>(r * (r - 1) / 2 + r * (n - r));
  if (graph.edge_count() != expected) return false;

  const auto nn = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<char>> adj(nn, std::vector<char>(nn, 0));
  for (const auto& [a, b] : graph.edges())
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
        adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  std::vector<char> alive(nn, 1);
  alive[0] = 0;

  auto live_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u = 1; u <= n; ++u)
      if (alive[static_cast<std::size_t>(u)] && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
        out.push_back(u);
    return out;
  };
  auto clique = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adj[static_cast<std::size_t>(vs[i])][static_cast<std::size_t>(vs[j])]) return false;
    return true;
  };

  for (int remaining = n; remaining > r; --remaining) {
    Vertex removable = 0;
    for (Vertex v = 1; v <= n && !removable; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      const auto nbrs = live_neighbors(v);
      if (static_cast<int>(nbrs.size()) == r && clique(nbrs)) removable = v;
    }
    if (!removable) return false;
    alive[static_cast<std::size_t>(removable)] = 0;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= n; ++v)
    if (alive[static_cast<std::size_t>(v)]) rest.push_back(v);
  return clique(rest);
}

TreewidthResult exact_treewidth(const Graph& graph) {
  const int n = graph.vertex_count();
  if (n > budget::kTreewidthVertices)
    throw BudgetExceeded("exact treewidth is limited to " + std::to_string(budget::kTreewidthVertices) +
                         " vertices");
  TreewidthResult out;
  if (n == 0) return out;

  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : graph.edges()) {
    adj[static_cast<std::size_t>(a - 1)] |= bit(b);
    adj[static_cast<std::size_t>(b - 1)] |= bit(a);
  }
  // Vertices outside S + {v} reachable from v through S.
  auto q_size = [&](Mask s, int v) {
    Mask frontier = adj[static_cast<std::size_t>(v)];
    Mask visited = frontier | (Mask{1} << v);
    Mask q = frontier & ~s;
    Mask inner = frontier & s;
    while (inner) {
      const int u = std::countr_zero(inner);
      inner &= inner - 1;
      const Mask fresh = adj[static_cast<std::size_t>(u)] & ~visited;
      visited |= fresh;
      q |= fresh & ~s;
      inner |= fresh & s;
    }
    return std::popcount(q & ~(Mask{1} << v));
  };

  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int8_t> tw(states, std::numeric_limits<std::int8_t>::max());
  std::vector<std::int8_t> last(states, -1);
  tw[0] = -1;
  for (std::size_t s = 1; s < states; ++s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask before = s & ~(Mask{1} << v);
      const int value = std::max<int>(tw[before], q_size(before, v));
      if (value < tw[s]) {
        tw[s] = static_cast<std::int8_t>(value);
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  out.width = std::max<int>(0, tw[states - 1]);
  std::vector<Vertex> reversed;
  for (std::size_t s = states - 1; s; s &= ~(std::size_t{1} << last[s]))
    reversed.push_back(last[s] + 1);
  out.elimination_order.assign(reversed.rbegin(), reversed.rend());
  return out;
}

bool is_partial_r_tree(const Graph& graph, int r) {
  if (r < 1) throw DomainError("dimension must be at least 1");
  const int n = graph.vertex_count();
  if (n < r) return false;
  if (n == r) return true;
  return exact_treewidth(graph).width <= r;
}

Graph complete_to_r_tree(const Graph& graph, int r, const std::vector<Vertex>& order) {
  const int n = graph.vertex_count();
  if (r < 1 || n < r) throw DomainError("an r-tree needs at least r vertices");
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(i)] != i + 1)
        throw DomainError("elimination order is not a permutation of the vertices");
  }

  // Eliminate in order, recording each vertex's later neighbors in the filled graph.
  auto adj = graph.adjacency();
  std::vector<std::set<Vertex>> nbr(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) nbr[v].insert(adj[v].begin(), adj[v].end());
  std::vector<Facet> higher(adj.size());
  for (Vertex v : order) {
    auto& nv = nbr[static_cast<std::size_t>(v)];
    higher[static_cast<std::size_t>(v)].assign(nv.begin(), nv.end());
    for (Vertex a : nv)
      for (Vertex b : nv)
        if (a != b) nbr[static_cast<std::size_t>(a)].insert(b);
    for (Vertex a : nv) nbr[static_cast<std::size_t>(a)].erase(v);
    nv.clear();
  }

  Facet base(order.end() - r, order.end());
  std::sort(base.begin(), base.end());
  RTreeBuilder builder(n, r, base);
  for (auto i = static_cast<std::ptrdiff_t>(n - r) - 1; i >= 0; --i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    const auto& h = higher[static_cast<std::size_t>(v)];
    if (static_cast<int>(h.size()) > r)
      throw DomainError("elimination order has width above " + std::to_string(r));
    const auto k = builder.clique_containing(h);
    if (!k) throw InvariantViolation("no r-clique contains an eliminated neighborhood");
    builder.attach(v, *k);
  }
  return builder.graph();
}

namespace {

// Lower bound on treewidth: the largest minimum degree over the peeling order.
int degeneracy(const Graph& graph) {
  auto adj = graph.adjacency();
  std::vector<std::set<Vertex>> nbr(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) nbr[v].insert(adj[v].begin(), adj[v].end());
  std::set<Vertex> alive;
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) alive.insert(v);
  int best = 0;
  while (!alive.empty()) {
    Vertex pick = *alive.begin();
    for (Vertex v : alive)
      if (nbr[static_cast<std::size_t>(v)].size() < nbr[static_cast<std::size_t>(pick)].size()) pick = v;
    best = std::max(best, static_cast<int>(nbr[static_cast<std::size_t>(pick)].size()));
    for (Vertex u : nbr[static_cast<std::size_t>(pick)]) nbr[static_cast<std::size_t>(u)].erase(pick);
    alive.erase(pick);
  }
  return best;
}

// Greedy min-fill elimination ordering.
std::vector<Vertex> min_fill_order(const Graph& graph) {
  auto adj = graph.adjacency();
  std::vector<std::set<Vertex>> nbr(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) nbr[v].insert(adj[v].begin(), adj[v].end());
  std::set<Vertex> alive;
  for (Vertex v = 1; v <= graph.vertex_count(); ++v) alive.insert(v);
  std::vector<Vertex> order;
  while (!alive.empty()) {
    Vertex pick = 0;
    std::size_t best_fill = 0;
    for (Vertex v : alive) {
      const auto& nv = nbr[static_cast<std::size_t>(v)];
      std::size_t fill = 0;
      for (auto a = nv.begin(); a != nv.end(); ++a)
        for (auto b = std::next(a); b != nv.end(); ++b)
          if (!nbr[static_cast<std::size_t>(*a)].count(*b)) ++fill;
      if (!pick || fill < best_fill ||
          (fill == best_fill && nv.size() < nbr[static_cast<std::size_t>(pick)].size())) {
        pick = v;
        best_fill = fill;
      }
    }
    auto& np = nbr[static_cast<std::size_t>(pick)];
    for (Vertex a : np)
      for (Vertex b : np)
        if (a != b) nbr[static_cast<std::size_t>(a)].insert(b);
    for (Vertex a : np) nbr[static_cast<std::size_t>(a)].erase(pick);
    np.clear();
    alive.erase(pick);
    order.push_back(pick);
  }
  return order;
}

int order_width(const Graph& graph, const std::vector<Vertex>& order) {
  auto adj = graph.adjacency();
  std::vector<std::set<Vertex>> nbr(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) nbr[v].insert(adj[v].begin(), adj[v].end());
  int width = 0;
  for (Vertex v : order) {
    auto& nv = nbr[static_cast<std::size_t>(v)];
    width = std::max(width, static_cast<int>(nv.size()));
    for (Vertex a : nv)
      for (Vertex b : nv)
        if (a != b) nbr[static_cast<std::size_t>(a)].insert(b);
    for (Vertex a : nv) nbr[static_cast<std::size_t>(a)].erase(v);
    nv.clear();
  }
  return width;
}

std::optional<RTreeBuilder> peel_and_embed(int n, int r, const std::vector<Facet>& facets) {
  if (facets.size() == 1) {
    const auto& sigma = facets.front();
    RTreeBuilder builder(n, r, Facet(sigma.begin(), sigma.end() - 1));
    builder.attach(sigma.back(), Facet(sigma.begin(), sigma.end() - 1));
    return builder;
  }

  const PureComplex complex(n, r, facets);
  const auto degree = complex.complex().vertex_degrees();
  std::set<Facet> tried;
  for (const auto& leaf : find_leaves(complex)) {
    if (!leaf.external || !tried.insert(leaf.branch).second) continue;
    const auto& sigma = leaf.branch;
    Facet leaves, tau;
    for (Vertex v : sigma) (degree[static_cast<std::size_t>(v)] == 1 ? leaves : tau).push_back(v);

    std::vector<Facet> rest;
    for (const auto& f : facets)
      if (f != sigma) rest.push_back(f);
    const bool attaches = std::any_of(rest.begin(), rest.end(), [&](const Facet& f) {
      return std::includes(f.begin(), f.end(), tau.begin(), tau.end());
    });
    if (!attaches) continue;

    auto builder = peel_and_embed(n, r, rest);
    if (!builder) return std::nullopt;
    const auto anchor = builder->clique_containing(tau);
    if (!anchor) return std::nullopt;
    Facet extra;
    std::set_difference(anchor->begin(), anchor->end(), tau.begin(), tau.end(), std::back_inserter(extra));

    // Leaf v_j joins v_1..v_{j-1}, all of tau and the first k-j extra anchor vertices.
    const auto k = leaves.size();
    for (std::size_t j = 0; j < k; ++j) {
      Facet attach(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(j));
      attach.insert(attach.end(), tau.begin(), tau.end());
      attach.insert(attach.end(), extra.begin(), extra.begin() + static_cast<std::ptrdiff_t>(k - 1 - j));
      builder->attach(leaves[j], std::move(attach));
    }
    return builder;
  }
  return std::nullopt;
}

} // namespace

Graph embed_in_r_tree(const PureComplex& complex) {
  if (!is_mcc(complex)) throw DomainError("embed_in_r_tree needs a minimal connected cover");
  const int n = complex.vertex_count();
  const int r = complex.dimension();
  if (auto builder = peel_and_embed(n, r, complex.facets())) return builder->graph();

  const auto skeleton = skeleton_graph(complex.complex());
  const auto too_wide = [&](int width) {
    return InvariantViolation("1-skeleton has treewidth at least " + std::to_string(width) +
                              ", so no " + std::to_string(r) + "-tree contains it");
  };
  if (const int lower = degeneracy(skeleton); lower > r) throw too_wide(lower);
  auto order = min_fill_order(skeleton);
  if (order_width(skeleton, order) > r) {
    const auto exact = exact_treewidth(skeleton);
    if (exact.width > r) throw too_wide(exact.width);
    order = exact.elimination_order;
  }
  return complete_to_r_tree(skeleton, r, order);
}

} // namespace mcclab
