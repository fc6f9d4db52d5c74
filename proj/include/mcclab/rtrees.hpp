#pragma once

#include "mcclab/bigint.hpp"
#include "mcclab/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mcclab {

/// Simple undirected graph on {1..n}; edges stored as ascending pairs, sorted.
class Graph {
public:
  Graph() = default;
  // Throws DomainError on loops, repeated edges or out-of-range labels.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;

  // Neighbor lists indexed 1..n.
  std::vector<std::vector<Vertex>> adjacency() const;

  // Same vertex set and every edge of `other` present here.
  bool contains(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph& a, const Graph& b) {
    if (auto c = a.vertex_count_ <=> b.vertex_count_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

Graph skeleton_graph(const SimplicialComplex& complex);

// C(n, r) [r(n-r)+1]^(n-r-2), with n = r and n = r + 1 both giving 1.
BigInt count_r_trees(int n, int r);

// Every labeled r-tree on {1..n}, sorted. Throws BudgetExceeded beyond desk scale.
std::vector<Graph> enumerate_r_trees(int n, int r, std::optional<std::uint64_t> max_states = std::nullopt);

// Reverse elimination: strip degree-r vertices with clique neighborhoods
// until K_r remains.
bool is_r_tree(const Graph& graph, int r);

/// Exact treewidth by dynamic programming over vertex subsets, together with
/// an elimination ordering that attains it.
struct TreewidthResult {
  int width = -1;
  std::vector<Vertex> elimination_order;
};

TreewidthResult exact_treewidth(const Graph& graph);

// Subgraph of some r-tree on the same vertex set, i.e. treewidth <= r.
bool is_partial_r_tree(const Graph& graph, int r);

// An r-tree containing `graph`, built from an elimination ordering of width
// at most r. Throws DomainError when the ordering is too wide.
Graph complete_to_r_tree(const Graph& graph, int r, const std::vector<Vertex>& elimination_order);

/**
 * An r-tree on {1..n} containing the 1-skeleton of a minimal connected cover.
 *
 * Peels an external leaf branch, embeds the remainder recursively, then
 * reattaches the k leaves of the branch: leaf v_j joins v_1..v_{j-1} and
 * r-j+1 vertices of an r-clique containing the branch's attaching face.
 * Branches whose attaching face is not a face of the remainder cannot be
 * reattached this way; if no branch qualifies the embedding falls back to an
 * elimination ordering of the whole 1-skeleton. Throws InvariantViolation
 * when the 1-skeleton has treewidth above r and DomainError when the input
 * is not a minimal connected cover.
 */
Graph embed_in_r_tree(const PureComplex& complex);

} // namespace mcclab
