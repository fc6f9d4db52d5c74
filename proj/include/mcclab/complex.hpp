#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace mcclab {

// Vertices are labeled 1..n.
using Vertex = int;

// A simplex stored as a strictly ascending vertex list.
using Facet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/**
 * A finite simplicial complex on the vertex set {1..n}, stored by its facets.
 *
 * Facets form an antichain kept in lexicographic order, so two complexes are
 * equal exactly when their facet sets are. Lower faces are never stored.
 * Vertices that lie in no facet are isolated vertices; a singleton facet given
 * to the constructor is accepted and folded into that implicit state.
 */
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  // Throws DomainError on out-of-range vertices, empty facets or when one
  // facet is contained in another. Duplicate facets are merged.
  SimplicialComplex(int vertex_count, std::vector<Facet> facets);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  // Largest facet dimension; 0 when there are vertices but no facets, -1 when
  // the vertex set is empty.
  int dimension() const;

  bool has_facet(const Facet& facet) const;

  // Number of facets containing each vertex, indexed 1..n (slot 0 unused).
  std::vector<int> vertex_degrees() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
  friend auto operator<=>(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (auto c = a.vertex_count_ <=> b.vertex_count_; c != 0) return c;
    return a.facets_ <=> b.facets_;
  }

private:
  struct Trusted {};
  SimplicialComplex(Trusted, int vertex_count, std::vector<Facet> facets)
      : vertex_count_(vertex_count), facets_(std::move(facets)) {}

  friend class PureComplex;

  int vertex_count_ = 0;
  std::vector<Facet> facets_;
};

/// A simplicial complex whose facets all have exactly r + 1 vertices, r >= 1.
class PureComplex {
public:
  PureComplex(int vertex_count, int dimension, std::vector<Facet> facets);
  PureComplex(SimplicialComplex complex, int dimension);

  const SimplicialComplex& complex() const { return complex_; }
  int dimension() const { return dimension_; }
  int vertex_count() const { return complex_.vertex_count(); }
  const std::vector<Facet>& facets() const { return complex_.facets(); }
  std::size_t facet_count() const { return complex_.facet_count(); }

  friend bool operator==(const PureComplex&, const PureComplex&) = default;
  friend auto operator<=>(const PureComplex& a, const PureComplex& b) {
    if (auto c = a.dimension_ <=> b.dimension_; c != 0) return c;
    return a.complex_ <=> b.complex_;
  }

private:
  SimplicialComplex complex_;
  int dimension_ = 1;
};

/// Connected components; isolated vertices are singleton blocks.
struct ComponentPartition {
  // Each block ascending; blocks ordered by smallest vertex.
  std::vector<std::vector<Vertex>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  std::vector<std::size_t> block_sizes() const;
  // Blocks with more than one vertex.
  std::size_t nontrivial_block_count() const;
};

SimplicialComplex remove_facet(const SimplicialComplex& complex, const Facet& facet);
PureComplex remove_facet(const PureComplex& complex, const Facet& facet);

ComponentPartition connected_components(const SimplicialComplex& complex);

// A complex with no vertices is not connected; n = 1 with no facets is.
bool is_connected(const SimplicialComplex& complex);

// (r-1)-faces of `facet` that lie in no other facet of `complex`.
std::vector<Facet> free_faces(const PureComplex& complex, const Facet& facet);

/**
 * Greedy elementary collapse. Repeatedly removes the lexicographically
 * smallest free face together with its unique coface until no free face is
 * left. Vertices removed by the collapse disappear; survivors are relabeled
 * 1..m in increasing order, so a collapsible complex becomes a single vertex.
 */
SimplicialComplex collapse(const SimplicialComplex& complex);

// One-point union: v2 of `second` is identified with v1 of `first`; the other
// vertices of `second` are relabeled n1+1.. in increasing order.
SimplicialComplex wedge(const SimplicialComplex& first, Vertex v1,
                        const SimplicialComplex& second, Vertex v2);
PureComplex wedge(const PureComplex& first, Vertex v1, const PureComplex& second,
                  Vertex v2);

// All k-dimensional faces (k + 1 vertices), sorted lexicographically.
std::vector<Facet> faces_of_dimension(const SimplicialComplex& complex, int k);

// Edges of the 1-skeleton, sorted.
std::vector<Edge> one_skeleton(const SimplicialComplex& complex);

// Applies a vertex permutation (perm[v] is the new label of v, slot 0 unused).
SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<Vertex>& perm);

} // namespace mcclab
