#include "mcclab/complex.hpp"

#include "mcclab/disjoint_sets.hpp"
#include "mcclab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace mcclab {

namespace {

std::string show(const Facet& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f[i]);
  }
  return out + "}";
}

void normalize_facet(Facet& f, int n) {
  if (f.empty()) throw DomainError("empty facet");
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end())
    throw DomainError("repeated vertex in facet " + show(f));
  if (f.front() < 1 || f.back() > n)
    throw DomainError("vertex out of range 1.." + std::to_string(n) + " in facet " + show(f));
}

bool contains(const Facet& big, const Facet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Calls visit(subset) for every k-element subset of `f`, in lexicographic order.
template <class Visit>
void for_each_subset(const Facet& f, std::size_t k, Visit&& visit) {
  if (k > f.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Facet sub(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = f[idx[i]];
    visit(sub);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == f.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Facet> facets)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  for (auto& f : facets) normalize_facet(f, vertex_count);
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Only facets of different sizes can be nested.
  std::vector<const Facet*> by_size;
  by_size.reserve(facets.size());
  for (const auto& f : facets) by_size.push_back(&f);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Facet* a, const Facet* b) { return a->size() < b->size(); });
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    for (std::size_t j = by_size.size(); j-- > i + 1;) {
      if (by_size[j]->size() == by_size[i]->size()) break;
      if (contains(*by_size[j], *by_size[i]))
        throw DomainError("facet " + show(*by_size[i]) + " is contained in facet " +
                          show(*by_size[j]));
    }
  }

  std::erase_if(facets, [](const Facet& f) { return f.size() == 1; });
  facets_ = std::move(facets);
}

int SimplicialComplex::dimension() const {
  if (vertex_count_ == 0) return -1;
  std::size_t top = 1;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::has_facet(const Facet& facet) const {
  return std::binary_search(facets_.begin(), facets_.end(), facet);
}

std::vector<int> SimplicialComplex::vertex_degrees() const {
  std::vector<int> degree(static_cast<std::size_t>(vertex_count_) + 1, 0);
  for (const auto& f : facets_)
    for (Vertex v : f) ++degree[static_cast<std::size_t>(v)];
  return degree;
}

PureComplex::PureComplex(int vertex_count, int dimension, std::vector<Facet> facets) {
  if (dimension < 1) throw DomainError("pure complex dimension must be at least 1");
  for (auto& f : facets) {
    normalize_facet(f, vertex_count);
    if (f.size() != static_cast<std::size_t>(dimension) + 1)
      throw DomainError("facet " + show(f) + " does not have " +
                        std::to_string(dimension + 1) + " vertices");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  complex_ = SimplicialComplex(SimplicialComplex::Trusted{}, vertex_count, std::move(facets));
  dimension_ = dimension;
}

PureComplex::PureComplex(SimplicialComplex complex, int dimension)
    : complex_(std::move(complex)), dimension_(dimension) {
  if (dimension < 1) throw DomainError("pure complex dimension must be at least 1");
  for (const auto& f : complex_.facets())
    if (f.size() != static_cast<std::size_t>(dimension) + 1)
      throw DomainError("complex is not pure of dimension " + std::to_string(dimension));
}

std::vector<std::size_t> ComponentPartition::block_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

std::size_t ComponentPartition::nontrivial_block_count() const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() > 1; }));
}

SimplicialComplex remove_facet(const SimplicialComplex& complex, const Facet& facet) {
  auto facets = complex.facets();
  auto it = std::lower_bound(facets.begin(), facets.end(), facet);
  if (it == facets.end() || *it != facet)
    throw DomainError("not a facet: " + show(facet));
  facets.erase(it);
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

PureComplex remove_facet(const PureComplex& complex, const Facet& facet) {
  return PureComplex(remove_facet(complex.complex(), facet), complex.dimension());
}

ComponentPartition connected_components(const SimplicialComplex& complex) {
  const auto n = static_cast<std::size_t>(complex.vertex_count());
  DisjointSets sets(n + 1);
  for (const auto& f : complex.facets())
    for (std::size_t i = 1; i < f.size(); ++i)
      sets.unite(static_cast<std::size_t>(f[0]), static_cast<std::size_t>(f[i]));

  ComponentPartition out;
  std::vector<std::ptrdiff_t> block_of_root(n + 1, -1);
  for (std::size_t v = 1; v <= n; ++v) {
    const auto root = sets.find(v);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<std::ptrdiff_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[static_cast<std::size_t>(block_of_root[root])].push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool is_connected(const SimplicialComplex& complex) {
  if (complex.vertex_count() == 0) return false;
  return connected_components(complex).block_count() == 1;
}

std::vector<Facet> free_faces(const PureComplex& complex, const Facet& facet) {
  if (!complex.complex().has_facet(facet)) throw DomainError("not a facet: " + show(facet));
  std::vector<Facet> out;
  for_each_subset(facet, facet.size() - 1, [&](const Facet& face) {
    for (const auto& other : complex.facets())
      if (other != facet && contains(other, face)) return;
    out.push_back(face);
  });
  return out;
}

SimplicialComplex collapse(const SimplicialComplex& complex) {
  // Every face, indexed in lexicographic order.
  std::set<Facet> all;
  for (const auto& f : complex.facets())
    for (std::size_t k = 1; k <= f.size(); ++k)
      for_each_subset(f, k, [&](const Facet& s) { all.insert(s); });

  std::vector<Facet> simplex(all.begin(), all.end());
  std::map<Facet, std::size_t> id;
  for (std::size_t i = 0; i < simplex.size(); ++i) id.emplace(simplex[i], i);

  std::vector<std::vector<std::size_t>> cofaces(simplex.size()), faces(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (simplex[i].size() < 2) continue;
    for_each_subset(simplex[i], simplex[i].size() - 1, [&](const Facet& s) {
      const auto j = id.at(s);
      faces[i].push_back(j);
      cofaces[j].push_back(i);
    });
  }

  std::vector<char> alive(simplex.size(), 1);
  std::vector<std::size_t> live_cofaces(simplex.size());
  std::set<std::size_t> free;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    live_cofaces[i] = cofaces[i].size();
    if (live_cofaces[i] == 1) free.insert(i);
  }

  auto drop = [&](std::size_t s) {
    alive[s] = 0;
    free.erase(s);
    for (auto f : faces[s]) {
      if (!alive[f]) continue;
      --live_cofaces[f];
      if (live_cofaces[f] == 1) free.insert(f);
      else free.erase(f);
    }
  };

  while (!free.empty()) {
    const auto sigma = *free.begin();
    std::size_t tau = simplex.size();
    for (auto c : cofaces[sigma])
      if (alive[c]) tau = c;
    drop(tau);
    drop(sigma);
  }

  std::vector<Vertex> new_label(static_cast<std::size_t>(complex.vertex_count()) + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= complex.vertex_count(); ++v) {
    auto it = id.find(Facet{v});
    if (it == id.end() || alive[it->second]) new_label[static_cast<std::size_t>(v)] = ++next;
  }

  std::vector<Facet> maximal;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (!alive[i] || live_cofaces[i] != 0 || simplex[i].size() < 2) continue;
    Facet f;
    for (Vertex v : simplex[i]) f.push_back(new_label[static_cast<std::size_t>(v)]);
    maximal.push_back(std::move(f));
  }
  return SimplicialComplex(next, std::move(maximal));
}

SimplicialComplex wedge(const SimplicialComplex& first, Vertex v1,
                        const SimplicialComplex& second, Vertex v2) {
  if (v1 < 1 || v1 > first.vertex_count() || v2 < 1 || v2 > second.vertex_count())
    throw DomainError("wedge vertex out of range");
  const int n1 = first.vertex_count();
  std::vector<Vertex> label(static_cast<std::size_t>(second.vertex_count()) + 1);
  int next = n1;
  for (Vertex u = 1; u <= second.vertex_count(); ++u)
    label[static_cast<std::size_t>(u)] = (u == v2) ? v1 : ++next;

  auto facets = first.facets();
  for (const auto& f : second.facets()) {
    Facet g;
    for (Vertex u : f) g.push_back(label[static_cast<std::size_t>(u)]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(n1 + second.vertex_count() - 1, std::move(facets));
}

PureComplex wedge(const PureComplex& first, Vertex v1, const PureComplex& second, Vertex v2) {
  if (first.dimension() != second.dimension())
    throw DomainError("wedge of pure complexes of different dimensions");
  return PureComplex(wedge(first.complex(), v1, second.complex(), v2), first.dimension());
}

std::vector<Facet> faces_of_dimension(const SimplicialComplex& complex, int k) {
  if (k < 0) return {};
  if (k == 0) {
    std::vector<Facet> out;
    for (Vertex v = 1; v <= complex.vertex_count(); ++v) out.push_back({v});
    return out;
  }
  std::set<Facet> found;
  for (const auto& f : complex.facets())
    for_each_subset(f, static_cast<std::size_t>(k) + 1, [&](const Facet& s) { found.insert(s); });
  return {found.begin(), found.end()};
}

std::vector<Edge> one_skeleton(const SimplicialComplex& complex) {
  std::set<Edge> edges;
  for (const auto& f : complex.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.emplace(f[i], f[j]);
  return {edges.begin(), edges.end()};
}

SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<Vertex>& perm) {
  if (perm.size() != static_cast<std::size_t>(complex.vertex_count()) + 1)
    throw DomainError("relabeling has the wrong size");
  std::vector<Facet> facets;
  for (const auto& f : complex.facets()) {
    Facet g;
    for (Vertex v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
    facets.push_back(std::move(g));
  }
  return SimplicialComplex(complex.vertex_count(), std::move(facets));
}

} // namespace mcclab
