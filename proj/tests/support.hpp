#pragma once

#include "mcclab/complex.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace testing {

// Random antichain complex on n vertices with facets of size 2..max_size.
inline mcclab::SimplicialComplex random_complex(std::mt19937& rng, int n, int max_size,
                                                int attempts) {
  std::vector<mcclab::Facet> facets;
  if (n < 2) return mcclab::SimplicialComplex(n, facets);
  std::uniform_int_distribution<int> size_dist(2, std::max(2, std::min(max_size, n)));
  for (int a = 0; a < attempts; ++a) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    mcclab::Facet f(pool.begin(), pool.begin() + size_dist(rng));
    std::sort(f.begin(), f.end());
    bool nested = false;
    for (const auto& g : facets)
      if (std::includes(g.begin(), g.end(), f.begin(), f.end()) ||
          std::includes(f.begin(), f.end(), g.begin(), g.end()))
        nested = true;
    if (!nested) facets.push_back(f);
  }
  return mcclab::SimplicialComplex(n, facets);
}

// Reachability by repeated relaxation over an adjacency matrix.
inline std::vector<std::vector<bool>> transitive_closure(const mcclab::SimplicialComplex& c) {
  const auto n = static_cast<std::size_t>(c.vertex_count());
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t v = 1; v <= n; ++v) reach[v][v] = true;
  for (const auto& f : c.facets())
    for (auto a : f)
      for (auto b : f) reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

// Every nonempty subset of every facet, as a set.
inline std::set<mcclab::Facet> all_faces(const mcclab::SimplicialComplex& c) {
  std::set<mcclab::Facet> out;
  for (const auto& f : c.facets()) {
    const auto k = f.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      mcclab::Facet s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      out.insert(s);
    }
  }
  return out;
}

} // namespace testing
