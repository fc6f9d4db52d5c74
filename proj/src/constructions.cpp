#include "mcclab/constructions.hpp"

#include "mcclab/errors.hpp"
#include "mcclab/homology.hpp"

#include <string>

namespace mcclab {

void GroupSpec::validate() const {
  if (free_rank < 0) throw DomainError("free rank must be nonnegative");
  for (long m : torsion)
    if (m < 2) throw DomainError("torsion orders must be at least 2, got " + std::to_string(m));
}

std::vector<BigInt> GroupSpec::invariant_factors() const {
  validate();
  IntMatrix diagonal(torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) diagonal(i, i) = torsion[i];
  auto factors = smith_normal_form(diagonal);
  std::erase_if(factors, [](const BigInt& d) { return d == 1; });
  return factors;
}

SimplicialComplex projective_plane() {
  return SimplicialComplex(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                               {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

PureComplex cone_augment(const SimplicialComplex& t, int r) {
  if (t.dimension() >= r)
    throw DomainError("cone_augment needs dim T < r, got dim " + std::to_string(t.dimension()) +
                      " and r = " + std::to_string(r));
  if (t.vertex_count() == 0 || !is_connected(t)) throw DomainError("cone_augment needs a connected complex");

  int next = t.vertex_count();
  std::vector<Facet> facets;
  if (t.facets().empty()) {
    Facet f{1};
    while (static_cast<int>(f.size()) < r + 1) f.push_back(++next);
    facets.push_back(std::move(f));
  }
  for (const auto& base : t.facets()) {
    Facet f = base;
    while (static_cast<int>(f.size()) < r + 1) f.push_back(++next);
    facets.push_back(std::move(f));
  }
  return PureComplex(next, r, std::move(facets));
}

SimplicialComplex sphere_triangulation(int i) {
  if (i < 1) throw DomainError("sphere dimension must be at least 1");
  std::vector<Facet> facets;
  for (int skip = 1; skip <= i + 2; ++skip) {
    Facet f;
    for (int v = 1; v <= i + 2; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(i + 2, std::move(facets));
}

SimplicialComplex suspension(const SimplicialComplex& x) {
  const int n = x.vertex_count();
  std::vector<Facet> facets;
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& f : x.facets())
    for (Vertex v : f) covered[static_cast<std::size_t>(v)] = 1;
  auto add_cones = [&](Facet f) {
    f.push_back(n + 1);
    facets.push_back(f);
    f.back() = n + 2;
    facets.push_back(std::move(f));
  };
  for (const auto& f : x.facets()) add_cones(f);
  for (Vertex v = 1; v <= n; ++v)
    if (!covered[static_cast<std::size_t>(v)]) add_cones({v});
  return SimplicialComplex(n + 2, std::move(facets));
}

SimplicialComplex moore_space(int m, int k) {
  if (m < 2) throw DomainError("Moore space order must be at least 2");
  if (k < 1) throw DomainError("Moore space degree must be at least 1");
  SimplicialComplex out = projective_plane();
  if (m > 2) {
    // Target triangle a_0..a_2 = 1..3, polygon b_0..b_{3m-1} = 4.., apex last.
    const int polygon = 3 * m;
    const Vertex apex = 4 + polygon;
    auto a = [](int i) { return 1 + i % 3; };
    auto b = [polygon](int j) { return 4 + j % polygon; };
    std::vector<Facet> facets;
    for (int j = 0; j < polygon; ++j) {
      facets.push_back({b(j), b(j + 1), a(j + 1)});
      facets.push_back({b(j), a(j), a(j + 1)});
      facets.push_back({b(j), b(j + 1), apex});
    }
    out = SimplicialComplex(apex, std::move(facets));
  }
  for (int i = 1; i < k; ++i) out = suspension(out);
  return out;
}

PureComplex realize_group(const GroupSpec& group, int k, int r) {
  group.validate();
  if (r < 2) throw DomainError("realize_group needs r >= 2");
  if (group.torsion.empty() ? (k < 1 || k > r - 1) : (k < 1 || k > r - 2))
    throw DomainError("degree " + std::to_string(k) + " is out of range for dimension " +
                      std::to_string(r) + (group.torsion.empty() ? "" : " with torsion"));
  if (group.trivial()) return cone_augment(SimplicialComplex(1, {}), r);

  std::vector<PureComplex> pieces;
  for (int i = 0; i < group.free_rank; ++i) pieces.push_back(cone_augment(sphere_triangulation(k), r));
  for (long m : group.torsion) pieces.push_back(cone_augment(moore_space(static_cast<int>(m), k), r));
  PureComplex out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) out = wedge(out, 1, pieces[i], 1);
  return out;
}

} // namespace mcclab
