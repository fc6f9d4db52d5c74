#include "mcclab/homology.hpp"

#include "mcclab/budget.hpp"
#include "mcclab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mcclab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
  if (k < 0 || k > complex.dimension())
    throw DomainError("boundary dimension " + std::to_string(k) + " outside 0.." +
                      std::to_string(complex.dimension()));
  BoundaryMatrix out;
  out.col_faces = faces_of_dimension(complex, k);
  out.row_faces = faces_of_dimension(complex, k - 1);
  out.entries = IntMatrix(out.row_faces.size(), out.col_faces.size());
  if (k == 0) return out;

  Facet face;
  for (std::size_t j = 0; j < out.col_faces.size(); ++j) {
    const auto& sigma = out.col_faces[j];
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      face.assign(sigma.begin(), sigma.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto it = std::lower_bound(out.row_faces.begin(), out.row_faces.end(), face);
      const auto row = static_cast<std::size_t>(it - out.row_faces.begin());
      out.entries(row, j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) swap(a(i, c1), a(i, c2));
}

} // namespace

std::vector<BigInt> smith_normal_form(IntMatrix a) {
  const auto m = a.rows();
  const auto n = a.cols();
  std::vector<BigInt> factors;
  BigInt q;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest-magnitude pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m && !(pi < m && abs(a(pi, pj)) == 1); ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi == m || cmpabs(a(i, j), a(pi, pj)) < 0) {
          pi = i;
          pj = j;
          if (abs(a(i, j)) == 1) break;
        }
      }
    if (pi == m) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    while (true) {
      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t j = t; j < n; ++j)
            if (a(t, j) != 0) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0)
          for (std::size_t i = t; i < m; ++i)
            if (a(i, t) != 0) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) residue = true;
      }

      if (residue) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) bi = t, bj = j;
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        continue;
      }

      if (abs(a(t, t)) == 1) break;
      // The pivot must divide the whole trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a(t, j) += a(bad, j);
    }
    factors.push_back(abs(a(t, t)));
  }
  return factors;
}

std::size_t rank_over_rationals(IntMatrix a) {
  const auto m = a.rows();
  const auto n = a.cols();
  std::size_t rank = 0;
  BigInt previous = 1;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && a(pivot, c) == 0) ++pivot;
    if (pivot == m) continue;
    swap_rows(a, rank, pivot);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a(i, j) = a(rank, c) * a(i, j) - a(i, c) * a(rank, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      a(i, c) = 0;
    }
    previous = a(rank, c);
    ++rank;
  }
  return rank;
}

BigInt HomologyGroup::torsion_order() const {
  BigInt out = 1;
  for (const auto& d : torsion) out *= d;
  return out;
}

HomologyGroup HomologyProfile::at(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= degrees.size()) return {};
  return degrees[static_cast<std::size_t>(k)];
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const auto top = std::max(a.degrees.size(), b.degrees.size());
  for (std::size_t k = 0; k < top; ++k)
    if (!(a.at(static_cast<int>(k)) == b.at(static_cast<int>(k)))) return false;
  return true;
}

namespace {

struct Reduction {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

Reduction reduce_boundary(const SimplicialComplex& complex, int k) {
  Reduction out;
  if (k < 1 || k > complex.dimension()) return out;
  for (auto& d : smith_normal_form(boundary_matrix(complex, k).entries)) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

} // namespace

HomologyGroup homology(const SimplicialComplex& complex, int k) {
  if (k < 0 || k > complex.dimension())
    throw DomainError("homology degree " + std::to_string(k) + " outside 0.." +
                      std::to_string(complex.dimension()));
  const auto chains = faces_of_dimension(complex, k).size();
  const auto below = reduce_boundary(complex, k);
  auto above = reduce_boundary(complex, k + 1);
  return {chains - below.rank - above.rank, std::move(above.torsion)};
}

HomologyProfile homology_profile(const SimplicialComplex& complex) {
  HomologyProfile out;
  const int dim = complex.dimension();
  if (dim < 0) return out;
  std::vector<Reduction> reductions(static_cast<std::size_t>(dim) + 2);
  for (int k = 1; k <= dim; ++k) reductions[static_cast<std::size_t>(k)] = reduce_boundary(complex, k);
  for (int k = 0; k <= dim; ++k) {
    const auto chains = faces_of_dimension(complex, k).size();
    auto& below = reductions[static_cast<std::size_t>(k)];
    auto& above = reductions[static_cast<std::size_t>(k) + 1];
    out.degrees.push_back({chains - below.rank - above.rank, above.torsion});
  }
  return out;
}

bool same_positive_homology(const HomologyProfile& a, const HomologyProfile& b) {
  const auto top = std::max(a.degrees.size(), b.degrees.size());
  for (std::size_t k = 1; k < top; ++k)
    if (!(a.at(static_cast<int>(k)) == b.at(static_cast<int>(k)))) return false;
  return true;
}

bool verify_mcc_homology(const PureComplex& complex) {
  const int r = complex.dimension();
  const auto profile = homology_profile(complex.complex());
  const auto top = profile.at(r);
  return profile.at(r - 1).torsion.empty() && top.betti == 0 && top.torsion.empty();
}

BigInt kalai_sum(int n, int r, std::optional<std::uint64_t> max_candidates) {
  if (r < 1 || r >= n) throw DomainError("kalai_sum needs 1 <= r < n");
  const auto simplices = binomial_u64(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r) + 1);
  const auto pick = binomial_u64(static_cast<std::uint64_t>(n) - 1, static_cast<std::uint64_t>(r));
  const auto work = binomial_u64(simplices, pick);
  const auto limit = max_candidates.value_or(work_budget(budget::kKalai));
  if (work > limit)
    throw BudgetExceeded("kalai_sum(" + std::to_string(n) + "," + std::to_string(r) + ") needs " +
                         std::to_string(work) + " candidate complexes, budget is " +
                         std::to_string(limit));

  SimplicialComplex full;
  {
    std::vector<Facet> all_facets;
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    all_facets.push_back(all);
    full = SimplicialComplex(n, all_facets);
  }
  const auto top = faces_of_dimension(full, r);
  const auto ridges = faces_of_dimension(full, r - 1);

  BigInt total = 0;
  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    std::vector<Facet> facets;
    std::vector<char> covered(ridges.size(), 0);
    for (auto i : idx) {
      facets.push_back(top[i]);
      for (std::size_t drop = 0; drop < top[i].size(); ++drop) {
        Facet face = top[i];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        covered[static_cast<std::size_t>(
            std::lower_bound(ridges.begin(), ridges.end(), face) - ridges.begin())] = 1;
      }
    }
    if (r >= 2)
      for (std::size_t j = 0; j < ridges.size(); ++j)
        if (!covered[j]) facets.push_back(ridges[j]);
    const SimplicialComplex candidate(n, std::move(facets));

    const auto d_top = boundary_matrix(candidate, r);
    const auto rank_top = rank_over_rationals(d_top.entries);
    const auto rank_below = rank_over_rationals(boundary_matrix(candidate, r - 1).entries);
    const std::size_t reduced = (r == 1) ? 1 : 0;
    const bool acyclic = rank_top == d_top.col_faces.size() &&
                         ridges.size() == rank_below + rank_top + reduced;
    if (acyclic) {
      BigInt order = 1;
      for (const auto& d : smith_normal_form(d_top.entries)) order *= d;
      total += order * order;
    }

    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == simplices - pick + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

} // namespace mcclab
