#pragma once

#include "mcclab/bigint.hpp"
#include "mcclab/complex.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mcclab {

// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Boundary map C_k -> C_{k-1} with faces in ascending vertex order; the face
/// omitting the i-th vertex carries sign (-1)^i.
struct BoundaryMatrix {
  std::vector<Facet> row_faces;  // (k-1)-faces
  std::vector<Facet> col_faces;  // k-faces
  IntMatrix entries;
};

// Throws DomainError unless 0 <= k <= dim X.
BoundaryMatrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Nonzero invariant factors d1 | d2 | ... of `m` (all positive).
std::vector<BigInt> smith_normal_form(IntMatrix m);

// Fraction-free Gaussian elimination; exact rank over Q.
std::size_t rank_over_rationals(IntMatrix m);

struct HomologyGroup {
  std::size_t betti = 0;
  // Invariant factors greater than one, divisibility ordered.
  std::vector<BigInt> torsion;

  // Order of the torsion subgroup.
  BigInt torsion_order() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Unreduced integral homology in degrees 0..dim X.
struct HomologyProfile {
  std::vector<HomologyGroup> degrees;

  // Trivial group above the top dimension.
  HomologyGroup at(int k) const;

  // Degree-wise comparison; trailing trivial groups do not matter.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

HomologyGroup homology(const SimplicialComplex& complex, int k);
HomologyProfile homology_profile(const SimplicialComplex& complex);

// H_k in every degree k >= 1 agrees.
bool same_positive_homology(const HomologyProfile& a, const HomologyProfile& b);

/// Torsion-free H_{r-1} and vanishing H_r, the homological signature of a
/// minimal connected cover.
bool verify_mcc_homology(const PureComplex& complex);

/**
 * Sum of |H_{r-1}(T; Z)|^2 over all complexes T on [n] with full
 * (r-1)-skeleton, C(n-1, r) facets of dimension r and vanishing rational
 * homology in degrees r-1 and r (reduced in degree 0).
 *
 * Throws BudgetExceeded when the number of candidate facet sets exceeds the
 * budget.
 */
BigInt kalai_sum(int n, int r, std::optional<std::uint64_t> max_candidates = std::nullopt);

} // namespace mcclab
