#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torblocks/numeric.hpp"

namespace torblocks {

/// A sublattice of Z^d stored as a row-style Hermite normal form basis.
///
/// Rows are linearly independent, pivots are positive and strictly move to
/// the right, and every entry above a pivot lies in [0, pivot). The form is
/// unique, so two lattices are equal exactly when their bases are equal.
class ZLattice {
 public:
  ZLattice() = default;

  /// The zero lattice of Z^dim.
  static ZLattice zero(std::size_t dim);
  /// All of Z^dim.
  static ZLattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_full_rank() const { return basis_.size() == dim_; }
  const BigMatrix& basis() const { return basis_; }
  /// Column index of each basis row's pivot.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v modulo the lattice using the pivot rows. For full-rank
  /// lattices the result is the canonical coset representative, lying in the
  /// box of [0, pivot) at each pivot column.
  BigVector reduce(BigVector v) const;

  bool operator==(const ZLattice& other) const = default;

 private:
  friend ZLattice hnf(const BigMatrix& rows, std::size_t dim);
  std::size_t dim_ = 0;
  BigMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Finite or infinite quotient Z^d / L.
struct QuotientData {
  std::vector<Integer> invariant_factors;  // diagonal SNF entries > 1
  std::size_t free_rank = 0;               // d - rank(L)
  std::optional<Integer> index;            // |det| when free_rank == 0
  std::vector<BigVector> coset_reps;       // canonical reps, only when index is finite
};

/// Result of a Smith normal form computation: left * m * right == diagonal.
struct SmithForm {
  BigMatrix diagonal;
  BigMatrix left;
  BigMatrix right;
  BigMatrix right_inverse;
};

ZLattice hnf(const BigMatrix& rows, std::size_t dim);
ZLattice hnf(const std::vector<IntVector>& rows, std::size_t dim);

/// {v in Z^d : m v = 0} where m has d columns.
ZLattice kernel(const BigMatrix& m, std::size_t dim);

SmithForm smith_normal_form(const BigMatrix& m);

/// Invariant factors and (for finite index) canonical coset representatives.
/// With enumerate_reps = true and infinite index, throws ValidationError.
QuotientData quotient(const ZLattice& lattice, bool enumerate_reps = true);

bool member(const ZLattice& lattice, const BigVector& v);
bool member(const ZLattice& lattice, const IntVector& v);

/// True when every basis vector of `sub` lies in `lattice`.
bool contains(const ZLattice& lattice, const ZLattice& sub);

/// Kernel of m (with `dim` columns) projected onto its first `keep`
/// coordinates. Used when the trailing columns carry auxiliary variables that
/// are uniquely determined by the leading ones.
ZLattice project_kernel(const BigMatrix& m, std::size_t dim, std::size_t keep);

}  // namespace torblocks
