#include "torblocks/zlattice.hpp"

#include <algorithm>
#include <utility>

namespace torblocks {

namespace {

Integer floor_quot(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy_row(BigVector& target, const BigVector& source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

bool is_zero(const BigVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

BigMatrix identity(std::size_t n) {
  BigMatrix m(n, BigVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Row echelon form over the first `ncols` columns with positive pivots and
// entries above each pivot reduced into [0, pivot). Row operations act on the
// full rows, so trailing columns record the transformation. Returns pivot
// columns; rows past the last pivot are zero in the leading columns.
std::vector<std::size_t> echelon(BigMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < ncols && prow < a.size(); ++c) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = prow; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[prow], a[best]);
      bool clean = true;
      for (std::size_t i = prow + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        axpy_row(a[i], a[prow], floor_quot(a[i][c], a[prow][c]));
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[prow][c] == 0) continue;
    if (a[prow][c] < 0) {
      for (auto& x : a[prow]) x = -x;
    }
    for (std::size_t i = 0; i < prow; ++i) {
      axpy_row(a[i], a[prow], floor_quot(a[i][c], a[prow][c]));
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

void check_width(const BigMatrix& rows, std::size_t dim) {
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw ValidationError("vector of length " + std::to_string(r.size()) +
                            " in a lattice of dimension " + std::to_string(dim));
    }
  }
}

}  // namespace

ZLattice ZLattice::zero(std::size_t dim) { return hnf(BigMatrix{}, dim); }

ZLattice ZLattice::full(std::size_t dim) { return hnf(identity(dim), dim); }

BigVector ZLattice::reduce(BigVector v) const {
  if (v.size() != dim_) throw ValidationError("dimension mismatch in lattice reduction");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t c = pivots_[r];
    axpy_row(v, basis_[r], floor_quot(v[c], basis_[r][c]));
  }
  return v;
}

ZLattice hnf(const BigMatrix& rows, std::size_t dim) {
  check_width(rows, dim);
  BigMatrix a = rows;
  auto pivots = echelon(a, dim);
  a.resize(pivots.size());
  ZLattice out;
  out.dim_ = dim;
  out.basis_ = std::move(a);
  out.pivots_ = std::move(pivots);
  return out;
}

ZLattice hnf(const std::vector<IntVector>& rows, std::size_t dim) {
  BigMatrix big;
  big.reserve(rows.size());
  for (const auto& r : rows) big.push_back(to_big(r));
  return hnf(big, dim);
}

ZLattice kernel(const BigMatrix& m, std::size_t dim) {
  check_width(m, dim);
  // Echelonize [m^T | I]; rows whose m^T part vanishes span the kernel.
  const std::size_t nrows = m.size();
  BigMatrix aug(dim, BigVector(nrows + dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < nrows; ++j) aug[i][j] = m[j][i];
    aug[i][nrows + i] = 1;
  }
  const auto pivots = echelon(aug, nrows);
  BigMatrix gens;
  for (std::size_t i = pivots.size(); i < dim; ++i) {
    gens.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(nrows), aug[i].end());
  }
  return hnf(gens, dim);
}

ZLattice project_kernel(const BigMatrix& m, std::size_t dim, std::size_t keep) {
  const ZLattice full_kernel = kernel(m, dim);
  BigMatrix gens;
  for (const auto& row : full_kernel.basis()) {
    gens.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(keep));
  }
  return hnf(gens, keep);
}

SmithForm smith_normal_form(const BigMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  check_width(m, cols);
  SmithForm s{m, identity(rows), identity(cols), identity(cols)};
  auto& a = s.diagonal;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& r : a) std::swap(r[x], r[y]);
    for (auto& r : s.right) std::swap(r[x], r[y]);
    std::swap(s.right_inverse[x], s.right_inverse[y]);
  };
  // col j -= q * col t; the inverse picks up row t += q * row j.
  auto sub_col = [&](std::size_t j, std::size_t t, const Integer& q) {
    if (q == 0) return;
    for (auto& r : a) r[j] -= q * r[t];
    for (auto& r : s.right) r[j] -= q * r[t];
    for (std::size_t c = 0; c < cols; ++c) s.right_inverse[t][c] += q * s.right_inverse[j][c];
  };
  auto sub_row = [&](std::size_t i, std::size_t t, const Integer& q) {
    axpy_row(a[i], a[t], q);
    axpy_row(s.left[i], s.left[t], q);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          if (bi == rows || abs(a[i][j]) < abs(a[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      std::swap(a[t], a[bi]);
      std::swap(s.left[t], s.left[bi]);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        sub_row(i, t, floor_quot(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        sub_col(j, t, floor_quot(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
            for (std::size_t c = 0; c < rows; ++c) s.left[t][c] += s.left[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : s.left[t]) x = -x;
    }
  }
  return s;
}

QuotientData quotient(const ZLattice& lattice, bool enumerate_reps) {
  QuotientData q;
  const std::size_t d = lattice.dim();
  q.free_rank = d - lattice.rank();
  if (lattice.rank() == 0) {
    if (d == 0) {
      q.index = Integer(1);
      if (enumerate_reps) q.coset_reps.emplace_back();
    } else if (enumerate_reps) {
      throw ValidationError("coset representatives requested for an infinite quotient");
    }
    return q;
  }
  const SmithForm s = smith_normal_form(lattice.basis());
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < lattice.rank(); ++i) diag.push_back(s.diagonal[i][i]);
  for (const auto& x : diag) {
    if (x > 1) q.invariant_factors.push_back(x);
  }
  if (q.free_rank > 0) {
    if (enumerate_reps) throw ValidationError("coset representatives requested for an infinite quotient");
    return q;
  }
  Integer index = 1;
  for (const auto& x : diag) index *= x;
  q.index = index;
  if (!enumerate_reps) return q;

  // Z^d / L is isomorphic to the product of Z/diag_i via y -> y * right;
  // walk that product in mixed-radix order and pull each tuple back.
  BigVector digits(d, 0);
  while (true) {
    BigVector y(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (digits[i] == 0) continue;
      for (std::size_t c = 0; c < d; ++c) y[c] += digits[i] * s.right_inverse[i][c];
    }
    q.coset_reps.push_back(lattice.reduce(std::move(y)));
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      digits[pos] += 1;
      if (digits[pos] < diag[pos]) break;
      digits[pos] = 0;
      if (pos == 0) return q;
    }
    if (d == 0) return q;
  }
}

bool member(const ZLattice& lattice, const BigVector& v) { return is_zero(lattice.reduce(v)); }

bool member(const ZLattice& lattice, const IntVector& v) { return member(lattice, to_big(v)); }

bool contains(const ZLattice& lattice, const ZLattice& sub) {
  if (lattice.dim() != sub.dim()) throw ValidationError("dimension mismatch in lattice containment");
  return std::all_of(sub.basis().begin(), sub.basis().end(),
                     [&](const BigVector& row) { return member(lattice, row); });
}

}  // namespace torblocks
