#pragma once

// Independent reference computations used to check the library. Nothing here
// calls into the lattice or root-data code under test.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "torblocks/numeric.hpp"

namespace oracle {

using Row = std::vector<std::int64_t>;
using Mat = std::vector<Row>;

/// Row-style HNF by repeated column gcd elimination in plain int64.
/// Inputs are kept small so intermediate values stay in range.
inline Mat naive_hnf(Mat rows, std::size_t dim) {
  Mat out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    // Euclid down the column among rows r..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        const std::int64_t q = rows[i][col] / rows[r][col];
        for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) {
        if (rows[r][col] < 0) {
          for (auto& x : rows[r]) x = -x;
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t pc = 0;
    while (rows[i][pc] == 0) ++pc;
    for (std::size_t a = 0; a < i; ++a) {
      const std::int64_t p = rows[i][pc];
      std::int64_t q = rows[a][pc] / p;
      if (rows[a][pc] - q * p < 0) --q;
      for (std::size_t j = 0; j < dim; ++j) rows[a][j] -= q * rows[i][j];
    }
  }
  return rows;
}

/// Exact determinant by cofactor-free fraction-free elimination (Bareiss).
inline torblocks::Integer bareiss_det(std::vector<std::vector<torblocks::Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  torblocks::Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Invariant factors (> 1) of a square integer matrix through determinantal
/// divisors: d_k = gcd of all k x k minors, factor_k = d_k / d_{k-1}.
inline std::vector<torblocks::Integer> invariant_factors_by_minors(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<torblocks::Integer> d{1};
  for (std::size_t k = 1; k <= n; ++k) {
    torblocks::Integer g = 0;
    std::vector<bool> rs(n, false), cs(n, false);
    std::fill(rs.end() - static_cast<std::ptrdiff_t>(k), rs.end(), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.end() - static_cast<std::ptrdiff_t>(k), cs.end(), true);
      do {
        std::vector<std::vector<torblocks::Integer>> minor;
        for (std::size_t i = 0; i < n; ++i) {
          if (!rs[i]) continue;
          std::vector<torblocks::Integer> row;
          for (std::size_t j = 0; j < n; ++j) {
            if (cs[j]) row.emplace_back(static_cast<long>(a[i][j]));
          }
          minor.push_back(std::move(row));
        }
        const torblocks::Integer det = bareiss_det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      } while (std::next_permutation(cs.begin(), cs.end()));
    } while (std::next_permutation(rs.begin(), rs.end()));
    d.push_back(g);
  }
  std::vector<torblocks::Integer> out;
  for (std::size_t k = 1; k <= n; ++k) {
    if (d[k] == 0) break;
    const torblocks::Integer f = d[k] / d[k - 1];
    if (f > 1) out.push_back(f);
  }
  return out;
}

/// Membership of v in the Z-span of an HNF basis via back substitution.
inline bool in_span(const Mat& hnf_rows, Row v) {
  for (const auto& row : hnf_rows) {
    std::size_t pc = 0;
    while (row[pc] == 0) ++pc;
    if (v[pc] % row[pc] != 0) return false;
    const std::int64_t q = v[pc] / row[pc];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

/// Every vector of [-b, b]^d in lexicographic order.
inline std::vector<Row> box(std::size_t d, std::int64_t b) {
  std::vector<Row> out;
  Row cur(d, -b);
  while (true) {
    out.push_back(cur);
    std::size_t pos = d;
    while (pos > 0 && ++cur[pos - 1] > b) cur[--pos] = -b;
    if (pos == 0) break;
  }
  return out;
}

/// prod_j q_j^{m_j} by repeated multiplication.
inline torblocks::Rational power_product(const std::vector<torblocks::Rational>& q, const Row& m) {
  torblocks::Rational r = 1;
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::int64_t e = 0; e < std::llabs(m[j]); ++e) {
      if (m[j] > 0) {
        r *= q[j];
      } else {
        r /= q[j];
      }
    }
  }
  return r;
}

/// Dominant coefficient vectors c >= 0 with sum c_i a_i <= level, by brute
/// force over the full box [0, level]^n.
inline std::vector<Row> dominant_below(const Row& comarks, std::int64_t level) {
  std::vector<Row> out;
  Row cur(comarks.size(), 0);
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < cur.size(); ++i) s += cur[i] * comarks[i];
    if (s <= level) out.push_back(cur);
    std::size_t pos = cur.size();
    while (pos > 0 && ++cur[pos - 1] > level) cur[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace oracle
