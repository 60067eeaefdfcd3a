#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "torblocks/numeric.hpp"
#include "torblocks/rootdata.hpp"
#include "torblocks/torus.hpp"
#include "torblocks/weights.hpp"
#include "torblocks/zlattice.hpp"

namespace torblocks {

struct PiEntry {
  TorusPoint point;
  AffineWeight weight;

  bool operator==(const PiEntry&) const = default;
};

/// A finitely supported map from points of (Q*)^{k-1} to dominant affine
/// weights of positive level.
///
/// Entries are kept sorted by point. Level-0 values are rejected: they are
/// invisible to chi but would still move the delta coordinate, so the
/// support of chi(pi) always equals the support of pi.
class PiFunction {
 public:
  PiFunction() = default;
  /// Validates (dimension, distinct points, dominance, level >= 1) and sorts.
  static PiFunction make(const LieType& type, std::size_t k, std::vector<PiEntry> entries);

  const LieType& type() const { return type_; }
  std::size_t k() const { return k_; }
  std::size_t torus_dim() const { return k_ - 1; }
  const std::vector<PiEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const PiFunction&) const = default;

 private:
  LieType type_;
  std::size_t k_ = 1;
  std::vector<PiEntry> entries_;
};

/// A value in Z x Gamma.
struct XiValue {
  std::int64_t level = 0;
  GammaClass cls;

  bool is_zero() const { return level == 0 && cls.is_zero(); }
  auto operator<=>(const XiValue&) const = default;
};

struct XiEntry {
  TorusPoint point;
  XiValue value;

  bool operator==(const XiEntry&) const = default;
};

/// A finitely supported map from torus points to Z x Gamma. Zero values are
/// dropped and entries are kept sorted by point.
class XiCharacter {
 public:
  XiCharacter() = default;
  static XiCharacter make(const LieType& type, std::size_t k, std::vector<XiEntry> entries);

  const LieType& type() const { return type_; }
  std::size_t k() const { return k_; }
  std::size_t torus_dim() const { return k_ - 1; }
  const std::vector<XiEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const XiCharacter&) const = default;

 private:
  LieType type_;
  std::size_t k_ = 1;
  std::vector<XiEntry> entries_;
};

struct GPiResult {
  ZLattice lattice;              // G_pi
  QuotientData quotient;         // Z^{k-1} / G_pi
  ZLattice sign_kernel;          // P_0, where every point evaluates positively
  std::vector<BigVector> witnesses;  // one non-vanishing degree per contributing coset
};

/// Sum of all values of pi.
AffineWeight wt(const PiFunction& pi);

/// (level, class of the finite part) at every support point.
XiCharacter chi(const PiFunction& pi);

/// chi with the first component read as lambda(alpha_{n+1}^vee) instead of
/// the level. Entries whose value becomes (0, 0) are dropped.
XiCharacter chi_affine_coroot(const PiFunction& pi);

PiFunction pi_add(const PiFunction& a, const PiFunction& b);
XiCharacter xi_add(const XiCharacter& a, const XiCharacter& b);
XiCharacter xi_negate(const XiCharacter& a);

/// (b.xi)(S) = xi(b.S): stored points are relabeled by b^{-1}.
XiCharacter xi_scale_action(const ScalingElement& b, const XiCharacter& xi);
/// (b.pi)(M) = pi(b.M).
PiFunction pi_scale_action(const ScalingElement& b, const PiFunction& pi);

/// (level, omega coordinates of fin, delta) as exact rationals.
std::vector<Rational> weight_vector(const AffineWeight& w);

/// True iff sum_i evaluate(M_i, m) * weight_vector(pi(M_i)) vanishes, i.e.
/// every h (x) t^m kills the highest weight vector.
bool vanishing_test(const PiFunction& pi, const BigVector& m);
bool vanishing_test(const PiFunction& pi, const IntVector& m);

/// The lattice generated by all degrees m with vanishing_test(pi, m) false.
///
/// Works coset by coset over the sign kernel P_0: on c + P_0 the signs of all
/// evaluations are fixed, points fall into classes of equal characters on
/// P_0, and the restricted sum vanishes identically iff every class sum at c
/// does. Otherwise a witness exists in the box [0, #classes)^{d} of P_0-basis
/// coordinates around c. Cosets may be processed on `threads` workers; the
/// result does not depend on the thread count.
GPiResult g_pi(const PiFunction& pi, unsigned threads = 1);

/// X_{pi1}^{g1} ~= X_{pi2}^{g2}: some b carries supp(pi1) onto supp(pi2) with
/// weights equal up to delta shift, and g1 - g2 lies in G_{pi1}.
bool is_isomorphic(const PiFunction& pi1, const IntVector& g1, const PiFunction& pi2, const IntVector& g2);

}  // namespace torblocks
