#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "torblocks/numeric.hpp"
#include "torblocks/rootdata.hpp"

namespace torblocks {

/// lambda = level * Lambda_{n+1} + fin + delta * delta_1 for the affine algebra.
///
/// `level` is always lambda(K_1); the value on alpha_{n+1}^vee is available
/// through affine_simple_coroot_value().
struct AffineWeight {
  LieType type;
  std::int64_t level = 0;
  FiniteWeight fin;
  Rational delta = 0;

  static AffineWeight zero(const LieType& type);

  bool operator==(const AffineWeight&) const = default;
};

/// A weight of the k-toroidal algebra: values on K_1..K_k, the finite part,
/// and the coefficients of delta_1..delta_k.
struct ToroidalWeight {
  LieType type;
  std::size_t k = 1;
  IntVector central;
  FiniteWeight fin;
  std::vector<Rational> deltas;

  /// Throws ValidationError when k is 0 or the vector lengths disagree.
  void validate() const;

  bool operator==(const ToroidalWeight&) const = default;
};

/// lambda(alpha_{n+1}^vee) = level - <fin, theta^vee>.
std::int64_t affine_simple_coroot_value(const AffineWeight& w);

bool is_dominant(const AffineWeight& w);

/// Equality ignoring the delta_1 coefficient (twists by C_{r delta_1}).
bool equal_up_to_delta_shift(const AffineWeight& a, const AffineWeight& b);

AffineWeight add(const AffineWeight& a, const AffineWeight& b);

/// lambda >= mu in the order generated by the affine simple roots.
bool affine_geq(const AffineWeight& lambda, const AffineWeight& mu);

/// The minimal dominant representative of the class of lambda.fin modulo Q:
/// either 0 or a minuscule omega_i with i in J_0.
FiniteWeight min_coset_rep(const AffineWeight& lambda);

/// Every dominant finite part admissible at the given level in class gamma:
/// {c >= 0 : sum c_i a_i^vee <= level, class(c) = gamma}, sorted
/// lexicographically by coordinates. At most `limit` are returned (the
/// lexicographically smallest ones).
std::vector<FiniteWeight> realizations(const LieType& t, std::int64_t level, const GammaClass& gamma,
                                       std::size_t limit = SIZE_MAX);

/// Number of realizations, stopping early once `cap` is reached.
std::size_t count_realizations(const LieType& t, std::int64_t level, const GammaClass& gamma, std::size_t cap);

/// Applies the composite r_alpha r_beta with beta = alpha + m delta_i:
///   lambda + c m <lambda,K_i> alpha - (<lambda,alpha^vee> + c m <lambda,K_i>) delta_i,
/// where c = 2/(alpha|alpha). `positive_root` is in alpha-basis coordinates,
/// `loop_index` is 1-based.
ToroidalWeight weyl_translate(const ToroidalWeight& lambda, const IntVector& positive_root, std::size_t loop_index,
                              std::int64_t m);

/// Reduces delta_2..delta_k into [0, m), in order j = 2..k. Requires
/// central == (m, 0, ..., 0) with m > 0 and integral delta_2..delta_k.
ToroidalWeight normalize_deltas(const ToroidalWeight& lambda, std::int64_t m);

struct GcdNormalForm {
  std::int64_t m = 0;
  IntVector normal;
};

/// m = gcd of the central values (0 for the zero vector), normal = (m, 0, ..., 0).
GcdNormalForm gcd_normal_form(const IntVector& central);

}  // namespace torblocks
