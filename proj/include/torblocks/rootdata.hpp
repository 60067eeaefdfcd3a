#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "torblocks/numeric.hpp"

namespace torblocks {

/// One of the nine series of finite simple Lie types, e.g. A2, D4, E8.
struct LieType {
  char family = 'A';
  int rank = 1;

  /// Throws ValidationError unless the family/rank pair is admissible:
  /// A n>=1, B n>=3, C n>=2, D n>=4, E n in {6,7,8}, F4, G2.
  static LieType make(char family, int rank);
  static LieType parse(std::string_view text);

  std::string name() const;
  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }

  auto operator<=>(const LieType&) const = default;
};

/// Integral weight in the fundamental-weight basis (Bourbaki numbering).
struct FiniteWeight {
  LieType type;
  IntVector coeffs;

  bool dominant() const;
  bool operator==(const FiniteWeight&) const = default;
};

/// An element of P/Q, named by its canonical representative: 0 (index 0) or
/// a minuscule fundamental weight w_i with i in J_0 (1-based index i).
struct GammaClass {
  LieType type;
  int rep = 0;

  bool is_zero() const { return rep == 0; }
  /// "0" or "w<i>".
  std::string label() const;
  static GammaClass parse(const LieType& type, std::string_view label);

  auto operator<=>(const GammaClass&) const = default;
};

struct RootSystemData {
  LieType type;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in the omega basis.
  std::vector<IntVector> cartan;
  /// (alpha_i | alpha_i), long roots normalized to 2.
  std::vector<Rational> simple_norms;
  /// Positive roots in alpha-basis coordinates, ordered by height then lexicographically.
  std::vector<IntVector> positive_roots;
  /// All roots (positive then negative), alpha-basis coordinates.
  std::vector<IntVector> roots;
  IntVector theta;    // alpha-basis
  IntVector theta_s;  // alpha-basis; equals theta when simply laced
  /// a_i^vee = <omega_i, theta^vee>.
  IntVector comarks;
  /// (beta | beta) for each positive root, aligned with positive_roots.
  std::vector<Rational> positive_norms;
  /// Exact inverse of the Cartan matrix: omega_i = sum_j inverse[i][j] alpha_j.
  std::vector<std::vector<Rational>> cartan_inverse;
};

/// Root data for an admissible type. Computed once per type and cached; the
/// returned object is immutable and safe to share across threads.
std::shared_ptr<const RootSystemData> build_root_system(const LieType& t);

/// The J_0 index set (1-based) exactly as tabulated for each series.
std::vector<int> j0_set(const LieType& t);

/// Invariant factors (> 1) of the inclusion Q -> P.
std::vector<Integer> gamma_invariant_factors(const LieType& t);

/// Every element of P/Q by canonical representative, zero class first.
std::vector<GammaClass> gamma_elements(const LieType& t);

/// Class of an integral weight modulo the root lattice.
GammaClass gamma_class(const FiniteWeight& w);

/// Sum in P/Q.
GammaClass gamma_add(const GammaClass& a, const GammaClass& b);
GammaClass gamma_negate(const GammaClass& a);

/// The weight w_i (or 0) realizing a class.
FiniteWeight gamma_representative(const GammaClass& g);

/// Coordinates of w in the simple-root basis, exact.
std::vector<Rational> alpha_coordinates(const FiniteWeight& w);

bool in_root_lattice(const FiniteWeight& w);

/// Omega-basis coordinates of a vector given in alpha-basis coordinates.
IntVector alpha_to_omega(const RootSystemData& rs, const IntVector& alpha_coords);

/// <w, theta^vee> = sum_i c_i a_i^vee.
std::int64_t pairing_with_theta_coroot(const FiniteWeight& w);

/// <w, beta^vee> for a root beta given in alpha-basis coordinates.
std::int64_t pairing_with_coroot(const RootSystemData& rs, const IntVector& w_omega,
                                 const IntVector& beta_alpha);

/// (beta | beta) for beta in alpha-basis coordinates.
Rational root_norm(const RootSystemData& rs, const IntVector& beta_alpha);

/// Index into positive_roots, or -1 when beta is not a positive root.
int positive_root_index(const RootSystemData& rs, const IntVector& beta_alpha);

}  // namespace torblocks
