#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torblocks/spectral.hpp"

namespace torblocks {

/// Advisory notice attached to a result. Never changes the result itself.
struct Diagnostic {
  std::string code;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

inline constexpr const char* kDiagTypeDiscrepancy = "type-ii-with-trivial-or-non-simply-laced";
inline constexpr const char* kDiagStabilizer = "nontrivial-support-stabilizer";

enum class TypeTag { TypeI, TypeII };

struct TypeWitness {
  TorusPoint point;
  XiValue value;
  std::vector<FiniteWeight> realizations;  // at least two, lexicographically smallest first
};

struct CharacterType {
  TypeTag tag = TypeTag::TypeII;
  std::optional<TypeWitness> witness;  // set for TypeI
  std::vector<Diagnostic> diagnostics;
};

/// Witness realization lists are cut off at this length.
inline constexpr std::size_t kWitnessRealizationLimit = 8;

/// TypeII iff every value (l, g) of xi has exactly one dominant realization.
/// Throws ValidationError on entries of level < 1.
CharacterType classify_type(const XiCharacter& xi);

/// Number of b with b.supp(xi) = supp(xi) preserving values.
std::size_t stabilizer_size(const XiCharacter& xi);

struct BlockId {
  TypeTag kind = TypeTag::TypeI;
  XiCharacter xi;     // TypeI: canonical orbit representative of chi(pi)
  PiFunction pi;      // TypeII: canonical orbit representative, deltas zeroed
  BigVector coset;    // TypeII: canonical representative of g + G_pi

  bool operator==(const BlockId&) const = default;
};

/// Scales so that the anchor point becomes (1, ..., 1), for every anchor,
/// and keeps the lexicographically least sorted result.
XiCharacter canonical_orbit_rep(const XiCharacter& xi);
PiFunction canonical_orbit_rep(const PiFunction& pi);

/// Throws ValidationError when wt(pi) has level < 1.
BlockId block_id(const PiFunction& pi, const IntVector& g);

bool same_block(const PiFunction& pi1, const IntVector& g1, const PiFunction& pi2, const IntVector& g2);

/// Canonical orbit representative of a character with all levels 0.
XiCharacter level_zero_block(const XiCharacter& xi0);

}  // namespace torblocks
