#include "torblocks/blocks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

namespace torblocks {

namespace {

bool gamma_trivial(const LieType& t) { return j0_set(t).empty(); }

LabeledPoints<XiValue> xi_points(const XiCharacter& xi) {
  LabeledPoints<XiValue> out;
  for (const auto& e : xi.entries()) out.emplace_back(e.point, e.value);
  return out;
}

// Least anchored form of a labeled support. Labels must be totally ordered.
template <class Label, class Less>
LabeledPoints<Label> anchor_canonical(const LabeledPoints<Label>& pts, Less&& label_less) {
  if (pts.empty()) return pts;
  auto entry_less = [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return label_less(a.second, b.second);
  };
  std::optional<LabeledPoints<Label>> best;
  for (const auto& anchor : pts) {
    const ScalingElement b = inverse(anchor.first.coords());
    LabeledPoints<Label> cand;
    cand.reserve(pts.size());
    for (const auto& [p, label] : pts) cand.emplace_back(scale(b, p), label);
    std::sort(cand.begin(), cand.end(), entry_less);
    if (!best || std::lexicographical_compare(cand.begin(), cand.end(), best->begin(), best->end(), entry_less)) {
      best = std::move(cand);
    }
  }
  return *best;
}

bool affine_less(const AffineWeight& a, const AffineWeight& b) {
  if (a.level != b.level) return a.level < b.level;
  if (a.fin.coeffs != b.fin.coeffs) return a.fin.coeffs < b.fin.coeffs;
  return a.delta < b.delta;
}

}  // namespace

std::size_t stabilizer_size(const XiCharacter& xi) {
  const auto pts = xi_points(xi);
  return orbit_matches(pts, pts, xi.torus_dim(), std::equal_to<XiValue>{}).size();
}

CharacterType classify_type(const XiCharacter& xi) {
  CharacterType out;
  for (const auto& e : xi.entries()) {
    if (e.value.level < 1) throw ValidationError("classify_type requires every level to be >= 1");
  }
  for (const auto& e : xi.entries()) {
    if (count_realizations(xi.type(), e.value.level, e.value.cls, 2) >= 2) {
      out.tag = TypeTag::TypeI;
      out.witness = TypeWitness{e.point, e.value,
                                realizations(xi.type(), e.value.level, e.value.cls, kWitnessRealizationLimit)};
      break;
    }
  }
  if (out.tag == TypeTag::TypeII && !xi.empty() && (!xi.type().simply_laced() || gamma_trivial(xi.type()))) {
    const std::string reason = xi.type().simply_laced() ? " has trivial P/Q" : " is not simply laced";
    out.diagnostics.push_back({kDiagTypeDiscrepancy,
                               "every value has a unique dominant realization, so the realization criterion gives "
                               "type II; type I is the usual expectation here because " +
                                   xi.type().name() + reason});
  }
  if (xi.entries().size() > 1) {
    const std::size_t stab = stabilizer_size(xi);
    if (stab > 1) {
      out.diagnostics.push_back({kDiagStabilizer, "the support admits " + std::to_string(stab) +
                                                      " value-preserving scalings; per-point realization counts "
                                                      "may overstate the number of isomorphism classes"});
    }
  }
  return out;
}

XiCharacter canonical_orbit_rep(const XiCharacter& xi) {
  const auto best = anchor_canonical(xi_points(xi), std::less<XiValue>{});
  std::vector<XiEntry> entries;
  for (const auto& [p, v] : best) entries.push_back(XiEntry{p, v});
  return XiCharacter::make(xi.type(), xi.k(), std::move(entries));
}

PiFunction canonical_orbit_rep(const PiFunction& pi) {
  LabeledPoints<AffineWeight> pts;
  for (const auto& e : pi.entries()) pts.emplace_back(e.point, e.weight);
  const auto best = anchor_canonical(pts, affine_less);
  std::vector<PiEntry> entries;
  for (const auto& [p, w] : best) entries.push_back(PiEntry{p, w});
  return PiFunction::make(pi.type(), pi.k(), std::move(entries));
}

BlockId block_id(const PiFunction& pi, const IntVector& g) {
  if (g.size() != pi.torus_dim()) throw ValidationError("coset vector must have length k-1");
  if (wt(pi).level < 1) throw ValidationError("block_id requires total level >= 1; use level0block for level 0");
  const XiCharacter xi = chi(pi);
  BlockId id;
  if (classify_type(xi).tag == TypeTag::TypeI) {
    id.kind = TypeTag::TypeI;
    id.xi = canonical_orbit_rep(xi);
    return id;
  }
  std::vector<PiEntry> zeroed = pi.entries();
  for (auto& e : zeroed) e.weight.delta = 0;
  id.kind = TypeTag::TypeII;
  id.pi = canonical_orbit_rep(PiFunction::make(pi.type(), pi.k(), std::move(zeroed)));
  id.coset = g_pi(pi).lattice.reduce(to_big(g));
  return id;
}

bool same_block(const PiFunction& pi1, const IntVector& g1, const PiFunction& pi2, const IntVector& g2) {
  if (pi1.type() != pi2.type() || pi1.k() != pi2.k()) throw ValidationError("type or loop count mismatch");
  if (g1.size() != pi1.torus_dim() || g2.size() != pi2.torus_dim()) {
    throw ValidationError("coset vectors must have length k-1");
  }
  const auto l1 = wt(pi1).level, l2 = wt(pi2).level;
  if (l1 < 1 || l2 < 1) throw ValidationError("same_block requires total level >= 1");
  if (l1 != l2) return false;
  const XiCharacter xi1 = chi(pi1), xi2 = chi(pi2);
  if (canonical_orbit_rep(xi1) != canonical_orbit_rep(xi2)) return false;
  if (classify_type(xi1).tag == TypeTag::TypeI) return true;
  return is_isomorphic(pi1, g1, pi2, g2);
}

XiCharacter level_zero_block(const XiCharacter& xi0) {
  for (const auto& e : xi0.entries()) {
    if (e.value.level != 0) throw ValidationError("level_zero_block requires every level to be 0");
  }
  return canonical_orbit_rep(xi0);
}

}  // namespace torblocks
