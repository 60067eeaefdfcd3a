#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "torblocks/numeric.hpp"
#include "torblocks/zlattice.hpp"

namespace torblocks {

/// Sign and prime factorization of a nonzero rational.
struct FactoredRational {
  bool negative = false;
  std::map<Integer, std::int64_t> exponents;  // prime -> exponent (nonzero)

  static FactoredRational of(const Rational& q);
  Rational value() const;
};

/// A point of (Q*)^{d}, standing for a maximal ideal of the Laurent ring in
/// d variables. Points compare lexicographically by coordinate value.
class TorusPoint {
 public:
  TorusPoint() = default;
  /// Throws ValidationError on zero coordinates or numerators/denominators
  /// beyond 64 bits.
  explicit TorusPoint(std::vector<Rational> coords);

  static TorusPoint ones(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const std::vector<FactoredRational>& factored() const { return factored_; }

  bool operator==(const TorusPoint& o) const { return coords_ == o.coords_; }
  std::strong_ordering operator<=>(const TorusPoint& o) const;

 private:
  std::vector<Rational> coords_;
  std::vector<FactoredRational> factored_;
};

using ScalingElement = std::vector<Rational>;

/// prod_j coords[j]^{m_j}.
Rational evaluate(const TorusPoint& p, const IntVector& m);
Rational evaluate(const TorusPoint& p, const BigVector& m);

/// {m in Z^d : prod_j q_j^{m_j} = 1}.
ZLattice relation_lattice(const std::vector<Rational>& q);

/// Componentwise product b * p.
TorusPoint scale(const ScalingElement& b, const TorusPoint& p);

/// Componentwise quotient p / q.
ScalingElement ratio(const TorusPoint& p, const TorusPoint& q);
ScalingElement inverse(const ScalingElement& b);
ScalingElement identity_scaling(std::size_t dim);
void validate_scaling(const ScalingElement& b, std::size_t dim);

/// Sign vector over F_2 (1 for negative coordinates).
std::vector<int> sign_bits(const TorusPoint& p);

template <class Label>
using LabeledPoints = std::vector<std::pair<TorusPoint, Label>>;

/// Every b with scale(b, .) a label-respecting bijection from `from` onto `to`.
/// Candidates are b = q / a_min for each q in `to` (sorted), where a_min is
/// the least point of `from`; results keep that order.
template <class Label, class Equiv>
std::vector<ScalingElement> orbit_matches(const LabeledPoints<Label>& from, const LabeledPoints<Label>& to,
                                          std::size_t dim, Equiv&& equiv, bool first_only = false) {
  auto check_distinct = [](const LabeledPoints<Label>& pts) {
    std::vector<TorusPoint> sorted;
    for (const auto& e : pts) sorted.push_back(e.first);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("duplicate torus point in labeled support");
    }
  };
  for (const auto& e : from) {
    if (e.first.dim() != dim) throw ValidationError("torus point of wrong dimension");
  }
  for (const auto& e : to) {
    if (e.first.dim() != dim) throw ValidationError("torus point of wrong dimension");
  }
  check_distinct(from);
  check_distinct(to);
  std::vector<ScalingElement> out;
  if (from.size() != to.size()) return out;
  if (from.empty()) {
    out.push_back(identity_scaling(dim));
    return out;
  }
  std::map<TorusPoint, const Label*> target;
  for (const auto& e : to) target.emplace(e.first, &e.second);
  const auto anchor = std::min_element(from.begin(), from.end(),
                                       [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [candidate, unused] : target) {
    (void)unused;
    ScalingElement b = ratio(candidate, anchor->first);
    bool ok = true;
    for (const auto& [pt, label] : from) {
      const auto it = target.find(scale(b, pt));
      if (it == target.end() || !equiv(label, *it->second)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(std::move(b));
      if (first_only) break;
    }
  }
  return out;
}

/// Some b carrying `from` onto `to` label-compatibly, or nullopt. Candidates
/// are tried in sorted order and the first success is returned.
template <class Label, class Equiv>
std::optional<ScalingElement> orbit_match(const LabeledPoints<Label>& from, const LabeledPoints<Label>& to,
                                          std::size_t dim, Equiv&& equiv) {
  auto all = orbit_matches(from, to, dim, std::forward<Equiv>(equiv), true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace torblocks
