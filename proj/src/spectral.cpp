#include "torblocks/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

namespace torblocks {

namespace {

void check_points(const std::vector<TorusPoint>& sorted_points, std::size_t dim) {
  for (const auto& p : sorted_points) {
    if (p.dim() != dim) throw ValidationError("support point of dimension " + std::to_string(p.dim()) +
                                              ", expected " + std::to_string(dim));
  }
  if (std::adjacent_find(sorted_points.begin(), sorted_points.end()) != sorted_points.end()) {
    throw ValidationError("support points must be pairwise distinct");
  }
}

void require_compatible(const LieType& t1, std::size_t k1, const LieType& t2, std::size_t k2) {
  if (t1 != t2) throw ValidationError("Lie types differ: " + t1.name() + " vs " + t2.name());
  if (k1 != k2) throw ValidationError("loop counts differ");
}

bool is_zero_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

void accumulate(std::vector<Rational>& acc, const Rational& factor, const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += factor * v[i];
}

}  // namespace

PiFunction PiFunction::make(const LieType& type, std::size_t k, std::vector<PiEntry> entries) {
  if (k == 0) throw ValidationError("loop count k must be >= 1");
  std::sort(entries.begin(), entries.end(), [](const PiEntry& a, const PiEntry& b) { return a.point < b.point; });
  std::vector<TorusPoint> points;
  for (const auto& e : entries) {
    points.push_back(e.point);
    if (e.weight.type != type || e.weight.fin.type != type ||
        e.weight.fin.coeffs.size() != static_cast<std::size_t>(type.rank)) {
      throw ValidationError("weight does not belong to type " + type.name());
    }
    if (e.weight.level < 1) throw ValidationError("pi values must have level >= 1");
    if (!is_dominant(e.weight)) throw ValidationError("pi values must be dominant");
  }
  check_points(points, k - 1);
  PiFunction pi;
  pi.type_ = type;
  pi.k_ = k;
  pi.entries_ = std::move(entries);
  return pi;
}

XiCharacter XiCharacter::make(const LieType& type, std::size_t k, std::vector<XiEntry> entries) {
  if (k == 0) throw ValidationError("loop count k must be >= 1");
  std::erase_if(entries, [](const XiEntry& e) { return e.value.is_zero(); });
  std::sort(entries.begin(), entries.end(), [](const XiEntry& a, const XiEntry& b) { return a.point < b.point; });
  std::vector<TorusPoint> points;
  for (const auto& e : entries) {
    points.push_back(e.point);
    if (e.value.cls.type != type) throw ValidationError("class does not belong to type " + type.name());
  }
  check_points(points, k - 1);
  XiCharacter xi;
  xi.type_ = type;
  xi.k_ = k;
  xi.entries_ = std::move(entries);
  return xi;
}

AffineWeight wt(const PiFunction& pi) {
  AffineWeight total = AffineWeight::zero(pi.type());
  for (const auto& e : pi.entries()) total = add(total, e.weight);
  return total;
}

XiCharacter chi(const PiFunction& pi) {
  std::vector<XiEntry> out;
  for (const auto& e : pi.entries()) {
    out.push_back(XiEntry{e.point, XiValue{e.weight.level, gamma_class(e.weight.fin)}});
  }
  return XiCharacter::make(pi.type(), pi.k(), std::move(out));
}

XiCharacter chi_affine_coroot(const PiFunction& pi) {
  std::vector<XiEntry> out;
  for (const auto& e : pi.entries()) {
    out.push_back(XiEntry{e.point, XiValue{affine_simple_coroot_value(e.weight), gamma_class(e.weight.fin)}});
  }
  return XiCharacter::make(pi.type(), pi.k(), std::move(out));
}

PiFunction pi_add(const PiFunction& a, const PiFunction& b) {
  require_compatible(a.type(), a.k(), b.type(), b.k());
  std::map<TorusPoint, AffineWeight> merged;
  for (const auto& e : a.entries()) merged.emplace(e.point, e.weight);
  for (const auto& e : b.entries()) {
    auto [it, inserted] = merged.emplace(e.point, e.weight);
    if (!inserted) it->second = add(it->second, e.weight);
  }
  std::vector<PiEntry> entries;
  for (auto& [p, w] : merged) entries.push_back(PiEntry{p, w});
  return PiFunction::make(a.type(), a.k(), std::move(entries));
}

XiCharacter xi_add(const XiCharacter& a, const XiCharacter& b) {
  require_compatible(a.type(), a.k(), b.type(), b.k());
  std::map<TorusPoint, XiValue> merged;
  for (const auto& e : a.entries()) merged.emplace(e.point, e.value);
  for (const auto& e : b.entries()) {
    auto [it, inserted] = merged.emplace(e.point, e.value);
    if (!inserted) {
      it->second.level = checked_add(it->second.level, e.value.level);
      it->second.cls = gamma_add(it->second.cls, e.value.cls);
    }
  }
  std::vector<XiEntry> entries;
  for (auto& [p, v] : merged) entries.push_back(XiEntry{p, v});
  return XiCharacter::make(a.type(), a.k(), std::move(entries));
}

XiCharacter xi_negate(const XiCharacter& a) {
  std::vector<XiEntry> entries;
  for (const auto& e : a.entries()) {
    entries.push_back(XiEntry{e.point, XiValue{checked_mul(e.value.level, -1), gamma_negate(e.value.cls)}});
  }
  return XiCharacter::make(a.type(), a.k(), std::move(entries));
}

XiCharacter xi_scale_action(const ScalingElement& b, const XiCharacter& xi) {
  const ScalingElement inv = inverse(b);
  validate_scaling(inv, xi.torus_dim());
  std::vector<XiEntry> entries;
  for (const auto& e : xi.entries()) entries.push_back(XiEntry{scale(inv, e.point), e.value});
  return XiCharacter::make(xi.type(), xi.k(), std::move(entries));
}

PiFunction pi_scale_action(const ScalingElement& b, const PiFunction& pi) {
  const ScalingElement inv = inverse(b);
  validate_scaling(inv, pi.torus_dim());
  std::vector<PiEntry> entries;
  for (const auto& e : pi.entries()) entries.push_back(PiEntry{scale(inv, e.point), e.weight});
  return PiFunction::make(pi.type(), pi.k(), std::move(entries));
}

std::vector<Rational> weight_vector(const AffineWeight& w) {
  std::vector<Rational> v;
  v.reserve(w.fin.coeffs.size() + 2);
  v.emplace_back(static_cast<long>(w.level));
  for (auto c : w.fin.coeffs) v.emplace_back(static_cast<long>(c));
  v.push_back(w.delta);
  return v;
}

bool vanishing_test(const PiFunction& pi, const BigVector& m) {
  if (m.size() != pi.torus_dim()) throw ValidationError("degree vector must have length k-1");
  std::vector<Rational> sum(static_cast<std::size_t>(pi.type().rank) + 2, 0);
  for (const auto& e : pi.entries()) accumulate(sum, evaluate(e.point, m), weight_vector(e.weight));
  return is_zero_vector(sum);
}

bool vanishing_test(const PiFunction& pi, const IntVector& m) { return vanishing_test(pi, to_big(m)); }

GPiResult g_pi(const PiFunction& pi, unsigned threads) {
  if (pi.empty()) throw ValidationError("g_pi requires a nonempty pi");
  const std::size_t d = pi.torus_dim();
  const auto& entries = pi.entries();
  const std::size_t l = entries.size();

  GPiResult result;
  // P_0: kernel of the F_2 sign matrix, lifted through auxiliary columns.
  BigMatrix sign_system(l, BigVector(d + l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    const auto bits = sign_bits(entries[i].point);
    for (std::size_t j = 0; j < d; ++j) sign_system[i][j] = bits[j];
    sign_system[i][d + i] = -2;
  }
  result.sign_kernel = project_kernel(sign_system, d + l, d);
  const ZLattice& p0 = result.sign_kernel;
  if (!p0.is_full_rank()) throw InternalError("sign kernel is not of full rank");

  // Points whose characters agree on P_0 share a class.
  std::vector<std::size_t> cls(l);
  std::iota(cls.begin(), cls.end(), std::size_t{0});
  for (std::size_t i = 0; i < l; ++i) {
    if (cls[i] != i) continue;
    for (std::size_t j = i + 1; j < l; ++j) {
      if (cls[j] != j) continue;
      if (contains(relation_lattice(ratio(entries[i].point, entries[j].point)), p0)) cls[j] = i;
    }
  }
  std::vector<std::size_t> class_ids(cls.begin(), cls.end());
  std::sort(class_ids.begin(), class_ids.end());
  class_ids.erase(std::unique(class_ids.begin(), class_ids.end()), class_ids.end());
  const std::size_t nclasses = class_ids.size();

  std::vector<std::vector<Rational>> vecs;
  for (const auto& e : entries) vecs.push_back(weight_vector(e.weight));

  const QuotientData cosets = quotient(p0);
  const auto& reps = cosets.coset_reps;
  std::vector<std::optional<BigVector>> found(reps.size());

  auto process = [&](std::size_t idx) {
    const BigVector& c = reps[idx];
    const std::size_t width = vecs[0].size();
    std::map<std::size_t, std::vector<Rational>> sums;
    for (std::size_t i = 0; i < l; ++i) {
      auto [it, inserted] = sums.try_emplace(cls[i], std::vector<Rational>(width, 0));
      accumulate(it->second, evaluate(entries[i].point, c), vecs[i]);
    }
    const bool all_zero =
        std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return is_zero_vector(kv.second); });
    if (all_zero) return;
    std::vector<std::size_t> t(d, 0);
    while (true) {
      BigVector m = c;
      for (std::size_t j = 0; j < d; ++j) {
        if (t[j] == 0) continue;
        for (std::size_t x = 0; x < d; ++x) m[x] += static_cast<unsigned long>(t[j]) * p0.basis()[j][x];
      }
      if (!vanishing_test(pi, m)) {
        found[idx] = std::move(m);
        return;
      }
      // Odometer over [0, nclasses)^d, last coordinate fastest.
      std::size_t pos = d;
      while (pos > 0 && ++t[pos - 1] == nclasses) t[--pos] = 0;
      if (pos == 0) break;
    }
    throw InternalError("no non-vanishing degree inside the witness box of a non-vanishing coset");
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps.size())));
  if (workers == 1) {
    for (std::size_t idx = 0; idx < reps.size(); ++idx) process(idx);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t idx = w; idx < reps.size(); idx += workers) process(idx);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  BigMatrix generators = p0.basis();
  for (auto& f : found) {
    if (f) result.witnesses.push_back(*f);
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  generators.insert(generators.end(), result.witnesses.begin(), result.witnesses.end());
  result.lattice = hnf(generators, d);
  result.quotient = quotient(result.lattice);
  return result;
}

bool is_isomorphic(const PiFunction& pi1, const IntVector& g1, const PiFunction& pi2, const IntVector& g2) {
  require_compatible(pi1.type(), pi1.k(), pi2.type(), pi2.k());
  if (g1.size() != pi1.torus_dim() || g2.size() != pi2.torus_dim()) {
    throw ValidationError("coset vectors must have length k-1");
  }
  if (pi1.empty() || pi2.empty()) throw ValidationError("isomorphism test requires nonempty pi");
  if (wt(pi1).level != wt(pi2).level) return false;
  LabeledPoints<AffineWeight> a, b;
  for (const auto& e : pi1.entries()) a.emplace_back(e.point, e.weight);
  for (const auto& e : pi2.entries()) b.emplace_back(e.point, e.weight);
  const auto match = orbit_match(a, b, pi1.torus_dim(), [](const AffineWeight& x, const AffineWeight& y) {
    return equal_up_to_delta_shift(x, y);
  });
  if (!match) return false;
  IntVector diff(g1.size());
  for (std::size_t i = 0; i < g1.size(); ++i) diff[i] = checked_add(g1[i], -g2[i]);
  return member(g_pi(pi1).lattice, diff);
}

}  // namespace torblocks
