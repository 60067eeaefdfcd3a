#include "torblocks/weights.hpp"

#include <algorithm>
#include <numeric>

namespace torblocks {

namespace {

void require_same_type(const AffineWeight& a, const AffineWeight& b) {
  if (a.type != b.type) throw ValidationError("affine weights of different Lie types");
}

// Class arithmetic in P/Q by table lookup: classes are indexed by their
// position in gamma_elements().
struct ClassTable {
  std::vector<GammaClass> elements;
  std::vector<std::size_t> omega_class;         // class index of omega_i
  std::vector<std::vector<std::size_t>> plus;   // plus[a][b] = index of a + b

  explicit ClassTable(const LieType& t) : elements(gamma_elements(t)) {
    auto index_of = [&](const GammaClass& g) {
      return static_cast<std::size_t>(std::find(elements.begin(), elements.end(), g) - elements.begin());
    };
    for (int i = 0; i < t.rank; ++i) {
      FiniteWeight w{t, IntVector(static_cast<std::size_t>(t.rank), 0)};
      w.coeffs[static_cast<std::size_t>(i)] = 1;
      omega_class.push_back(index_of(gamma_class(w)));
    }
    plus.assign(elements.size(), std::vector<std::size_t>(elements.size(), 0));
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) plus[a][b] = index_of(gamma_add(elements[a], elements[b]));
    }
  }

  std::size_t index_of(const GammaClass& g) const {
    return static_cast<std::size_t>(std::find(elements.begin(), elements.end(), g) - elements.begin());
  }
};

// Depth-first walk over c >= 0 with sum c_i a_i^vee <= budget. The visitor
// returns false to stop the walk.
template <class Visit>
bool walk_bounded(const IntVector& comarks, std::size_t pos, std::int64_t budget, IntVector& c, Visit&& visit) {
  if (pos == comarks.size()) return visit(c);
  for (std::int64_t v = 0; v * comarks[pos] <= budget; ++v) {
    c[pos] = v;
    if (!walk_bounded(comarks, pos + 1, budget - v * comarks[pos], c, visit)) return false;
  }
  c[pos] = 0;
  return true;
}

template <class Visit>
void for_each_realization(const LieType& t, std::int64_t level, const GammaClass& gamma, Visit&& visit) {
  if (level <= 0) throw ValidationError("realizations require a positive level");
  if (gamma.type != t) throw ValidationError("class belongs to a different Lie type");
  const auto rs = build_root_system(t);
  const ClassTable table(t);
  const std::size_t target = table.index_of(gamma);
  if (target == table.elements.size()) throw ValidationError("unknown class " + gamma.label());
  IntVector c(rs->comarks.size(), 0);
  walk_bounded(rs->comarks, 0, level, c, [&](const IntVector& coeffs) {
    std::size_t cls = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::int64_t r = 0; r < coeffs[i] % static_cast<std::int64_t>(table.elements.size()); ++r) {
        cls = table.plus[cls][table.omega_class[i]];
      }
    }
    if (cls != target) return true;
    return visit(coeffs);
  });
}

}  // namespace

AffineWeight AffineWeight::zero(const LieType& type) {
  return AffineWeight{type, 0, FiniteWeight{type, IntVector(static_cast<std::size_t>(type.rank), 0)}, 0};
}

void ToroidalWeight::validate() const {
  if (k == 0) throw ValidationError("toroidal weights need k >= 1");
  if (central.size() != k || deltas.size() != k) {
    throw ValidationError("central and delta vectors must have length k = " + std::to_string(k));
  }
  if (fin.type != type || fin.coeffs.size() != static_cast<std::size_t>(type.rank)) {
    throw ValidationError("finite part does not match type " + type.name());
  }
}

std::int64_t affine_simple_coroot_value(const AffineWeight& w) {
  return checked_add(w.level, -pairing_with_theta_coroot(w.fin));
}

bool is_dominant(const AffineWeight& w) { return w.fin.dominant() && affine_simple_coroot_value(w) >= 0; }

bool equal_up_to_delta_shift(const AffineWeight& a, const AffineWeight& b) {
  return a.type == b.type && a.level == b.level && a.fin == b.fin;
}

AffineWeight add(const AffineWeight& a, const AffineWeight& b) {
  require_same_type(a, b);
  AffineWeight out = a;
  out.level = checked_add(a.level, b.level);
  for (std::size_t i = 0; i < out.fin.coeffs.size(); ++i) {
    out.fin.coeffs[i] = checked_add(out.fin.coeffs[i], b.fin.coeffs[i]);
  }
  out.delta += b.delta;
  return out;
}

bool affine_geq(const AffineWeight& lambda, const AffineWeight& mu) {
  require_same_type(lambda, mu);
  // lambda - mu = sum_{i<=n} k_i alpha_i + k_{n+1} (delta_1 - theta).
  if (lambda.level != mu.level) return false;
  const Rational dd = lambda.delta - mu.delta;
  if (dd.get_den() != 1 || dd < 0) return false;
  const std::int64_t k_aff = to_int64(dd.get_num());
  const auto rs = build_root_system(lambda.type);
  const IntVector theta = alpha_to_omega(*rs, rs->theta);
  FiniteWeight diff = lambda.fin;
  for (std::size_t i = 0; i < diff.coeffs.size(); ++i) {
    diff.coeffs[i] = checked_add(checked_add(diff.coeffs[i], -mu.fin.coeffs[i]), checked_mul(k_aff, theta[i]));
  }
  const auto x = alpha_coordinates(diff);
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.get_den() == 1 && q >= 0; });
}

FiniteWeight min_coset_rep(const AffineWeight& lambda) {
  if (!is_dominant(lambda)) throw ValidationError("min_coset_rep requires a dominant weight");
  return gamma_representative(gamma_class(lambda.fin));
}

std::vector<FiniteWeight> realizations(const LieType& t, std::int64_t level, const GammaClass& gamma,
                                       std::size_t limit) {
  // The walk visits coefficient vectors in lexicographic order.
  std::vector<FiniteWeight> out;
  if (limit == 0) return out;
  for_each_realization(t, level, gamma, [&](const IntVector& c) {
    out.push_back(FiniteWeight{t, c});
    return out.size() < limit;
  });
  return out;
}

std::size_t count_realizations(const LieType& t, std::int64_t level, const GammaClass& gamma, std::size_t cap) {
  std::size_t count = 0;
  for_each_realization(t, level, gamma, [&](const IntVector&) { return ++count < cap; });
  return count;
}

ToroidalWeight weyl_translate(const ToroidalWeight& lambda, const IntVector& positive_root, std::size_t loop_index,
                              std::int64_t m) {
  lambda.validate();
  if (loop_index < 1 || loop_index > lambda.k) {
    throw ValidationError("loop index " + std::to_string(loop_index) + " outside 1.." + std::to_string(lambda.k));
  }
  const auto rs = build_root_system(lambda.type);
  if (positive_root_index(*rs, positive_root) < 0) throw ValidationError("not a positive root of " + lambda.type.name());

  const Rational c_rational = Rational(2) / root_norm(*rs, positive_root);
  if (c_rational.get_den() != 1) throw InternalError("2/(alpha|alpha) is not integral");
  const std::int64_t c = c_rational.get_num().get_si();
  const std::size_t i = loop_index - 1;
  const std::int64_t shift = checked_mul(checked_mul(c, m), lambda.central[i]);
  const std::int64_t pairing = pairing_with_coroot(*rs, lambda.fin.coeffs, positive_root);

  ToroidalWeight out = lambda;
  const IntVector alpha = alpha_to_omega(*rs, positive_root);
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    out.fin.coeffs[j] = checked_add(out.fin.coeffs[j], checked_mul(shift, alpha[j]));
  }
  out.deltas[i] -= Rational(static_cast<long>(checked_add(pairing, shift)));
  return out;
}

ToroidalWeight normalize_deltas(const ToroidalWeight& lambda, std::int64_t m) {
  lambda.validate();
  if (m <= 0) throw ValidationError("normalize_deltas requires m > 0");
  if (lambda.central[0] != m) throw ValidationError("<lambda, K_1> must equal m");
  for (std::size_t j = 1; j < lambda.k; ++j) {
    if (lambda.central[j] != 0) throw ValidationError("<lambda, K_j> must vanish for j >= 2");
    if (lambda.deltas[j].get_den() != 1) throw ValidationError("delta coefficients 2..k must be integral");
  }
  ToroidalWeight out = lambda;
  const Integer modulus(static_cast<long>(m));
  for (std::size_t j = 1; j < out.k; ++j) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), out.deltas[j].get_num_mpz_t(), modulus.get_mpz_t());
    out.deltas[j] = Rational(r);
  }
  return out;
}

GcdNormalForm gcd_normal_form(const IntVector& central) {
  std::int64_t g = 0;
  for (auto x : central) g = std::gcd(g, x);
  GcdNormalForm out{g, IntVector(central.size(), 0)};
  if (!central.empty()) out.normal[0] = g;
  return out;
}

}  // namespace torblocks
