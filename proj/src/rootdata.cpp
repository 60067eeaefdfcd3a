#include "torblocks/rootdata.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <utility>

#include "torblocks/zlattice.hpp"

namespace torblocks {

namespace {

struct DynkinTable {
  std::vector<std::pair<int, int>> edges;  // 1-based node pairs
  std::vector<Rational> norms;             // squared lengths, long = 2
  IntVector expected_comarks;
  std::size_t expected_root_count;
};

DynkinTable dynkin_table(const LieType& t) {
  const int n = t.rank;
  DynkinTable d;
  d.norms.assign(static_cast<std::size_t>(n), Rational(2));
  d.expected_comarks.assign(static_cast<std::size_t>(n), 1);
  auto chain = [&](int last) {
    for (int i = 1; i < last; ++i) d.edges.emplace_back(i, i + 1);
  };
  const auto un = static_cast<std::size_t>(n);
  switch (t.family) {
    case 'A':
      chain(n);
      d.expected_root_count = un * (un + 1);
      break;
    case 'B':
      chain(n);
      d.norms[un - 1] = 1;
      for (int i = 2; i < n; ++i) d.expected_comarks[static_cast<std::size_t>(i - 1)] = 2;
      d.expected_root_count = 2 * un * un;
      break;
    case 'C':
      chain(n);
      for (int i = 1; i < n; ++i) d.norms[static_cast<std::size_t>(i - 1)] = 1;
      d.expected_root_count = 2 * un * un;
      break;
    case 'D':
      chain(n - 1);
      d.edges.emplace_back(n - 2, n);
      for (int i = 2; i <= n - 2; ++i) d.expected_comarks[static_cast<std::size_t>(i - 1)] = 2;
      d.expected_root_count = 2 * un * (un - 1);
      break;
    case 'E':
      d.edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (n >= 7) d.edges.emplace_back(6, 7);
      if (n >= 8) d.edges.emplace_back(7, 8);
      if (n == 6) {
        d.expected_comarks = {1, 2, 2, 3, 2, 1};
        d.expected_root_count = 72;
      } else if (n == 7) {
        d.expected_comarks = {2, 2, 3, 4, 3, 2, 1};
        d.expected_root_count = 126;
      } else {
        d.expected_comarks = {2, 3, 4, 6, 5, 4, 3, 2};
        d.expected_root_count = 240;
      }
      break;
    case 'F':
      chain(4);
      d.norms = {2, 2, 1, 1};
      d.expected_comarks = {2, 3, 2, 1};
      d.expected_root_count = 48;
      break;
    case 'G':
      d.edges = {{1, 2}};
      d.norms = {Rational(2, 3), Rational(2)};
      d.expected_comarks = {1, 2};
      d.expected_root_count = 12;
      break;
    default:
      throw InternalError("unreachable Lie family");
  }
  return d;
}

std::vector<std::vector<Rational>> invert(const std::vector<IntVector>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InternalError("singular Cartan matrix");
    std::swap(a[p], a[c]);
    const Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
  return inv;
}

std::int64_t height(const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

std::shared_ptr<RootSystemData> compute(const LieType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  const DynkinTable table = dynkin_table(t);

  std::vector<std::vector<Rational>> form(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) form[i][i] = table.norms[i];
  for (auto [x, y] : table.edges) {
    const auto i = static_cast<std::size_t>(x - 1);
    const auto j = static_cast<std::size_t>(y - 1);
    const Rational v = -std::max(table.norms[i], table.norms[j]) / 2;
    form[i][j] = v;
    form[j][i] = v;
  }

  auto rs = std::make_shared<RootSystemData>();
  rs->type = t;
  rs->simple_norms = table.norms;
  rs->cartan.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = 2 * form[i][j] / table.norms[j];
      if (c.get_den() != 1) throw InternalError("non-integral Cartan entry");
      rs->cartan[i][j] = c.get_num().get_si();
    }
  }
  rs->cartan_inverse = invert(rs->cartan);

  // Positive roots by height, via root strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, p the length of the downward alpha_i-string.
  std::set<IntVector> known;
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    known.insert(e);
    layer.push_back(e);
  }
  std::vector<IntVector> positives = layer;
  while (!layer.empty()) {
    std::set<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;
        IntVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * rs->cartan[j][i];
        if (p - pairing > 0) {
          IntVector up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      positives.push_back(r);
    }
  }
  std::stable_sort(positives.begin(), positives.end(), [](const IntVector& a, const IntVector& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs->positive_roots = positives;
  rs->roots = positives;
  for (const auto& r : positives) {
    IntVector neg = r;
    for (auto& x : neg) x = -x;
    rs->roots.push_back(neg);
  }
  if (rs->roots.size() != table.expected_root_count) throw InternalError("root count mismatch for " + t.name());

  for (const auto& r : positives) rs->positive_norms.push_back(root_norm(*rs, r));

  rs->theta = positives.back();
  if (positives.size() > 1 && height(positives[positives.size() - 2]) == height(rs->theta)) {
    throw InternalError("highest root is not unique for " + t.name());
  }
  rs->theta_s = rs->theta;
  if (!t.simply_laced()) {
    for (std::size_t k = 0; k < positives.size(); ++k) {
      if (rs->positive_norms[k] < 2) rs->theta_s = positives[k];
    }
  }

  if (root_norm(*rs, rs->theta) != 2) throw InternalError("highest root is not long");
  rs->comarks.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational a = Rational(static_cast<long>(rs->theta[i])) * table.norms[i] / 2;
    if (a.get_den() != 1) throw InternalError("non-integral comark");
    rs->comarks[i] = a.get_num().get_si();
  }
  if (rs->comarks != table.expected_comarks) throw InternalError("comark table mismatch for " + t.name());
  return rs;
}

}  // namespace

LieType LieType::make(char family, int rank) {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 3; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) {
    throw ValidationError(std::string("inadmissible Lie type ") + family + std::to_string(rank));
  }
  return LieType{family, rank};
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2 || text.size() > 4) throw ValidationError("malformed Lie type '" + std::string(text) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw ValidationError("malformed Lie type '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
  }
  return make(text[0], rank);
}

std::string LieType::name() const { return family + std::to_string(rank); }

bool FiniteWeight::dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c >= 0; });
}

std::string GammaClass::label() const { return rep == 0 ? "0" : "w" + std::to_string(rep); }

GammaClass GammaClass::parse(const LieType& type, std::string_view label) {
  if (label == "0") return GammaClass{type, 0};
  if (label.size() >= 2 && label[0] == 'w') {
    int i = 0;
    for (char c : label.substr(1)) {
      if (c < '0' || c > '9') throw ValidationError("malformed class label '" + std::string(label) + "'");
      i = i * 10 + (c - '0');
    }
    const auto j0 = j0_set(type);
    if (std::find(j0.begin(), j0.end(), i) != j0.end()) return GammaClass{type, i};
  }
  throw ValidationError("'" + std::string(label) + "' is not a class label of " + type.name());
}

std::shared_ptr<const RootSystemData> build_root_system(const LieType& t) {
  const LieType checked = LieType::make(t.family, t.rank);
  static std::mutex mutex;
  static std::map<LieType, std::shared_ptr<const RootSystemData>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(checked);
  if (it == cache.end()) it = cache.emplace(checked, compute(checked)).first;
  return it->second;
}

std::vector<int> j0_set(const LieType& t) {
  const LieType c = LieType::make(t.family, t.rank);
  switch (c.family) {
    case 'A': {
      std::vector<int> all(static_cast<std::size_t>(c.rank));
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
    case 'B': return {c.rank};
    case 'C': return {1};
    case 'D': return {1, c.rank - 1, c.rank};
    case 'E':
      if (c.rank == 6) return {1, 6};
      if (c.rank == 7) return {7};
      return {};
    default: return {};
  }
}

std::vector<Integer> gamma_invariant_factors(const LieType& t) {
  const auto rs = build_root_system(t);
  BigMatrix m;
  for (const auto& row : rs->cartan) m.push_back(to_big(row));
  const SmithForm s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (s.diagonal[i][i] > 1) out.push_back(s.diagonal[i][i]);
  }
  return out;
}

std::vector<GammaClass> gamma_elements(const LieType& t) {
  std::vector<GammaClass> out{GammaClass{t, 0}};
  for (int i : j0_set(t)) out.push_back(GammaClass{t, i});
  return out;
}

std::vector<Rational> alpha_coordinates(const FiniteWeight& w) {
  const auto rs = build_root_system(w.type);
  const std::size_t n = rs->cartan.size();
  if (w.coeffs.size() != n) {
    throw ValidationError("weight of length " + std::to_string(w.coeffs.size()) + " for type " + w.type.name());
  }
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (w.coeffs[i] == 0) continue;
    const Rational c(static_cast<long>(w.coeffs[i]));
    for (std::size_t j = 0; j < n; ++j) x[j] += c * rs->cartan_inverse[i][j];
  }
  return x;
}

bool in_root_lattice(const FiniteWeight& w) {
  const auto x = alpha_coordinates(w);
  return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.get_den() == 1; });
}

GammaClass gamma_class(const FiniteWeight& w) {
  if (in_root_lattice(w)) return GammaClass{w.type, 0};
  for (int i : j0_set(w.type)) {
    FiniteWeight shifted = w;
    shifted.coeffs[static_cast<std::size_t>(i - 1)] -= 1;
    if (in_root_lattice(shifted)) return GammaClass{w.type, i};
  }
  throw InternalError("weight has no minuscule class representative");
}

FiniteWeight gamma_representative(const GammaClass& g) {
  FiniteWeight w{g.type, IntVector(static_cast<std::size_t>(g.type.rank), 0)};
  if (g.rep != 0) w.coeffs[static_cast<std::size_t>(g.rep - 1)] = 1;
  return w;
}

GammaClass gamma_add(const GammaClass& a, const GammaClass& b) {
  if (a.type != b.type) throw ValidationError("class addition across Lie types");
  FiniteWeight w = gamma_representative(a);
  const FiniteWeight v = gamma_representative(b);
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) w.coeffs[i] += v.coeffs[i];
  return gamma_class(w);
}

GammaClass gamma_negate(const GammaClass& a) {
  FiniteWeight w = gamma_representative(a);
  for (auto& c : w.coeffs) c = -c;
  return gamma_class(w);
}

IntVector alpha_to_omega(const RootSystemData& rs, const IntVector& alpha_coords) {
  const std::size_t n = rs.cartan.size();
  if (alpha_coords.size() != n) throw ValidationError("root of wrong length for " + rs.type.name());
  IntVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j] = checked_add(out[j], checked_mul(alpha_coords[i], rs.cartan[i][j]));
  }
  return out;
}

std::int64_t pairing_with_theta_coroot(const FiniteWeight& w) {
  const auto rs = build_root_system(w.type);
  if (w.coeffs.size() != rs->comarks.size()) throw ValidationError("weight of wrong length for " + w.type.name());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i) s = checked_add(s, checked_mul(w.coeffs[i], rs->comarks[i]));
  return s;
}

Rational root_norm(const RootSystemData& rs, const IntVector& beta_alpha) {
  // (beta|beta) = sum_ij b_i b_j (alpha_i|alpha_j), with (alpha_i|alpha_j) = C_ij |alpha_j|^2 / 2.
  Rational s = 0;
  const std::size_t n = rs.cartan.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s += Rational(static_cast<long>(beta_alpha[i] * beta_alpha[j] * rs.cartan[i][j])) * rs.simple_norms[j] / 2;
    }
  }
  return s;
}

std::int64_t pairing_with_coroot(const RootSystemData& rs, const IntVector& w_omega, const IntVector& beta_alpha) {
  // <omega_j, beta^vee> = b_j |alpha_j|^2 / |beta|^2.
  const Rational norm = root_norm(rs, beta_alpha);
  Rational s = 0;
  for (std::size_t j = 0; j < w_omega.size(); ++j) {
    s += Rational(static_cast<long>(w_omega[j])) * Rational(static_cast<long>(beta_alpha[j])) * rs.simple_norms[j];
  }
  s /= norm;
  if (s.get_den() != 1) throw InternalError("non-integral coroot pairing");
  return to_int64(s.get_num());
}

int positive_root_index(const RootSystemData& rs, const IntVector& beta_alpha) {
  const auto it = std::find(rs.positive_roots.begin(), rs.positive_roots.end(), beta_alpha);
  return it == rs.positive_roots.end() ? -1 : static_cast<int>(it - rs.positive_roots.begin());
}

}  // namespace torblocks
