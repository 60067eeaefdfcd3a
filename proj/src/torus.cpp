#include "torblocks/torus.hpp"

#include <algorithm>

namespace torblocks {

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  Integer y = seed % n, c = (seed * 7 + 3) % n, m = 128, g = 1, r = 1, q = 1;
  Integer x, ys;
  auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0, lim = std::min<Integer>(m, r - k); i < lim; ++i) {
        y = f(y);
        q = (q * abs(x - y)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(Integer n, std::int64_t sign, std::map<Integer, std::int64_t>& out) {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    while (n % p == 0) {
      out[Integer(p)] += sign;
      n /= p;
    }
  }
  for (unsigned long p = 17; p < 5000 && Integer(p) * p <= n; p += 2) {
    while (n % p == 0) {
      out[Integer(p)] += sign;
      n /= p;
    }
  }
  std::vector<Integer> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    Integer x = stack.back();
    stack.pop_back();
    if (mpz_probab_prime_p(x.get_mpz_t(), 30) > 0) {
      out[x] += sign;
      continue;
    }
    Integer d = x;
    for (unsigned long seed = 2; d == x || d == 1; ++seed) d = pollard_brent(x, seed);
    stack.push_back(d);
    stack.push_back(x / d);
  }
}

void require_64bit(const Integer& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 64) {
    throw ValidationError("torus coordinate " + z.get_str() + " exceeds the 64-bit factorization limit");
  }
}

}  // namespace

FactoredRational FactoredRational::of(const Rational& q) {
  if (q == 0) throw ValidationError("torus coordinates must be nonzero");
  require_64bit(abs(q.get_num()));
  require_64bit(q.get_den());
  FactoredRational f;
  f.negative = q < 0;
  factor_into(abs(q.get_num()), 1, f.exponents);
  factor_into(q.get_den(), -1, f.exponents);
  std::erase_if(f.exponents, [](const auto& kv) { return kv.second == 0; });
  return f;
}

Rational FactoredRational::value() const {
  Integer num = 1, den = 1;
  for (const auto& [p, e] : exponents) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e > 0 ? e : -e));
    (e > 0 ? num : den) *= pe;
  }
  Rational r(negative ? Integer(-num) : num, den);
  r.canonicalize();
  return r;
}

TorusPoint::TorusPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  factored_.reserve(coords_.size());
  for (auto& c : coords_) {
    c.canonicalize();
    factored_.push_back(FactoredRational::of(c));
  }
}

TorusPoint TorusPoint::ones(std::size_t dim) { return TorusPoint(std::vector<Rational>(dim, Rational(1))); }

std::strong_ordering TorusPoint::operator<=>(const TorusPoint& o) const {
  const std::size_t n = std::min(coords_.size(), o.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(coords_[i], o.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return coords_.size() <=> o.coords_.size();
}

Rational evaluate(const TorusPoint& p, const BigVector& m) {
  if (m.size() != p.dim()) throw ValidationError("exponent vector length does not match the torus dimension");
  Integer num = 1, den = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!m[j].fits_ulong_p() && !Integer(-m[j]).fits_ulong_p()) throw ValidationError("exponent too large");
    const unsigned long e = Integer(abs(m[j])).get_ui();
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), p.coords()[j].get_num_mpz_t(), e);
    mpz_pow_ui(b.get_mpz_t(), p.coords()[j].get_den_mpz_t(), e);
    if (m[j] > 0) {
      num *= a;
      den *= b;
    } else {
      num *= b;
      den *= a;
    }
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational evaluate(const TorusPoint& p, const IntVector& m) { return evaluate(p, to_big(m)); }

ZLattice relation_lattice(const std::vector<Rational>& q) {
  const std::size_t d = q.size();
  std::vector<FactoredRational> f;
  for (const auto& x : q) f.push_back(FactoredRational::of(x));
  std::map<Integer, std::size_t> primes;
  for (const auto& x : f) {
    for (const auto& kv : x.exponents) primes.emplace(kv.first, 0);
  }
  std::size_t idx = 0;
  for (auto& kv : primes) kv.second = idx++;

  // Columns: m_1..m_d, then one auxiliary y with sum_j sign_j m_j - 2y = 0.
  BigMatrix system(primes.size() + 1, BigVector(d + 1, 0));
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [p, e] : f[j].exponents) system[primes.at(p)][j] = static_cast<long>(e);
    system.back()[j] = f[j].negative ? 1 : 0;
  }
  system.back()[d] = -2;
  return project_kernel(system, d + 1, d);
}

TorusPoint scale(const ScalingElement& b, const TorusPoint& p) {
  validate_scaling(b, p.dim());
  std::vector<Rational> c(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) c[j] = b[j] * p.coords()[j];
  return TorusPoint(std::move(c));
}

ScalingElement ratio(const TorusPoint& p, const TorusPoint& q) {
  if (p.dim() != q.dim()) throw ValidationError("torus points of different dimensions");
  ScalingElement b(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) b[j] = p.coords()[j] / q.coords()[j];
  return b;
}

ScalingElement inverse(const ScalingElement& b) {
  ScalingElement out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) throw ValidationError("scaling components must be nonzero");
    out[j] = 1 / b[j];
  }
  return out;
}

ScalingElement identity_scaling(std::size_t dim) { return ScalingElement(dim, Rational(1)); }

void validate_scaling(const ScalingElement& b, std::size_t dim) {
  if (b.size() != dim) throw ValidationError("scaling element has the wrong dimension");
  for (const auto& x : b) {
    if (x == 0) throw ValidationError("scaling components must be nonzero");
  }
}

std::vector<int> sign_bits(const TorusPoint& p) {
  std::vector<int> s;
  for (const auto& c : p.coords()) s.push_back(c < 0 ? 1 : 0);
  return s;
}

}  // namespace torblocks
