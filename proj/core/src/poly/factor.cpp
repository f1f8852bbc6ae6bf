// Factorization over Q: Yun's square-free decomposition, then Zassenhaus
// (Berlekamp-free: distinct-degree plus Cantor-Zassenhaus modulo a small
// prime, quadratic Hensel lifting, exhaustive recombination).

#include "freeop/poly/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace freeop {
namespace {

using ZPoly = std::vector<Integer>;
using Fp = std::vector<std::uint64_t>;

// ---- arithmetic in F_p[x] -------------------------------------------------

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Primes stay far below 2^32, so products fit in 64 bits.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

Fp to_fp(const ZPoly& f, std::uint64_t p) {
  Fp out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  trim(out);
  return out;
}

Fp fp_sub(Fp a, const Fp& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Fp fp_mul(const Fp& a, const Fp& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(out);
  return out;
}

std::pair<Fp, Fp> fp_divmod(Fp a, const Fp& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  Fp q(a.size() - db, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const std::uint64_t c = mulmod(a[i], inv, p);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(q);
  trim(a);
  return {q, a};
}

Fp fp_mod(const Fp& a, const Fp& b, std::uint64_t p) { return fp_divmod(a, b, p).second; }

Fp fp_monic(Fp a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<Fp, Fp> fp_xgcd(const Fp& a, const Fp& b, std::uint64_t p) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t inv = invmod(r0.front(), p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  return {s0, t0};
}

Fp fp_powmod(Fp base, Integer e, const Fp& m, std::uint64_t p) {
  Fp r{1};
  base = fp_mod(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(fp_mul(r, base, p), m, p);
    base = fp_mod(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Fp fp_derivative(const Fp& a, std::uint64_t p) {
  Fp d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % p, p));
  trim(d);
  return d;
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Fp, int>> distinct_degree(Fp f, std::uint64_t p) {
  std::vector<std::pair<Fp, int>> out;
  const Fp x{0, 1};
  Fp h = fp_mod(x, f, p);
  int i = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (i + 1)) {
    ++i;
    h = fp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    Fp g = fp_gcd(fp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      f = fp_divmod(f, g, p).first;
      h = fp_mod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
void equal_degree(const Fp& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Fp>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
  exponent = (exponent - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (;;) {
    Fp a(n);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() < 2) continue;
    Fp b = fp_sub(fp_powmod(a, exponent, g, p), Fp{1}, p);
    Fp c = fp_gcd(b, g, p);
    if (c.size() > 1 && c.size() < g.size()) {
      equal_degree(c, d, p, rng, out);
      equal_degree(fp_divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- arithmetic in (Z/M)[x] with M a prime power ---------------------------

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  a = zreduce(std::move(a), m);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - db, Integer(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return {zreduce(std::move(q), m), zreduce(std::move(a), m)};
}

ZPoly from_fp(const Fp& a) {
  ZPoly out;
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

struct HenselState {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2: f = g*h, s*g + t*h = 1,
// h monic.
void hensel_step(const ZPoly& f, HenselState& st, const Integer& m) {
  const Integer mm = m * m;
  ZPoly e = zreduce(zsub(f, zmul(st.g, st.h)), mm);
  auto [q, r] = zdivmod_monic(zmul(st.s, e), st.h, mm);
  ZPoly g = zreduce(zadd(zadd(st.g, zmul(st.t, e)), zmul(q, st.g)), mm);
  ZPoly h = zreduce(zadd(st.h, r), mm);
  ZPoly b = zreduce(zsub(zadd(zmul(st.s, g), zmul(st.t, h)), ZPoly{Integer(1)}), mm);
  auto [c, d] = zdivmod_monic(zmul(st.s, b), h, mm);
  st.s = zreduce(zsub(st.s, d), mm);
  st.t = zreduce(zsub(zsub(st.t, zmul(st.t, b)), zmul(c, g)), mm);
  st.g = std::move(g);
  st.h = std::move(h);
}

// Lifts f = lc * prod(factors) mod p to the same factorization modulo
// p^(2^steps); returns the monic lifted factors.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const Integer& lc, const std::vector<Fp>& factors,
                                    std::uint64_t p, int steps, const Integer& modulus) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly u = f;
    for (auto& c : u) c *= inv;
    return {zreduce(std::move(u), modulus)};
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<Fp> left(factors.begin(), factors.begin() + half);
  const std::vector<Fp> right(factors.begin() + half, factors.end());
  Fp g0{mpz_fdiv_ui(lc.get_mpz_t(), p)};
  for (const auto& u : left) g0 = fp_mul(g0, u, p);
  Fp h0{1};
  for (const auto& u : right) h0 = fp_mul(h0, u, p);
  auto [s0, t0] = fp_xgcd(g0, h0, p);
  HenselState st{from_fp(g0), from_fp(h0), from_fp(s0), from_fp(t0)};
  Integer m(static_cast<unsigned long>(p));
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, st, m);
    m *= m;
  }
  auto a = multifactor_lift(st.g, lc, left, p, steps, modulus);
  auto b = multifactor_lift(st.h, Integer(1), right, p, steps, modulus);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---- integer polynomial helpers ------------------------------------------

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly f) {
  const Integer c = content(f);
  if (c == 0) return f;
  for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0) {
    for (auto& x : f) x = -x;
  }
  return f;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(f);
  return f;
}

// Exact division over Z; nullopt if g does not divide f.
std::optional<ZPoly> divide_exact(const ZPoly& f, const ZPoly& g) {
  if (f.size() < g.size()) return std::nullopt;
  ZPoly rem = f;
  ZPoly q(f.size() - g.size() + 1, Integer(0));
  for (std::size_t i = rem.size() - 1;; --i) {
    if (rem[i] == 0) {
      if (i == g.size() - 1) break;
      continue;
    }
    if (!mpz_divisible_p(rem[i].get_mpz_t(), g.back().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), g.back().get_mpz_t());
    q[i - g.size() + 1] = c;
    for (std::size_t j = 0; j < g.size(); ++j) rem[i - g.size() + 1 + j] -= c * g[j];
    if (i == g.size() - 1) break;
  }
  ztrim(rem);
  if (!rem.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Fp> factor_mod_p(const ZPoly& f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eed + p);
  std::vector<Fp> out;
  for (const auto& [g, d] : distinct_degree(fp_monic(to_fp(f, p), p), p)) equal_degree(g, d, p, rng, out);
  return out;
}

// Irreducible factors of a primitive square-free integer polynomial with
// positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  std::uint64_t best_p = 0;
  std::vector<Fp> best;
  int candidates = 0;
  for (std::uint64_t p = 3; candidates < 5; p += 2) {
    if (!is_prime(p) || mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    const Fp fp = to_fp(f, p);
    if (fp_gcd(fp, fp_derivative(fp, p), p).size() != 1) continue;
    ++candidates;
    auto fac = factor_mod_p(f, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1) return {f};
  }
  const std::uint64_t p = best_p;

  // Coefficients of lc * (any factor) are bounded by |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = abs(f.back()) * norm;
  bound <<= n;
  Integer modulus(static_cast<unsigned long>(p));
  int steps = 0;
  while (modulus <= 2 * bound) {
    modulus *= modulus;
    ++steps;
  }

  std::vector<ZPoly> lifted = multifactor_lift(f, f.back(), best, p, steps, modulus);
  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

  for (std::size_t size = 1; 2 * size <= idx.size();) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly g{rest.back()};
      for (auto k : pick) g = zreduce(zmul(g, lifted[idx[k]]), modulus);
      g = primitive(symmetric(g, modulus));
      if (!g.empty() && mpz_divisible_p(rest.front().get_mpz_t(), g.front().get_mpz_t())) {
        if (auto q = divide_exact(rest, g)) {
          result.push_back(g);
          rest = *q;
          std::vector<std::size_t> keep;
          for (std::size_t k = 0; k < idx.size(); ++k) {
            if (std::find(pick.begin(), pick.end(), k) == pick.end()) keep.push_back(idx[k]);
          }
          idx = std::move(keep);
          found = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == idx.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  return result;
}

ZPoly to_integer_primitive(const UPoly& f) {
  Integer den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coefficients()) z.push_back(Integer(c * den));
  return primitive(std::move(z));
}

UPoly to_monic(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& x : z) c.emplace_back(x);
  return UPoly(std::move(c)).monic();
}

// Yun's algorithm: pairs (g_i, i) with f = lc * prod g_i^i, g_i square-free.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  const UPoly fp = f.derivative();
  const UPoly a0 = gcd(f, fp);
  UPoly b = f / a0;
  UPoly c = fp / a0;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

bool factor_less(const std::pair<UPoly, int>& a, const std::pair<UPoly, int>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  const auto& x = a.first.coefficients();
  const auto& y = b.first.coefficients();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return a.second < b.second;
}

}  // namespace

UFactorization factor(const UPoly& f) {
  UFactorization out{f.is_zero() ? Rational(0) : f.leading(), {}};
  if (f.degree() <= 0) return out;
  for (const auto& [g, mult] : squarefree_decomposition(f.monic())) {
    if (g.degree() == 1) {
      out.factors.emplace_back(g, mult);
      continue;
    }
    for (const auto& z : zassenhaus(to_integer_primitive(g))) out.factors.emplace_back(to_monic(z), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

}  // namespace freeop
