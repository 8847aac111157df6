#pragma once

// Integer number theory on GMP integers: primality, factorization,
// squarefree parts and Hilbert symbols over Q.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace a1deg::integer {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Prime factors found so far and the part that resisted splitting. The
/// cofactor is 1 or a composite with no factor found within the effort bound.
struct Factorization {
  std::map<mpz_class, unsigned> primes;
  mpz_class cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

/// Pollard-Brent iterations allowed per unsplit composite.
inline constexpr std::uint64_t kFactorEffort = 1ULL << 19;

namespace detail {

inline mpz_class pollard_brent(const mpz_class& n, unsigned long seed, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
  if (c == 0) c = 1;
  const unsigned long m = 64;
  unsigned long r = 1;
  auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long len = std::min(m, r - k);
      for (unsigned long i = 0; i < len; ++i) {
        step(y);
        mpz_class diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = gcd(q, n);
      k += m;
      if (budget <= len) {
        budget = 0;
        if (g == 1) return n;
      } else {
        budget -= len;
      }
    }
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      g = gcd(mpz_class(abs(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

inline void factor_into(mpz_class n, Factorization& out, std::uint64_t effort) {
  if (n == 1) return;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Factorization half;
    factor_into(sqrt(n), half, effort);
    for (const auto& [p, e] : half.primes) out.primes[p] += 2 * e;
    out.cofactor *= half.cofactor * half.cofactor;
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.primes[n] += 1;
    return;
  }
  std::uint64_t budget = effort;
  for (unsigned long seed = 2; budget > 0; ++seed) {
    mpz_class d = pollard_brent(n, seed, budget);
    if (d != 1 && d != n) {
      factor_into(d, out, effort);
      factor_into(n / d, out, effort);
      return;
    }
  }
  out.cofactor *= n;
}

}  // namespace detail

/// Factorization of |n| (n != 0): trial division up to 2^16, then
/// Pollard-Brent on the cofactor within the effort bound.
inline Factorization factorization(mpz_class n, std::uint64_t effort = kFactorEffort) {
  Factorization out;
  n = abs(n);
  for (unsigned long p = 2; p < (1UL << 16); p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    if (mpz_class(p) * p > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e) out.primes[mpz_class(p)] += e;
  }
  if (n == 1) return out;
  if (n < mpz_class(1UL << 16) * (1UL << 16)) {
    out.primes[n] += 1;
    return out;
  }
  // Large inputs recur (diagonal entries, discriminants); remember them.
  thread_local std::map<mpz_class, Factorization> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Factorization big;
    detail::factor_into(n, big, effort);
    if (cache.size() > 4096) cache.clear();
    it = cache.emplace(n, std::move(big)).first;
  }
  for (const auto& [p, e] : it->second.primes) out.primes[p] += e;
  out.cofactor = it->second.cofactor;
  return out;
}

/// Signed squarefree part: n = s * k^2 with sign(s) = sign(n). s is squarefree
/// when the factorization completes; otherwise it keeps the unsplit cofactor
/// and is still a representative of the square class of n.
inline mpz_class squarefree_part(const mpz_class& n) {
  auto f = factorization(n);
  mpz_class s = sgn(n) < 0 ? -1 : 1;
  for (const auto& [p, e] : f.primes)
    if (e % 2) s *= p;
  return s * f.cofactor;
}

/// Prime divisors of n, or nullopt when the factorization is incomplete.
inline std::optional<std::vector<mpz_class>> prime_divisors(const mpz_class& n) {
  auto f = factorization(n);
  if (!f.complete()) return std::nullopt;
  std::vector<mpz_class> out;
  for (const auto& [p, e] : f.primes) out.push_back(p);
  return out;
}

/// p-adic valuation of a nonzero integer.
inline unsigned valuation(mpz_class n, const mpz_class& p) {
  unsigned v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

/// Hilbert symbol (a, b)_p of nonzero integers; p == 0 denotes the real place.
inline int hilbert_symbol(const mpz_class& a, const mpz_class& b,
                          const mpz_class& p) {
  if (p == 0) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  unsigned alpha = valuation(a, p), beta = valuation(b, p);
  mpz_class u = a, v = b;
  for (unsigned i = 0; i < alpha; ++i) u /= p;
  for (unsigned i = 0; i < beta; ++i) v /= p;
  if (p == 2) {
    auto mod8 = [](const mpz_class& x) {
      mpz_class r = x % 8;
      if (r < 0) r += 8;
      return r.get_ui();
    };
    unsigned long u8 = mod8(u), v8 = mod8(v);
    unsigned long eps_u = ((u8 - 1) / 2) % 2, eps_v = ((v8 - 1) / 2) % 2;
    unsigned long om_u = ((u8 * u8 - 1) / 8) % 2, om_v = ((v8 * v8 - 1) / 8) % 2;
    unsigned long e = eps_u * eps_v + alpha * om_v + beta * om_u;
    return e % 2 ? -1 : 1;
  }
  int sign = 1;
  mpz_class half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && mpz_odd_p(half.get_mpz_t())) sign = -sign;
  if (beta % 2 == 1) sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) sign *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
  return sign;
}

}  // namespace a1deg::integer
