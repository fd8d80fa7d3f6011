#pragma once

// Test-only reference computations. Nothing here calls into the library's
// arithmetic; each oracle works directly on GMP integers/rationals or by
// brute-force enumeration.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class upow(std::uint64_t p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Base-p digits of m mod p^N by repeated division.
inline std::vector<std::uint64_t> digits(const mpz_class& m, std::uint64_t p, unsigned n) {
  mpz_class rest = mod(m, upow(p, n));
  std::vector<std::uint64_t> out;
  for (unsigned i = 0; i < n; ++i) {
    out.push_back(mpz_class(rest % p).get_ui());
    rest /= p;
  }
  return out;
}

/// a_n = m mod p^n for n = 1..N.
inline std::vector<mpz_class> canonical(const mpz_class& m, std::uint64_t p, unsigned n) {
  std::vector<mpz_class> out;
  for (unsigned k = 1; k <= n; ++k) out.push_back(mod(m, upow(p, k)));
  return out;
}

/// x with x*y = 1 mod m, by exhaustive search (small m only).
inline std::optional<unsigned long> inverse_by_search(unsigned long y, unsigned long m) {
  for (unsigned long x = 0; x < m; ++x) {
    if ((x * y) % m == 1 % m) return x;
  }
  return std::nullopt;
}

/// Reduce an exact rational with denominator prime to p into [0, p^N).
inline mpz_class reduce_rational(const mpq_class& r, std::uint64_t p, unsigned n) {
  const mpz_class m = upow(p, n);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), r.get_den_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::runtime_error("denominator not invertible");
  }
  return mod(r.get_num() * inv, m);
}

/// -5 sum n^3 q^n/(1-q^n) as an exact rational partial sum, reduced mod p^N.
inline mpz_class a4_rational(const mpz_class& q, std::uint64_t p, unsigned n, unsigned terms) {
  mpq_class sum = 0;
  for (unsigned k = 1; k <= terms; ++k) {
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    mpq_class term(mpz_class(k) * k * k * qk, mpz_class(1 - qk));
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return reduce_rational(-5 * sum, p, n);
}

/// -(1/12) sum (5n^3 + 7n^5) q^n/(1-q^n); the 1/12 is kept as a rational.
inline mpz_class a6_rational(const mpz_class& q, std::uint64_t p, unsigned n, unsigned terms) {
  mpq_class sum = 0;
  for (unsigned k = 1; k <= terms; ++k) {
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    const mpz_class kk(k);
    mpq_class term((5 * kk * kk * kk + 7 * kk * kk * kk * kk * kk) * qk, mpz_class(12 * (1 - qk)));
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  mpq_class neg = -sum;
  neg.canonicalize();
  return reduce_rational(neg, p, n);
}

/// Smallest positive value of sum c_i g_i with |c_i| <= bound (0 when none).
inline mpq_class min_positive_combination(const std::vector<mpq_class>& gens, int bound) {
  mpq_class best = 0;
  std::vector<int> c(gens.size(), -bound);
  if (gens.empty()) return 0;
  while (true) {
    mpq_class v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) v += c[i] * gens[i];
    if (v > 0 && (best == 0 || v < best)) best = v;
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) break;
    ++c[i];
  }
  return best;
}

/// Exponent map with -1 meaning infinity; primes restricted to {2,3,5,7}.
using ExpMap = std::map<std::uint64_t, int>;
inline constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7};

/// Valuation of x at each small prime, plus whether x has other prime factors.
struct SmallFactorization {
  int v[4] = {0, 0, 0, 0};
  bool other = false;
};

inline SmallFactorization small_factor(unsigned x) {
  SmallFactorization f;
  for (int i = 0; i < 4; ++i) {
    while (x % kSmallPrimes[i] == 0) {
      x /= kSmallPrimes[i];
      ++f.v[i];
    }
  }
  f.other = x != 1;
  return f;
}

inline int exp_at(const ExpMap& n, std::uint64_t p) {
  auto it = n.find(p);
  return it == n.end() ? 0 : it->second;
}

/// Is (r/s) / l^j in Q(n)?  Works on valuations only.
inline bool scaled_member(const ExpMap& n, const SmallFactorization& r, const SmallFactorization& s,
                          int li, int j) {
  if (s.other) return false;  // a foreign prime survives in the denominator
  for (int i = 0; i < 4; ++i) {
    const int val = r.v[i] - s.v[i] - (i == li ? j : 0);
    if (val >= 0) continue;
    const int e = exp_at(n, kSmallPrimes[i]);
    if (e != -1 && -val > e) return false;
  }
  return true;
}

/// Brute-force search for positive r, s <= limit with r Q(n) = s Q(n2),
/// constraint-checked on the sample elements 1/l^j, j <= depth.
inline std::optional<std::pair<unsigned, unsigned>> brute_stable_iso(const ExpMap& n, const ExpMap& n2,
                                                                     unsigned limit, int depth) {
  static std::vector<SmallFactorization> table;
  if (table.size() <= limit) {
    table.clear();
    for (unsigned x = 0; x <= limit; ++x) table.push_back(x == 0 ? SmallFactorization{} : small_factor(x));
  }
  const SmallFactorization one{};
  for (unsigned r = 1; r <= limit; ++r) {
    for (unsigned s = 1; s <= limit; ++s) {
      // a non-reduced pair behaves like its reduction, which is visited too
      if (std::gcd(r, s) != 1) continue;
      bool ok = true;
      for (int li = 0; li < 4 && ok; ++li) {
        for (int j = depth; j >= 0 && ok; --j) {
          // x = 1/l^j
          if (scaled_member(n, one, one, li, j) && !scaled_member(n2, table[r], table[s], li, j)) ok = false;
          if (ok && scaled_member(n2, one, one, li, j) && !scaled_member(n, table[s], table[r], li, j)) ok = false;
        }
      }
      if (ok) return std::make_pair(r, s);
    }
  }
  return std::nullopt;
}

}  // namespace oracle
