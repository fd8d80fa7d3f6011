#pragma once

// Random inputs shared by the property tests and the acceptance suite.

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "tatedual/padic.hpp"
#include "tatedual/rational.hpp"
#include "tatedual/supernatural.hpp"

namespace gen {

/// q with valuation >= 1 that does not vanish at precision n (needs n >= 2).
inline tatedual::PAdicInt small_q(std::mt19937_64& rng, tatedual::Prime p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("small_q: no such q at precision < 2");
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  while (true) {
    std::vector<std::uint64_t> ds(n);
    for (auto& c : ds) c = d(rng);
    ds[0] = 0;
    auto q = tatedual::PAdicInt::from_digits(p, ds);
    if (!q.is_zero()) return q;
  }
}

/// Support in {2,3,5,7}, exponents in {0..5, inf}.
inline tatedual::SupernaturalNumber supernatural(std::mt19937_64& rng) {
  using tatedual::Exponent;
  tatedual::SupernaturalNumber out;
  for (auto p : oracle::kSmallPrimes) {
    const int k = static_cast<int>(rng() % 7);
    const Exponent e = k == 6 ? Exponent::infinite() : Exponent(k);
    out = out * tatedual::SupernaturalNumber::prime_power(p, e);
  }
  return out;
}

inline oracle::ExpMap to_map(const tatedual::SupernaturalNumber& n) {
  oracle::ExpMap m;
  for (const auto& [p, e] : n.factors()) {
    m[p] = e.is_infinite() ? -1 : static_cast<int>(e.finite_value());
  }
  return m;
}

/// Product of p^{max(a_p - b_p, 0)} over primes finite in both; this is the
/// smallest admissible r when the infinite supports agree.
inline mpz_class finite_excess(const oracle::ExpMap& a, const oracle::ExpMap& b) {
  mpz_class r = 1;
  for (auto p : oracle::kSmallPrimes) {
    const int x = oracle::exp_at(a, p);
    const int y = oracle::exp_at(b, p);
    if (x >= 0 && y >= 0 && x > y) r *= oracle::upow(p, x - y);
  }
  return r;
}

/// A pair (n, n2) for brute-force comparison: whenever the infinite supports
/// agree, the minimal scaling factors stay within `limit`.
inline std::pair<tatedual::SupernaturalNumber, tatedual::SupernaturalNumber> comparable_pair(
    std::mt19937_64& rng, unsigned limit) {
  while (true) {
    auto n = supernatural(rng);
    auto n2 = supernatural(rng);
    if (rng() % 2) {
      // share the infinite support, perturb the finite part
      tatedual::SupernaturalNumber shared;
      for (auto p : oracle::kSmallPrimes) {
        const auto e = n.exponent(p).is_infinite() ? tatedual::Exponent::infinite()
                                                   : tatedual::Exponent(rng() % 4);
        shared = shared * tatedual::SupernaturalNumber::prime_power(p, e);
      }
      n2 = shared;
    }
    if (n.infinite_primes() != n2.infinite_primes()) return {n, n2};
    const auto a = to_map(n);
    const auto b = to_map(n2);
    if (finite_excess(a, b) <= limit && finite_excess(b, a) <= limit) return {n, n2};
  }
}

/// Random element of Q(n): numerator / (product of admissible prime powers).
inline tatedual::Rational element_of(std::mt19937_64& rng, const tatedual::SupernaturalNumber& n) {
  tatedual::BigInt den = 1;
  for (const auto& [p, e] : n.factors()) {
    const std::uint64_t cap = e.is_infinite() ? 12 : e.finite_value();
    den *= tatedual::pow(p, rng() % (cap + 1));
  }
  const long num = static_cast<long>(rng() % 2001) - 1000;
  return tatedual::Rational(tatedual::BigInt(num), den);
}

}  // namespace gen
