#pragma once

#include <cstddef>
#include <cstdint>

#include "tatedual/bigint.hpp"
#include "tatedual/padic.hpp"

namespace tatedual {

struct TateCoefficients {
  PAdicInt a4;
  PAdicInt a6;
  std::size_t terms_used = 0;
  /// Valuation of q, or N when q vanishes at precision N (then
  /// valuation_exact is false and both coefficients are zero).
  std::size_t q_valuation = 0;
  bool valuation_exact = true;
};

/// Least n_max with (n_max + 1) * v >= N. Term n of either series has
/// valuation >= n*v because 1 - q^n is a unit, so terms beyond n_max vanish
/// mod p^N. A q whose digits all vanish has v >= N and gets n_max = 0.
/// Throws DomainError when q is a unit (|q| = 1, the series diverge).
std::size_t truncation_index(const PAdicInt& q);

/// (5n^3 + 7n^5) / 12, always an integer. Throws std::logic_error otherwise.
BigInt a6_coefficient(std::uint64_t n);

/// a4(q) = -5 sum n^3 q^n / (1 - q^n), mod p^N.
PAdicInt a4(const PAdicInt& q);
/// a6(q) = -sum (5n^3 + 7n^5)/12 * q^n / (1 - q^n), mod p^N.
PAdicInt a6(const PAdicInt& q);

/// The same sums cut at an explicit number of terms (>= 0).
PAdicInt a4_partial(const PAdicInt& q, std::size_t terms);
PAdicInt a6_partial(const PAdicInt& q, std::size_t terms);

TateCoefficients tate_coefficients(const PAdicInt& q);

}  // namespace tatedual
