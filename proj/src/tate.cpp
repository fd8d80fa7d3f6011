#include "tatedual/tate.hpp"

#include <stdexcept>

#include "tatedual/error.hpp"

namespace tatedual {

namespace {

std::size_t checked_valuation(const PAdicInt& q) {
  const auto v = q.valuation();
  if (v && *v == 0) {
    throw DomainError("q is a unit (valuation 0): the Tate series need 0 < |q| < 1");
  }
  return v.value_or(q.precision());
}

// sum_{n=1}^{terms} coefficient(n) * q^n / (1 - q^n) mod p^N
template <class Coefficient>
PAdicInt lambert_sum(const PAdicInt& q, std::size_t terms, Coefficient coefficient) {
  checked_valuation(q);
  const Prime p = q.prime();
  const std::size_t N = q.precision();
  const PAdicInt one = PAdicInt::one(p, N);
  PAdicInt sum = PAdicInt::zero(p, N);
  PAdicInt power = one;
  for (std::size_t n = 1; n <= terms; ++n) {
    power = power * q;
    if (power.is_zero()) break;  // every later term vanishes as well
    const PAdicInt c = PAdicInt::from_integer(coefficient(n), p, N);
    sum = sum + c * power * invert(one - power);
  }
  return sum;
}

BigInt cube(std::uint64_t n) {
  const BigInt b = to_bigint(n);
  return b * b * b;
}

}  // namespace

std::size_t truncation_index(const PAdicInt& q) {
  const std::size_t v = checked_valuation(q);
  const std::size_t N = q.precision();
  return (N + v - 1) / v - 1;
}

BigInt a6_coefficient(std::uint64_t n) {
  const BigInt b = to_bigint(n);
  const BigInt b3 = b * b * b;
  const BigInt numerator = 5 * b3 + 7 * b3 * b * b;
  if (numerator % 12 != 0) {
    throw std::logic_error("(5n^3 + 7n^5)/12 is not an integer for n = " + std::to_string(n));
  }
  return numerator / 12;
}

PAdicInt a4_partial(const PAdicInt& q, std::size_t terms) {
  return lambert_sum(q, terms, [](std::uint64_t n) { return BigInt(-5 * cube(n)); });
}

PAdicInt a6_partial(const PAdicInt& q, std::size_t terms) {
  return lambert_sum(q, terms, [](std::uint64_t n) { return BigInt(-a6_coefficient(n)); });
}

PAdicInt a4(const PAdicInt& q) { return a4_partial(q, truncation_index(q)); }

PAdicInt a6(const PAdicInt& q) { return a6_partial(q, truncation_index(q)); }

TateCoefficients tate_coefficients(const PAdicInt& q) {
  const std::size_t terms = truncation_index(q);
  const auto v = q.valuation();
  return TateCoefficients{a4_partial(q, terms), a6_partial(q, terms), terms,
                          v.value_or(q.precision()), v.has_value()};
}

}  // namespace tatedual
