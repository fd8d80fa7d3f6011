#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tatedual {

using BigInt = mpz_class;

/// Primes are restricted to a machine word; everything they generate
/// (powers, residues, numerators) is a BigInt.
using Prime = std::uint64_t;

BigInt to_bigint(std::uint64_t v);
std::uint64_t to_u64(const BigInt& v);  // throws DomainError when out of range

/// Strict decimal parse: optional sign followed by digits, nothing else.
BigInt parse_bigint(std::string_view text);
std::uint64_t parse_u64(std::string_view text);

std::string to_string(const BigInt& v);

BigInt pow(Prime p, std::size_t e);

/// Largest k with p^k | v, for v != 0.
std::size_t multiplicity(const BigInt& v, Prime p);

/// v with every factor of p removed (v != 0). Sign is dropped.
BigInt strip_prime(const BigInt& v, Prime p);

/// Smallest nontrivial factor of n, by trial division; nullopt when n is prime.
/// n < 2 has no factor and is not prime either; see is_prime.
std::optional<std::uint64_t> smallest_factor(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Throws DomainError naming a factor when p is not prime.
void require_prime(std::uint64_t p);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<Prime, std::size_t>> factorize(std::uint64_t n);

}  // namespace tatedual
