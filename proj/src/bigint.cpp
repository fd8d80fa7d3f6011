#include "tatedual/bigint.hpp"

#include <cctype>
#include <limits>

#include "tatedual/error.hpp"

namespace tatedual {

BigInt to_bigint(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

std::uint64_t to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw DomainError("value " + to_string(v) + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return BigInt(s, 10);
}

std::uint64_t parse_u64(std::string_view text) {
  BigInt v = parse_bigint(text);
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw ParseError("expected a nonnegative 64-bit integer, got '" + std::string(text) + "'");
  }
  return to_u64(v);
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt pow(Prime p, std::size_t e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), to_bigint(p).get_mpz_t(), e);
  return r;
}

std::size_t multiplicity(const BigInt& v, Prime p) {
  if (v == 0) throw DomainError("multiplicity of 0 is unbounded");
  BigInt rest = abs(v);
  return mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), to_bigint(p).get_mpz_t());
}

BigInt strip_prime(const BigInt& v, Prime p) {
  if (v == 0) throw DomainError("cannot strip a prime from 0");
  BigInt rest = abs(v);
  mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), to_bigint(p).get_mpz_t());
  return rest;
}

std::optional<std::uint64_t> smallest_factor(std::uint64_t n) {
  if (n < 4) return std::nullopt;
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  // 6k +- 1 wheel
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0) return d;
    if (n % (d + 2) == 0) return d + 2;
  }
  return std::nullopt;
}

// GMP's test is BPSW, exact below 2^64
bool is_prime(std::uint64_t n) {
  return n >= 2 && mpz_probab_prime_p(to_bigint(n).get_mpz_t(), 25) != 0;
}

void require_prime(std::uint64_t p) {
  if (p < 2) throw DomainError("p = " + std::to_string(p) + " is not prime (must be at least 2)");
  if (is_prime(p)) return;
  const auto f = smallest_factor(p);
  throw DomainError("p = " + std::to_string(p) + " is not prime (divisible by " + std::to_string(f.value_or(p)) +
                    ")");
}

std::vector<std::pair<Prime, std::size_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<Prime, std::size_t>> out;
  while (n > 1) {
    const std::uint64_t f = smallest_factor(n).value_or(n);
    std::size_t k = 0;
    while (n % f == 0) {
      n /= f;
      ++k;
    }
    out.emplace_back(f, k);
  }
  return out;
}

}  // namespace tatedual
