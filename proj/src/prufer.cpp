#include "tatedual/prufer.hpp"

#include <regex>

#include "tatedual/error.hpp"

namespace tatedual {

PruferElement::PruferElement(Prime p) : p_(p), level_(0), numerator_(0) { require_prime(p); }

PruferElement PruferElement::make(Prime p, std::size_t level, const BigInt& numerator) {
  require_prime(p);
  const BigInt modulus = pow(p, level);
  BigInt a;
  mpz_fdiv_r(a.get_mpz_t(), numerator.get_mpz_t(), modulus.get_mpz_t());
  if (a == 0) return PruferElement(p);
  const std::size_t k = multiplicity(a, p);
  BigInt reduced;
  mpz_divexact(reduced.get_mpz_t(), a.get_mpz_t(), pow(p, k).get_mpz_t());
  return PruferElement(p, level - k, std::move(reduced));
}

PruferElement PruferElement::parse(std::string_view text) {
  static const std::regex kPattern(R"(^\s*([+-]?\d+)/(\d+)\^(\d+)\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kPattern)) {
    throw ParseError("malformed Pruefer element '" + std::string(text) + "' (expected 'a/p^n')");
  }
  return make(parse_u64(m[2].str()), parse_u64(m[3].str()), parse_bigint(m[1].str()));
}

BigInt PruferElement::order() const { return pow(p_, level_); }

Rational PruferElement::value() const { return Rational(numerator_, pow(p_, level_)); }

PruferElement PruferElement::operator+(const PruferElement& o) const {
  if (o.p_ != p_) throw DomainError("cannot add elements of Z(p^inf) for different primes");
  const std::size_t level = std::max(level_, o.level_);
  const BigInt a = numerator_ * pow(p_, level - level_) + o.numerator_ * pow(p_, level - o.level_);
  return make(p_, level, a);
}

PruferElement PruferElement::operator-() const { return make(p_, level_, -numerator_); }

PruferElement PruferElement::scaled(const BigInt& k) const {
  return make(p_, level_, numerator_ * k);
}

std::string PruferElement::str() const {
  return to_string(numerator_) + "/" + std::to_string(p_) + "^" + std::to_string(level_);
}

PruferElement prufer_image(const Rational& gamma, Prime p) {
  require_prime(p);
  const BigInt den = gamma.denominator();
  const std::size_t k = den == 1 ? 0 : multiplicity(den, p);
  if (den != pow(p, k)) {
    throw DomainError("denominator of " + gamma.str() + " is not a power of " +
                      std::to_string(p));
  }
  return PruferElement::make(p, k, gamma.numerator());
}

}  // namespace tatedual
