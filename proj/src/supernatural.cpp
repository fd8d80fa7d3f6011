#include "tatedual/supernatural.hpp"

#include <algorithm>
#include <stdexcept>

#include "tatedual/error.hpp"

namespace tatedual {

Exponent operator+(Exponent a, Exponent b) {
  if (a.infinite_ || b.infinite_) return Exponent::infinite();
  return Exponent(a.value_ + b.value_);
}

std::string Exponent::str() const { return infinite_ ? "inf" : std::to_string(value_); }

void SupernaturalNumber::set(Prime p, Exponent e) {
  if (e.is_zero()) {
    factors_.erase(p);
  } else {
    factors_[p] = e;
  }
}

SupernaturalNumber SupernaturalNumber::prime_power(Prime p, Exponent e) {
  require_prime(p);
  SupernaturalNumber n;
  n.set(p, e);
  return n;
}

SupernaturalNumber SupernaturalNumber::from_integer(std::uint64_t n) {
  if (n == 0) throw DomainError("0 is not a supernatural number");
  SupernaturalNumber out;
  for (const auto& [p, k] : factorize(n)) out.set(p, Exponent(k));
  return out;
}

SupernaturalNumber SupernaturalNumber::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "1") return {};
  if (text.empty()) throw ParseError("empty supernatural number");
  SupernaturalNumber out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('*', start), text.size());
    const std::string_view factor = text.substr(start, end - start);
    const std::size_t caret = factor.find('^');
    const std::string_view base = factor.substr(0, caret);
    if (base.empty()) throw ParseError("malformed supernatural factor '" + std::string(factor) + "'");
    const Prime p = parse_u64(base);
    if (!is_prime(p)) {
      throw ParseError("supernatural factor base " + std::string(base) + " is not prime");
    }
    Exponent e(1);
    if (caret != std::string_view::npos) {
      const std::string_view exp = factor.substr(caret + 1);
      e = exp == "inf" ? Exponent::infinite() : Exponent(parse_u64(exp));
    }
    out.set(p, out.exponent(p) + e);
    start = end + 1;
  }
  return out;
}

Exponent SupernaturalNumber::exponent(Prime p) const {
  const auto it = factors_.find(p);
  return it == factors_.end() ? Exponent(0) : it->second;
}

std::set<Prime> SupernaturalNumber::infinite_primes() const {
  std::set<Prime> out;
  for (const auto& [p, e] : factors_) {
    if (e.is_infinite()) out.insert(p);
  }
  return out;
}

SupernaturalNumber SupernaturalNumber::operator*(const SupernaturalNumber& o) const {
  SupernaturalNumber out = *this;
  for (const auto& [p, e] : o.factors_) out.set(p, out.exponent(p) + e);
  return out;
}

bool SupernaturalNumber::divides(const SupernaturalNumber& o) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const auto& f) { return f.second <= o.exponent(f.first); });
}

std::string SupernaturalNumber::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != Exponent(1)) out += "^" + e.str();
  }
  return out;
}

bool qn_contains(const SupernaturalNumber& n, const Rational& r) {
  BigInt rest = r.denominator();
  for (const auto& [p, e] : n.factors()) {
    if (rest == 1) break;
    const std::size_t k = multiplicity(rest, p);
    if (!e.admits(k)) return false;
    rest = strip_prime(rest, p);
  }
  return rest == 1;
}

namespace {

// r*Q(n) = s*Q(n2) checked on the elements 1/l^j for primes l in either
// support, with j running a little past the largest finite exponent.
bool witness_holds(const SupernaturalNumber& n, const SupernaturalNumber& n2,
                   const ScalingWitness& w) {
  std::set<Prime> primes;
  for (const auto& [p, e] : n.factors()) primes.insert(p);
  for (const auto& [p, e] : n2.factors()) primes.insert(p);
  const Rational forward(w.r, w.s);
  const Rational backward(w.s, w.r);
  for (Prime l : primes) {
    std::uint64_t top = 0;
    for (Exponent e : {n.exponent(l), n2.exponent(l)}) {
      if (!e.is_infinite()) top = std::max(top, e.finite_value());
    }
    for (std::uint64_t j = 0; j <= top + 2; ++j) {
      const Rational x(BigInt(1), pow(l, j));
      if (qn_contains(n, x) && !qn_contains(n2, forward * x)) return false;
      if (qn_contains(n2, x) && !qn_contains(n, backward * x)) return false;
    }
  }
  return true;
}

}  // namespace

StableIsoDecision stably_isomorphic(const SupernaturalNumber& n, const SupernaturalNumber& n2) {
  StableIsoDecision out;
  out.equal = n.infinite_primes() == n2.infinite_primes();
  if (!out.equal) return out;

  ScalingWitness w{1, 1};
  auto absorb = [](BigInt& into, Prime p, Exponent hi, Exponent lo) {
    if (hi.is_infinite() || hi <= lo) return;
    into *= pow(p, hi.finite_value() - lo.finite_value());
  };
  std::set<Prime> primes;
  for (const auto& [p, e] : n.factors()) primes.insert(p);
  for (const auto& [p, e] : n2.factors()) primes.insert(p);
  for (Prime p : primes) {
    absorb(w.r, p, n.exponent(p), n2.exponent(p));
    absorb(w.s, p, n2.exponent(p), n.exponent(p));
  }
  if (!witness_holds(n, n2, w)) {
    throw std::logic_error("stable isomorphism witness failed verification for " + n.str() +
                           " and " + n2.str());
  }
  out.witness = std::move(w);
  return out;
}

}  // namespace tatedual
