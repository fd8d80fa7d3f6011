#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tatedual/bigint.hpp"
#include "tatedual/rational.hpp"

namespace tatedual {

/// Exponent of a prime in a supernatural number: a natural number or infinity.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr explicit Exponent(std::uint64_t k) : value_(k) {}
  static constexpr Exponent infinite() {
    Exponent e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Only meaningful when finite.
  constexpr std::uint64_t finite_value() const { return value_; }

  /// Saturating at infinity.
  friend Exponent operator+(Exponent a, Exponent b);

  /// True when a count of `k` is within this exponent.
  constexpr bool admits(std::uint64_t k) const { return infinite_ || k <= value_; }

  std::string str() const;

  friend constexpr bool operator==(Exponent a, Exponent b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Exponent a, Exponent b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// Formal product of prime powers p^{n_p} with n_p in N u {inf}, stored as a
/// finite map with no zero entries so that equality is map equality.
class SupernaturalNumber {
 public:
  SupernaturalNumber() = default;  // the supernatural number 1

  static SupernaturalNumber prime_power(Prime p, Exponent e);
  static SupernaturalNumber from_integer(std::uint64_t n);

  /// `1` or a factor list like `2^inf*3^2*5`.
  static SupernaturalNumber parse(std::string_view text);

  Exponent exponent(Prime p) const;
  const std::map<Prime, Exponent>& factors() const { return factors_; }
  std::set<Prime> infinite_primes() const;
  bool is_one() const { return factors_.empty(); }

  /// Prime-wise exponent sum.
  SupernaturalNumber operator*(const SupernaturalNumber& o) const;
  bool divides(const SupernaturalNumber& o) const;

  std::string str() const;

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

 private:
  void set(Prime p, Exponent e);

  std::map<Prime, Exponent> factors_;
};

/// Membership of r in Q(n): every prime power in the denominator of r is
/// bounded by the exponent of that prime in n.
bool qn_contains(const SupernaturalNumber& n, const Rational& r);

/// Positive integers with r*Q(n) = s*Q(n').
struct ScalingWitness {
  BigInt r;
  BigInt s;
};

struct StableIsoDecision {
  bool equal = false;
  std::optional<ScalingWitness> witness;
};

/// Decides r*Q(n) = s*Q(n') for some positive integers r, s. For exponent maps
/// of finite support the finite exponents can always be absorbed by scaling,
/// so the decision reduces to comparing the sets of primes with infinite
/// exponent. (In general the criterion also needs the finite exponent
/// differences to have finite sum, which is automatic here.) The returned
/// witness is re-verified against sample elements before returning.
StableIsoDecision stably_isomorphic(const SupernaturalNumber& n, const SupernaturalNumber& n2);

}  // namespace tatedual
