#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tatedual/bigint.hpp"
#include "tatedual/padic.hpp"
#include "tatedual/prufer.hpp"
#include "tatedual/rational.hpp"

namespace tatedual {

/// A rational point of R/Z = S^1, stored as its representative in [0, 1).
class CircleElement {
 public:
  CircleElement() = default;
  /// Reduces mod 1.
  explicit CircleElement(const Rational& r) : value_(r.fractional_part()) {}

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::string str() const { return value_.str(); }

  CircleElement operator+(const CircleElement& o) const { return CircleElement(value_ + o.value_); }
  CircleElement operator-() const { return CircleElement(-value_); }

  friend bool operator==(const CircleElement&, const CircleElement&) = default;

 private:
  Rational value_;
};

/// The pairing Z_p x Z(p^inf) -> Q/Z, (z, a/p^n) |-> z*a/p^n mod 1. Only
/// z mod p^n matters. Throws DomainError on a prime mismatch or when
/// gamma.level() exceeds the precision of z.
CircleElement pair(const PAdicInt& z, const PruferElement& gamma);

/// The character of Z(p^inf) attached to a p-adic integer z. It is evaluated
/// through the digit expansion of z, y(gamma) = sum_i c_i * (p^i gamma), which
/// only uses the group law of Z(p^inf).
class Character {
 public:
  explicit Character(PAdicInt z) : z_(std::move(z)) {}
  CircleElement operator()(const PruferElement& gamma) const;
  const PAdicInt& parameter() const { return z_; }

 private:
  PAdicInt z_;
};

/// The element x_gamma of the double dual: a character of Char(Z(p^inf)),
/// acting by evaluation, x_gamma(y) = y(gamma).
class BidualElement {
 public:
  explicit BidualElement(PruferElement gamma) : gamma_(std::move(gamma)) {}
  CircleElement operator()(const Character& y) const { return y(gamma_); }

 private:
  PruferElement gamma_;
};

/// x_gamma(y_z). Agrees with pair(z, gamma); the tests assert it.
CircleElement bidual_eval(const PruferElement& gamma, const PAdicInt& z);

struct PerfectnessReport {
  Prime p = 2;
  std::size_t level = 0;
  bool left_nondegenerate = false;   // every nonzero z pairs nontrivially
  bool right_nondegenerate = false;  // every nonzero gamma pairs nontrivially
  bool bilinear = false;
  std::vector<std::string> counterexamples;

  bool perfect() const { return left_nondegenerate && right_nondegenerate && bilinear; }
};

inline constexpr std::uint64_t kPerfectnessGuard = 1'000'000;

/// Exhaustive check that the pairing Z/p^n x (1/p^n)Z/Z -> Q/Z is perfect.
/// Throws DomainError when p^level exceeds kPerfectnessGuard.
PerfectnessReport perfectness_check(Prime p, std::size_t level);

}  // namespace tatedual
