#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "tatedual/bigint.hpp"
#include "tatedual/rational.hpp"

namespace tatedual {

/// An element a/p^n mod 1 of the Pruefer group Z(p^inf), fully reduced:
/// 0 <= a < p^n and p does not divide a unless n = 0 (then a = 0).
/// The element has order p^level.
class PruferElement {
 public:
  explicit PruferElement(Prime p);  // identity

  /// Reduces a/p^level mod 1 to canonical form.
  static PruferElement make(Prime p, std::size_t level, const BigInt& numerator);

  /// `a/p^n`, e.g. `3/2^3`. Non-reduced input is reduced.
  static PruferElement parse(std::string_view text);

  Prime prime() const { return p_; }
  std::size_t level() const { return level_; }
  const BigInt& numerator() const { return numerator_; }
  BigInt order() const;
  bool is_identity() const { return level_ == 0; }

  /// The representative in [0, 1).
  Rational value() const;

  PruferElement operator+(const PruferElement& o) const;
  PruferElement operator-() const;
  PruferElement scaled(const BigInt& k) const;

  std::string str() const;

  friend bool operator==(const PruferElement&, const PruferElement&) = default;

 private:
  PruferElement(Prime p, std::size_t level, BigInt numerator)
      : p_(p), level_(level), numerator_(std::move(numerator)) {}

  Prime p_;
  std::size_t level_ = 0;
  BigInt numerator_;
};

/// gamma mod 1 as an element of Z(p^inf). Throws DomainError when the
/// denominator of gamma has a prime factor other than p.
PruferElement prufer_image(const Rational& gamma, Prime p);

}  // namespace tatedual
