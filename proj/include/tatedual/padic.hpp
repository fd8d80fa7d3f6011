#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tatedual/bigint.hpp"

namespace tatedual {

/// A p-adic integer known to a fixed precision N, i.e. a residue mod p^N.
///
/// Digits are least-significant first: c_0 is the unit digit and the value is
/// sum c_i p^i over i < N. Every operation is exact mod p^N; precision is never
/// extended implicitly, and binary operations require equal p and N.
///
/// Values are immutable and hold no shared state, so they may be freely used
/// from several threads.
class PAdicInt {
 public:
  /// Residue of m mod p^N (m may be negative). Throws DomainError when p is
  /// not prime or N < 1.
  static PAdicInt from_integer(const BigInt& m, Prime p, std::size_t precision);

  /// Digits c_0..c_{N-1}; N is the length of the list. Each digit must lie in
  /// [0, p-1].
  static PAdicInt from_digits(Prime p, std::span<const std::uint64_t> digits);

  /// `p=<prime> N=<precision> digits=[c0,c1,...]` or `p=<prime> N=<precision> int=<m>`.
  static PAdicInt parse(std::string_view text);

  static PAdicInt zero(Prime p, std::size_t precision) { return from_integer(0, p, precision); }
  static PAdicInt one(Prime p, std::size_t precision) { return from_integer(1, p, precision); }

  Prime prime() const { return p_; }
  std::size_t precision() const { return precision_; }

  /// The canonical residue in [0, p^N).
  const BigInt& residue() const { return residue_; }
  const BigInt& modulus() const { return modulus_; }

  std::vector<std::uint64_t> digits() const;

  /// Index of the first nonzero digit; nullopt when every stored digit is zero,
  /// meaning the valuation is at least the precision.
  std::optional<std::size_t> valuation() const;

  bool is_zero() const { return residue_ == 0; }
  bool is_unit() const;

  /// Same number at a lower precision (n <= N).
  PAdicInt truncated(std::size_t n) const;

  /// `p=2 N=4 digits=[0,1,0,0]`
  std::string str() const;
  /// `2 mod 2^4`
  std::string residue_str() const;

  friend bool operator==(const PAdicInt& a, const PAdicInt& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.residue_ == b.residue_;
  }

 private:
  PAdicInt(Prime p, std::size_t precision, BigInt residue, BigInt modulus);

  Prime p_;
  std::size_t precision_;
  BigInt residue_;
  BigInt modulus_;

  friend PAdicInt operator+(const PAdicInt& x, const PAdicInt& y);
  friend PAdicInt operator-(const PAdicInt& x, const PAdicInt& y);
  friend PAdicInt operator*(const PAdicInt& x, const PAdicInt& y);
  friend PAdicInt operator-(const PAdicInt& x);
  friend PAdicInt invert(const PAdicInt& x);
};

PAdicInt operator+(const PAdicInt& x, const PAdicInt& y);
PAdicInt operator-(const PAdicInt& x, const PAdicInt& y);
PAdicInt operator*(const PAdicInt& x, const PAdicInt& y);
PAdicInt operator-(const PAdicInt& x);

/// The unique z with x*z = 1 mod p^N. Throws DomainError (with the valuation)
/// when x is not a unit.
PAdicInt invert(const PAdicInt& x);

enum class ArithOp { kAdd, kSub, kNeg, kMul, kInvert };

std::optional<ArithOp> parse_arith_op(std::string_view name);
std::string_view arith_op_name(ArithOp op);

/// Dispatch form used by the C API and CLI. Binary operations require y.
PAdicInt arithmetic(ArithOp op, const PAdicInt& x, const std::optional<PAdicInt>& y = std::nullopt);

/// The integers a_1..a_N with 0 <= a_n < p^n and a_n = x mod p^n.
struct CanonicalSequence {
  Prime p = 2;
  std::vector<BigInt> entries;  // entries[n-1] is a_n

  /// Checks both the range bound and the congruence chain a_{n+1} = a_n mod p^n.
  bool satisfies_invariants() const;
};

CanonicalSequence canonical_sequence(const PAdicInt& x);

}  // namespace tatedual
