#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tatedual/bigint.hpp"
#include "tatedual/padic.hpp"
#include "tatedual/prufer.hpp"
#include "tatedual/rational.hpp"
#include "tatedual/supernatural.hpp"

namespace tatedual {

/// The subgroup g*Z of Q for a generator g >= 0 (g = 0 is the trivial group).
/// Every finitely generated subgroup of Q has this form.
class CyclicSubgroupQ {
 public:
  CyclicSubgroupQ() = default;
  explicit CyclicSubgroupQ(Rational generator);

  const Rational& generator() const { return generator_; }
  bool is_trivial() const { return generator_.is_zero(); }
  bool contains(const Rational& r) const;

  /// `(1/6)Z`, `0`
  std::string str() const;

  friend bool operator==(const CyclicSubgroupQ&, const CyclicSubgroupQ&) = default;

 private:
  Rational generator_;
};

/// Hull generator together with integer coefficients expressing it as a
/// combination of the inputs: generator = sum coefficients[i] * gens[i].
struct HullCertificate {
  CyclicSubgroupQ group;
  std::vector<BigInt> coefficients;
};

/// gamma_n = a_n / p^n for n = 1..N, reduced.
std::vector<Rational> gamma_generators(const PAdicInt& q);

CyclicSubgroupQ cyclic_hull(std::span<const Rational> gens);
HullCertificate cyclic_hull_certified(std::span<const Rational> gens);

/// The truncation of Gamma_q at the precision of q.
CyclicSubgroupQ gamma_group(const PAdicInt& q);

inline bool contains(const CyclicSubgroupQ& g, const Rational& r) { return g.contains(r); }

struct ContainsOneReport {
  bool contains_one = false;
  /// Prime-to-p part of gcd{a_n : a_n != 0}.
  BigInt content;
  CyclicSubgroupQ hull;
};

/// Whether 1 lies in the truncated group. The integer-containment argument via
/// a Euclid step needs coprime numerators; when all a_n share a factor prime
/// to p (q = 6 at p = 3, say) the answer is false and the shared factor shows
/// up as the content. Throws DomainError for q = 0.
ContainsOneReport contains_one_report(const PAdicInt& q);

struct DensityWitness {
  Rational witness;
  Rational distance;
};

/// Nearest element of the truncated group to `target` (ties go to the smaller
/// element). Requires the hull generator to be at most epsilon; otherwise
/// throws DomainError with an estimate of the precision needed.
DensityWitness density_witness(const PAdicInt& q, const Rational& target, const Rational& epsilon);

struct PruferStep {
  std::size_t n = 0;  // relation p*gamma_{n+1} = gamma_n (mod 1)
  bool holds = false;
  /// p*gamma_{n+1} - gamma_n, which should be the integer digit b_{n+1}.
  Rational discrepancy;
  PruferElement lhs;  // image of p*gamma_{n+1}
  PruferElement rhs;  // image of gamma_n

  PruferStep() : lhs(2), rhs(2) {}
};

struct PruferRelationsReport {
  Prime p = 2;
  std::size_t valuation = 0;
  bool first_vanishes = false;  // p*gamma_1 = 0 mod 1
  std::vector<PruferStep> steps;
  std::vector<std::size_t> levels;  // level of the reduced image of gamma_n
  /// Levels of gamma_{v+1}, ..., gamma_N are exactly 1, 2, ..., N - v: every
  /// step produces an element of strictly larger order.
  bool unbounded_order = false;

  bool all_hold() const;
};

/// Checks the Pruefer relations among the images of gamma_n in Q/Z.
/// Requires q != 0 and valuation(q) >= 1.
PruferRelationsReport prufer_relations_check(const PAdicInt& q);

struct SupernaturalLimit {
  SupernaturalNumber sn;
  BigInt scale;
  bool stabilized = false;
  std::vector<BigInt> contents;             // per nontrivial truncation level
  std::vector<std::size_t> denominator_exponents;
};

/// Empirical limit of the truncations: Gamma_q = scale * Z[1/p]. `stabilized`
/// is true iff the content was constant over the last three nontrivial
/// truncation levels. Requires q != 0 and valuation(q) >= 1.
SupernaturalLimit supernatural_limit(const PAdicInt& q);

}  // namespace tatedual
