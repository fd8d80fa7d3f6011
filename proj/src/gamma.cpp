#include "tatedual/gamma.hpp"

#include "tatedual/error.hpp"

namespace tatedual {

namespace {

void require_nonzero(const PAdicInt& q, const char* what) {
  if (q.is_zero()) {
    throw DomainError(std::string(what) + ": q = 0 at precision " +
                      std::to_string(q.precision()) + " (Gamma_0 is trivial; q != 0 is required)");
  }
}

std::size_t require_tate_regime(const PAdicInt& q, const char* what) {
  require_nonzero(q, what);
  const std::size_t v = *q.valuation();
  if (v == 0) {
    throw DomainError(std::string(what) + ": q has valuation 0 (|q| = 1), but |q| < 1 is required");
  }
  return v;
}

}  // namespace

CyclicSubgroupQ::CyclicSubgroupQ(Rational generator) : generator_(std::move(generator)) {
  if (generator_.sign() < 0) throw DomainError("subgroup generator must be nonnegative");
}

bool CyclicSubgroupQ::contains(const Rational& r) const {
  if (is_trivial()) return r.is_zero();
  return (r / generator_).is_integer();
}

std::string CyclicSubgroupQ::str() const {
  if (is_trivial()) return "0";
  return "(" + generator_.str() + ")Z";
}

std::vector<Rational> gamma_generators(const PAdicInt& q) {
  const auto seq = canonical_sequence(q);
  std::vector<Rational> out;
  out.reserve(seq.entries.size());
  BigInt modulus = 1;
  const BigInt base = to_bigint(q.prime());
  for (const auto& a : seq.entries) {
    modulus *= base;
    out.emplace_back(a, modulus);
  }
  return out;
}

HullCertificate cyclic_hull_certified(std::span<const Rational> gens) {
  BigInt common = 1;
  for (const auto& g : gens) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), g.denominator().get_mpz_t());
  }
  // Extended gcd over the numerators scaled to the common denominator.
  BigInt g = 0;
  std::vector<BigInt> coefficients(gens.size(), BigInt(0));
  BigInt s, t, next;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const BigInt m = gens[i].numerator() * (common / gens[i].denominator());
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) coefficients[j] *= s;
    coefficients[i] = t;
    g = next;
  }
  return HullCertificate{CyclicSubgroupQ(Rational(g, common)), std::move(coefficients)};
}

CyclicSubgroupQ cyclic_hull(std::span<const Rational> gens) {
  BigInt common = 1;
  for (const auto& g : gens) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), g.denominator().get_mpz_t());
  }
  BigInt g = 0;
  for (const auto& r : gens) {
    const BigInt m = r.numerator() * (common / r.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  }
  return CyclicSubgroupQ(Rational(g, common));
}

CyclicSubgroupQ gamma_group(const PAdicInt& q) {
  const auto gens = gamma_generators(q);
  return cyclic_hull(gens);
}

ContainsOneReport contains_one_report(const PAdicInt& q) {
  require_nonzero(q, "contains-one");
  const auto seq = canonical_sequence(q);
  BigInt g = 0;
  for (const auto& a : seq.entries) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  ContainsOneReport report;
  report.content = strip_prime(g, q.prime());
  report.hull = gamma_group(q);
  report.contains_one = report.hull.contains(Rational(1));
  return report;
}

DensityWitness density_witness(const PAdicInt& q, const Rational& target,
                               const Rational& epsilon) {
  require_nonzero(q, "density");
  if (epsilon.sign() <= 0) throw DomainError("density: epsilon must be positive");
  const Rational g = gamma_group(q).generator();
  if (g > epsilon) {
    // Each extra digit of precision shrinks the generator by a factor p.
    std::size_t extra = 0;
    Rational shrunk = g;
    const Rational base(to_bigint(q.prime()));
    while (shrunk > epsilon) {
      shrunk /= base;
      ++extra;
    }
    throw DomainError("density: hull generator " + g.str() + " exceeds epsilon " + epsilon.str() +
                      " at precision " + std::to_string(q.precision()) +
                      "; precision of about " + std::to_string(q.precision() + extra) +
                      " is needed");
  }
  const Rational t = target / g;
  BigInt k = t.floor();
  const Rational frac = t - Rational(k);
  if (frac > Rational(1, 2)) k += 1;  // exact ties keep the smaller multiple
  DensityWitness out;
  out.witness = Rational(k) * g;
  out.distance = (out.witness - target).abs();
  return out;
}

bool PruferRelationsReport::all_hold() const {
  if (!first_vanishes) return false;
  for (const auto& s : steps) {
    if (!s.holds) return false;
  }
  return true;
}

PruferRelationsReport prufer_relations_check(const PAdicInt& q) {
  const std::size_t v = require_tate_regime(q, "prufer-check");
  const Prime p = q.prime();
  const Rational pr(to_bigint(p));
  const auto gammas = gamma_generators(q);

  PruferRelationsReport report;
  report.p = p;
  report.valuation = v;
  report.first_vanishes = prufer_image(pr * gammas.front(), p).is_identity();
  for (std::size_t n = 1; n < gammas.size(); ++n) {
    PruferStep step;
    step.n = n;
    const Rational scaled = pr * gammas[n];
    step.discrepancy = scaled - gammas[n - 1];
    step.lhs = prufer_image(scaled, p);
    step.rhs = prufer_image(gammas[n - 1], p);
    step.holds = step.lhs == step.rhs && step.discrepancy.is_integer();
    report.steps.push_back(std::move(step));
  }
  for (const auto& g : gammas) report.levels.push_back(prufer_image(g, p).level());
  report.unbounded_order = v < gammas.size();
  for (std::size_t n = v + 1; n <= gammas.size(); ++n) {
    if (report.levels[n - 1] != n - v) report.unbounded_order = false;
  }
  return report;
}

SupernaturalLimit supernatural_limit(const PAdicInt& q) {
  require_tate_regime(q, "limit");
  const Prime p = q.prime();
  const auto gammas = gamma_generators(q);
  SupernaturalLimit out;
  out.sn = SupernaturalNumber::prime_power(p, Exponent::infinite());
  for (std::size_t n = 1; n <= gammas.size(); ++n) {
    const auto hull = cyclic_hull(std::span(gammas).first(n));
    if (hull.is_trivial()) continue;
    const Rational& g = hull.generator();
    out.contents.push_back(strip_prime(g.numerator(), p));
    out.denominator_exponents.push_back(multiplicity(g.denominator(), p));
  }
  out.scale = out.contents.back();
  const auto& c = out.contents;
  out.stabilized = c.size() >= 3 && c[c.size() - 1] == c[c.size() - 2] &&
                   c[c.size() - 2] == c[c.size() - 3];
  return out;
}

}  // namespace tatedual
