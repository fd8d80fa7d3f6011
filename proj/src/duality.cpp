#include "tatedual/duality.hpp"

#include <limits>
#include <numeric>
#include <optional>

#include "tatedual/error.hpp"

namespace tatedual {

namespace {

__extension__ typedef unsigned __int128 u128;

void require_compatible(const PAdicInt& z, const PruferElement& gamma) {
  if (z.prime() != gamma.prime()) {
    throw DomainError("prime mismatch: z is " + std::to_string(z.prime()) + "-adic but gamma is in Z(" +
                      std::to_string(gamma.prime()) + "^inf)");
  }
  if (gamma.level() > z.precision()) {
    throw DomainError("gamma has level " + std::to_string(gamma.level()) + " but z is known only to precision " +
                      std::to_string(z.precision()) + "; precision " + std::to_string(gamma.level()) +
                      " is needed");
  }
}

// p^level when it fits in a machine word
std::optional<unsigned long> small_order(const PruferElement& gamma) {
  const unsigned long p = gamma.prime();
  unsigned long m = 1;
  for (std::size_t i = 0; i < gamma.level(); ++i) {
    if (m > std::numeric_limits<unsigned long>::max() / p) return std::nullopt;
    m *= p;
  }
  return m;
}

}  // namespace

CircleElement pair(const PAdicInt& z, const PruferElement& gamma) {
  require_compatible(z, gamma);
  if (auto word = small_order(gamma); word && z.residue().fits_ulong_p() && gamma.numerator().fits_ulong_p()) {
    // word-size fast path; the numerator is already reduced mod the order
    const unsigned long m = *word;
    const auto v = static_cast<u128>(z.residue().get_ui() % m) * gamma.numerator().get_ui() % m;
    const unsigned long g = std::gcd(static_cast<unsigned long>(v), m);
    return CircleElement(Rational(BigInt(static_cast<unsigned long>(v) / g), BigInt(m / g)));
  }
  const BigInt modulus = gamma.order();
  BigInt v = z.residue() * gamma.numerator();
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
  return CircleElement(Rational(v, modulus));
}

CircleElement Character::operator()(const PruferElement& gamma) const {
  require_compatible(z_, gamma);
  const auto digits = z_.digits();
  PruferElement acc(gamma.prime());
  PruferElement shifted = gamma;  // p^i * gamma
  for (std::size_t i = 0; i < gamma.level(); ++i) {
    if (digits[i] != 0) acc = acc + shifted.scaled(to_bigint(digits[i]));
    shifted = shifted.scaled(to_bigint(gamma.prime()));
  }
  return CircleElement(acc.value());
}

CircleElement bidual_eval(const PruferElement& gamma, const PAdicInt& z) {
  const BidualElement x(gamma);
  return x(Character(z));
}

PerfectnessReport perfectness_check(Prime p, std::size_t level) {
  require_prime(p);
  if (pow(p, level) > to_bigint(kPerfectnessGuard)) {
    throw DomainError("perfectness check: " + std::to_string(p) + "^" + std::to_string(level) +
                      " exceeds the enumeration guard of " + std::to_string(kPerfectnessGuard));
  }
  PerfectnessReport report;
  report.p = p;
  report.level = level;
  report.left_nondegenerate = report.right_nondegenerate = report.bilinear = true;
  if (level == 0) return report;  // both groups are trivial

  const std::uint64_t m = to_u64(pow(p, level));
  auto note = [&](std::string what) {
    if (report.counterexamples.size() < 16) report.counterexamples.push_back(std::move(what));
  };

  // Elements of level <= n are a/p^n; gamma[1] generates the group.
  std::vector<PruferElement> gamma;
  gamma.reserve(m);
  for (std::uint64_t a = 0; a < m; ++a) gamma.push_back(PruferElement::make(p, level, to_bigint(a)));
  for (std::uint64_t a = 0; a < m; ++a) {
    if (gamma[a] + gamma[1] != gamma[(a + 1) % m]) {
      report.bilinear = false;
      note("Pruefer addition: " + gamma[a].str() + " + " + gamma[1].str());
    }
  }

  // Character values lie in (1/p^n)Z/Z; store them as numerators over p^n.
  auto scaled_value = [&](const CircleElement& c) {
    const Rational& v = c.value();
    return v.numerator().get_ui() * (m / v.denominator().get_ui());
  };
  auto row_of = [&](std::uint64_t zv) {
    const PAdicInt z = PAdicInt::from_integer(to_bigint(zv), p, level);
    std::vector<std::uint64_t> row(m);
    for (std::uint64_t a = 0; a < m; ++a) row[a] = scaled_value(pair(z, gamma[a]));
    return row;
  };

  const auto unit_row = row_of(1);
  std::vector<bool> column_hit(m, false);
  std::vector<std::uint64_t> previous;
  for (std::uint64_t zv = 0; zv < m; ++zv) {
    auto row = zv == 1 ? unit_row : row_of(zv);
    bool row_hit = false;
    for (std::uint64_t a = 0; a < m; ++a) {
      if (row[a] != 0) {
        row_hit = true;
        column_hit[a] = true;
      }
      // additivity in gamma: <z, gamma_a + gamma_1> = <z, gamma_a> + <z, gamma_1>
      if (row[(a + 1) % m] != (row[a] + row[1]) % m) {
        report.bilinear = false;
        note("additivity in gamma fails at z=" + std::to_string(zv) + ", gamma=" + gamma[a].str());
      }
      // additivity in z: <z, gamma> = <z - 1, gamma> + <1, gamma>
      if (zv > 0 && row[a] != (previous[a] + unit_row[a]) % m) {
        report.bilinear = false;
        note("additivity in z fails at z=" + std::to_string(zv) + ", gamma=" + gamma[a].str());
      }
    }
    if (zv != 0 && !row_hit) {
      report.left_nondegenerate = false;
      note("z=" + std::to_string(zv) + " pairs trivially with every gamma");
    }
    previous = std::move(row);
  }
  // wraparound: <0, gamma> = <m - 1, gamma> + <1, gamma>
  for (std::uint64_t a = 0; a < m; ++a) {
    if ((previous[a] + unit_row[a]) % m != 0) {
      report.bilinear = false;
      note("additivity in z fails across p^n at gamma=" + gamma[a].str());
    }
  }
  for (std::uint64_t a = 1; a < m; ++a) {
    if (!column_hit[a]) {
      report.right_nondegenerate = false;
      note("gamma=" + gamma[a].str() + " pairs trivially with every z");
    }
  }
  return report;
}

}  // namespace tatedual
