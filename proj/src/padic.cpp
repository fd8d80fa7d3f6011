#include "tatedual/padic.hpp"

#include <regex>

#include "tatedual/error.hpp"

namespace tatedual {

namespace {

void require_same_ring(const PAdicInt& x, const PAdicInt& y) {
  if (x.prime() != y.prime() || x.precision() != y.precision()) {
    throw DomainError("operands live in different rings: Z/" + std::to_string(x.prime()) + "^" +
                      std::to_string(x.precision()) + " vs Z/" + std::to_string(y.prime()) + "^" +
                      std::to_string(y.precision()));
  }
}

std::vector<std::string> split_list(const std::string& body) {
  std::vector<std::string> items;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      items.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() || !items.empty()) items.push_back(cur);
  return items;
}

}  // namespace

PAdicInt::PAdicInt(Prime p, std::size_t precision, BigInt residue, BigInt modulus)
    : p_(p), precision_(precision), residue_(std::move(residue)), modulus_(std::move(modulus)) {}

PAdicInt PAdicInt::from_integer(const BigInt& m, Prime p, std::size_t precision) {
  require_prime(p);
  if (precision < 1) throw DomainError("precision must be at least 1");
  BigInt modulus = pow(p, precision);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  return PAdicInt(p, precision, std::move(r), std::move(modulus));
}

PAdicInt PAdicInt::from_digits(Prime p, std::span<const std::uint64_t> digits) {
  require_prime(p);
  if (digits.empty()) throw DomainError("precision must be at least 1");
  const BigInt base = to_bigint(p);
  BigInt value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= p) {
      throw ParseError("digit " + std::to_string(*it) + " out of range [0, " +
                       std::to_string(p - 1) + "]");
    }
    value = value * base + to_bigint(*it);
  }
  return PAdicInt(p, digits.size(), std::move(value), pow(p, digits.size()));
}

PAdicInt PAdicInt::parse(std::string_view text) {
  static const std::regex kPattern(
      R"(^\s*p=(\d+)\s+N=(\d+)\s+(?:digits=\[([^\]]*)\]|int=([+-]?\d+))\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kPattern)) {
    throw ParseError("malformed p-adic integer '" + std::string(text) +
                     "' (expected 'p=<prime> N=<precision> digits=[...]' or '... int=<m>')");
  }
  const Prime p = parse_u64(m[1].str());
  const std::uint64_t n = parse_u64(m[2].str());
  if (m[4].matched) return from_integer(parse_bigint(m[4].str()), p, n);

  std::vector<std::uint64_t> digits;
  for (const auto& item : split_list(m[3].str())) digits.push_back(parse_u64(item));
  if (digits.size() != n) {
    throw ParseError("digit list has " + std::to_string(digits.size()) + " entries but N = " +
                     std::to_string(n));
  }
  return from_digits(p, digits);
}

std::vector<std::uint64_t> PAdicInt::digits() const {
  std::vector<std::uint64_t> out;
  out.reserve(precision_);
  const BigInt base = to_bigint(p_);
  BigInt rest = residue_;
  BigInt d;
  for (std::size_t i = 0; i < precision_; ++i) {
    mpz_fdiv_qr(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    out.push_back(to_u64(d));
  }
  return out;
}

std::optional<std::size_t> PAdicInt::valuation() const {
  if (residue_ == 0) return std::nullopt;
  return multiplicity(residue_, p_);
}

bool PAdicInt::is_unit() const {
  return mpz_divisible_p(residue_.get_mpz_t(), to_bigint(p_).get_mpz_t()) == 0;
}

PAdicInt PAdicInt::truncated(std::size_t n) const {
  if (n < 1 || n > precision_) {
    throw DomainError("cannot truncate precision " + std::to_string(precision_) + " to " +
                      std::to_string(n));
  }
  BigInt modulus = pow(p_, n);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), residue_.get_mpz_t(), modulus.get_mpz_t());
  return PAdicInt(p_, n, std::move(r), std::move(modulus));
}

std::string PAdicInt::str() const {
  std::string out = "p=" + std::to_string(p_) + " N=" + std::to_string(precision_) + " digits=[";
  const auto ds = digits();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ds[i]);
  }
  return out + "]";
}

std::string PAdicInt::residue_str() const {
  return to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(precision_);
}

PAdicInt operator+(const PAdicInt& x, const PAdicInt& y) {
  require_same_ring(x, y);
  BigInt r = x.residue_ + y.residue_;
  if (r >= x.modulus_) r -= x.modulus_;
  return PAdicInt(x.p_, x.precision_, std::move(r), x.modulus_);
}

PAdicInt operator-(const PAdicInt& x, const PAdicInt& y) {
  require_same_ring(x, y);
  BigInt r = x.residue_ - y.residue_;
  if (sgn(r) < 0) r += x.modulus_;
  return PAdicInt(x.p_, x.precision_, std::move(r), x.modulus_);
}

PAdicInt operator*(const PAdicInt& x, const PAdicInt& y) {
  require_same_ring(x, y);
  BigInt r = x.residue_ * y.residue_;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), x.modulus_.get_mpz_t());
  return PAdicInt(x.p_, x.precision_, std::move(r), x.modulus_);
}

PAdicInt operator-(const PAdicInt& x) {
  BigInt r = x.residue_ == 0 ? BigInt(0) : BigInt(x.modulus_ - x.residue_);
  return PAdicInt(x.p_, x.precision_, std::move(r), x.modulus_);
}

PAdicInt invert(const PAdicInt& x) {
  if (!x.is_unit()) {
    const auto v = x.valuation();
    throw DomainError("cannot invert a non-unit: valuation " +
                      (v ? std::to_string(*v) : ">= " + std::to_string(x.precision_)));
  }
  BigInt r;
  mpz_invert(r.get_mpz_t(), x.residue_.get_mpz_t(), x.modulus_.get_mpz_t());
  return PAdicInt(x.p_, x.precision_, std::move(r), x.modulus_);
}

std::optional<ArithOp> parse_arith_op(std::string_view name) {
  if (name == "add") return ArithOp::kAdd;
  if (name == "sub") return ArithOp::kSub;
  if (name == "neg") return ArithOp::kNeg;
  if (name == "mul") return ArithOp::kMul;
  if (name == "invert") return ArithOp::kInvert;
  return std::nullopt;
}

std::string_view arith_op_name(ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return "add";
    case ArithOp::kSub: return "sub";
    case ArithOp::kNeg: return "neg";
    case ArithOp::kMul: return "mul";
    case ArithOp::kInvert: return "invert";
  }
  return "?";
}

PAdicInt arithmetic(ArithOp op, const PAdicInt& x, const std::optional<PAdicInt>& y) {
  const bool binary = op == ArithOp::kAdd || op == ArithOp::kSub || op == ArithOp::kMul;
  if (binary && !y) {
    throw DomainError(std::string(arith_op_name(op)) + " needs a second operand");
  }
  switch (op) {
    case ArithOp::kAdd: return x + *y;
    case ArithOp::kSub: return x - *y;
    case ArithOp::kMul: return x * *y;
    case ArithOp::kNeg: return -x;
    case ArithOp::kInvert: return invert(x);
  }
  throw DomainError("unknown operation");
}

bool CanonicalSequence::satisfies_invariants() const {
  BigInt modulus = 1;
  const BigInt base = to_bigint(p);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const BigInt prev_modulus = modulus;
    modulus *= base;
    if (sgn(entries[i]) < 0 || entries[i] >= modulus) return false;
    // a_{n+1} = a_n mod p^n
    if (i > 0 && (entries[i] - entries[i - 1]) % prev_modulus != 0) return false;
  }
  return true;
}

CanonicalSequence canonical_sequence(const PAdicInt& x) {
  CanonicalSequence seq{x.prime(), {}};
  seq.entries.reserve(x.precision());
  const BigInt base = to_bigint(x.prime());
  BigInt modulus = 1;
  BigInt a;
  for (std::size_t n = 1; n <= x.precision(); ++n) {
    modulus *= base;
    mpz_fdiv_r(a.get_mpz_t(), x.residue().get_mpz_t(), modulus.get_mpz_t());
    seq.entries.push_back(a);
  }
  return seq;
}

}  // namespace tatedual
