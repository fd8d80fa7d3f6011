#include "tatedual/uhf.hpp"

#include <stdexcept>

#include "tatedual/error.hpp"
#include "tatedual/gamma.hpp"

namespace tatedual {

namespace {

std::vector<std::uint64_t> parse_sizes(std::string_view body) {
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("unbalanced parenthesis in '" + std::string(body) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::uint64_t> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t end = std::min(body.find(',', start), body.size());
    const std::uint64_t k = parse_u64(body.substr(start, end - start));
    if (k == 0) throw ParseError("matrix sizes must be at least 1");
    out.push_back(k);
    start = end + 1;
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

UHFDescriptor UHFDescriptor::parse(std::string_view text) {
  UHFDescriptor out;
  bool seen_sizes = false;
  bool seen_tail = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.starts_with("sizes=") && !seen_sizes) {
      out.prefix = parse_sizes(part.substr(6));
      seen_sizes = true;
    } else if (part.starts_with("tail=") && !seen_tail) {
      out.tail = parse_sizes(part.substr(5));
      seen_tail = true;
    } else {
      throw ParseError("malformed UHF descriptor '" + std::string(text) +
                       "' (expected 'sizes=k1,k2,...;tail=t1,...')");
    }
    start = end + 1;
  }
  return out;
}

std::string UHFDescriptor::str() const {
  if (prefix.empty() && !tail.empty()) return "tail=" + join(tail);
  std::string out = "sizes=" + join(prefix);
  if (!tail.empty()) out += ";tail=" + join(tail);
  return out;
}

SupernaturalNumber supernatural_from_sizes(const UHFDescriptor& m) {
  SupernaturalNumber out;
  for (std::uint64_t k : m.prefix) out = out * SupernaturalNumber::from_integer(k);
  for (std::uint64_t k : m.tail) {
    for (const auto& [p, e] : factorize(k)) {
      out = out * SupernaturalNumber::prime_power(p, Exponent::infinite());
    }
  }
  return out;
}

SupernaturalNumber k0_of(const UHFDescriptor& m) { return supernatural_from_sizes(m); }

TateDualUHF uhf_from_tate(const PAdicInt& q) {
  const auto limit = supernatural_limit(q);
  TateDualUHF out;
  out.descriptor.tail = {q.prime()};
  out.k0 = k0_of(out.descriptor);
  if (out.k0 != limit.sn) {
    throw std::logic_error("K0 of " + out.descriptor.str() + " disagrees with the limit " +
                           limit.sn.str());
  }
  out.scale = limit.scale;
  if (q.prime() == 2) out.label = "CAR";
  return out;
}

}  // namespace tatedual
