#include "tatedual/tatedual.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"
#include "tatedual/duality.hpp"
#include "tatedual/error.hpp"
#include "tatedual/gamma.hpp"
#include "tatedual/padic.hpp"
#include "tatedual/supernatural.hpp"
#include "tatedual/tate.hpp"
#include "tatedual/uhf.hpp"

using nlohmann::json;
using namespace tatedual;

struct td_padic {
  PAdicInt value;
};

struct td_doc {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

template <class F>
td_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TD_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return TD_ERR_PARSE;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return TD_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TD_ERR_INTERNAL;
  }
}

td_status null_argument(const char* name) {
  g_last_error = std::string("argument '") + name + "' is NULL";
  return TD_ERR_NULL;
}

#define TD_REQUIRE(arg) \
  if ((arg) == nullptr) return null_argument(#arg)

void emit(const json& j, td_doc** out) { *out = new td_doc{j.dump()}; }

json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json strings(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Rational::parse(item));
    start = end + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* td_version(void) { return "1.0.0"; }

const char* td_last_error(void) { return g_last_error.c_str(); }

td_status td_padic_parse(const char* text, td_padic** out) {
  TD_REQUIRE(text);
  TD_REQUIRE(out);
  return guarded([&] { *out = new td_padic{PAdicInt::parse(text)}; });
}

td_status td_padic_from_int(const char* m, uint64_t p, size_t precision, td_padic** out) {
  TD_REQUIRE(m);
  TD_REQUIRE(out);
  return guarded([&] { *out = new td_padic{PAdicInt::from_integer(parse_bigint(m), p, precision)}; });
}

td_status td_padic_from_digits(uint64_t p, const uint64_t* digits, size_t count, td_padic** out) {
  TD_REQUIRE(out);
  if (count > 0) TD_REQUIRE(digits);
  return guarded([&] {
    *out = new td_padic{PAdicInt::from_digits(p, std::span<const std::uint64_t>(digits, count))};
  });
}

td_padic* td_padic_clone(const td_padic* x) { return x ? new td_padic{x->value} : nullptr; }

void td_padic_free(td_padic* x) { delete x; }

uint64_t td_padic_prime(const td_padic* x) { return x ? x->value.prime() : 0; }

size_t td_padic_precision(const td_padic* x) { return x ? x->value.precision() : 0; }

int td_padic_valuation(const td_padic* x, size_t* out) {
  if (!x) return 0;
  const auto v = x->value.valuation();
  if (!v) return 0;
  if (out) *out = *v;
  return 1;
}

int td_padic_equal(const td_padic* x, const td_padic* y) {
  return x && y && x->value == y->value ? 1 : 0;
}

size_t td_padic_format(const td_padic* x, char* buf, size_t cap) {
  if (!x) return 0;
  const std::string s = x->value.str();
  if (buf && cap > 0) {
    const size_t n = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return s.size();
}

td_status td_padic_arith(const char* op, const td_padic* x, const td_padic* y, td_padic** out) {
  TD_REQUIRE(op);
  TD_REQUIRE(x);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto parsed = parse_arith_op(op);
    if (!parsed) throw ParseError(std::string("unknown operation '") + op + "'");
    std::optional<PAdicInt> rhs;
    if (y) rhs = y->value;
    *out = new td_padic{arithmetic(*parsed, x->value, rhs)};
  });
}

td_status td_padic_canonical(const td_padic* x, td_doc** out) {
  TD_REQUIRE(x);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto seq = canonical_sequence(x->value);
    json j;
    j["q"] = x->value.str();
    j["residue"] = x->value.residue_str();
    j["sequence"] = strings(seq.entries);
    const auto v = x->value.valuation();
    j["valuation"] = v ? json(*v) : json("at_least_precision");
    emit(j, out);
  });
}

const char* td_doc_json(const td_doc* doc) { return doc ? doc->text.c_str() : ""; }

void td_doc_free(td_doc* doc) { delete doc; }

td_status td_gamma_generators(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] { emit(json{{"generators", strings(gamma_generators(q->value))}}, out); });
}

td_status td_gamma_hull(const char* gens, td_doc** out) {
  TD_REQUIRE(gens);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto list = parse_rational_list(gens);
    const auto cert = cyclic_hull_certified(list);
    emit(json{{"generator", cert.group.generator().str()},
              {"group", cert.group.str()},
              {"coefficients", strings(cert.coefficients)}},
         out);
  });
}

td_status td_gamma_group(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto g = gamma_group(q->value);
    emit(json{{"generator", g.generator().str()}, {"group", g.str()}}, out);
  });
}

td_status td_gamma_contains(const char* generator, const char* r, int* out) {
  TD_REQUIRE(generator);
  TD_REQUIRE(r);
  TD_REQUIRE(out);
  return guarded([&] {
    const CyclicSubgroupQ g(Rational::parse(generator).abs());
    *out = g.contains(Rational::parse(r)) ? 1 : 0;
  });
}

td_status td_gamma_contains_one(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto rep = contains_one_report(q->value);
    emit(json{{"contains_one", rep.contains_one},
              {"content", to_string(rep.content)},
              {"hull", rep.hull.str()}},
         out);
  });
}

td_status td_gamma_density(const td_padic* q, const char* target, const char* epsilon,
                           td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(target);
  TD_REQUIRE(epsilon);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto w = density_witness(q->value, Rational::parse(target), Rational::parse(epsilon));
    emit(json{{"witness", w.witness.str()}, {"distance", w.distance.str()}}, out);
  });
}

td_status td_gamma_prufer_image(const char* gamma, uint64_t p, td_doc** out) {
  TD_REQUIRE(gamma);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto e = prufer_image(Rational::parse(gamma), p);
    emit(json{{"element", e.str()},
              {"level", e.level()},
              {"numerator", to_string(e.numerator())},
              {"order", to_string(e.order())}},
         out);
  });
}

td_status td_gamma_prufer_check(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto rep = prufer_relations_check(q->value);
    json steps = json::array();
    for (const auto& s : rep.steps) {
      steps.push_back(json{{"n", s.n},
                           {"holds", s.holds},
                           {"discrepancy", s.discrepancy.str()},
                           {"lhs", s.lhs.str()},
                           {"rhs", s.rhs.str()}});
    }
    emit(json{{"valuation", rep.valuation},
              {"first_vanishes", rep.first_vanishes},
              {"all_hold", rep.all_hold()},
              {"unbounded_order", rep.unbounded_order},
              {"levels", rep.levels},
              {"steps", std::move(steps)}},
         out);
  });
}

td_status td_gamma_limit(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto lim = supernatural_limit(q->value);
    emit(json{{"sn", lim.sn.str()},
              {"scale", to_string(lim.scale)},
              {"stabilized", lim.stabilized},
              {"contents", strings(lim.contents)},
              {"denominator_exponents", lim.denominator_exponents}},
         out);
  });
}

td_status td_uhf_k0(const char* descriptor, td_doc** out) {
  TD_REQUIRE(descriptor);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto d = UHFDescriptor::parse(descriptor);
    emit(json{{"descriptor", d.str()}, {"k0", k0_of(d).str()}}, out);
  });
}

td_status td_uhf_qn_contains(const char* n, const char* r, int* out) {
  TD_REQUIRE(n);
  TD_REQUIRE(r);
  TD_REQUIRE(out);
  return guarded([&] {
    *out = qn_contains(SupernaturalNumber::parse(n), Rational::parse(r)) ? 1 : 0;
  });
}

td_status td_uhf_stable_iso(const char* n1, const char* n2, td_doc** out) {
  TD_REQUIRE(n1);
  TD_REQUIRE(n2);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto d = stably_isomorphic(SupernaturalNumber::parse(n1), SupernaturalNumber::parse(n2));
    json j{{"equal", d.equal}, {"witness", nullptr}};
    if (d.witness) j["witness"] = json{{"r", to_string(d.witness->r)}, {"s", to_string(d.witness->s)}};
    emit(j, out);
  });
}

td_status td_uhf_from_tate(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto u = uhf_from_tate(q->value);
    emit(json{{"descriptor", u.descriptor.str()},
              {"k0", u.k0.str()},
              {"scale", to_string(u.scale)},
              {"label", u.label ? json(*u.label) : json(nullptr)}},
         out);
  });
}

td_status td_tate_coeffs(const td_padic* q, td_doc** out) {
  TD_REQUIRE(q);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto c = tate_coefficients(q->value);
    emit(json{{"a4", c.a4.residue_str()},
              {"a4_digits", c.a4.digits()},
              {"a6", c.a6.residue_str()},
              {"a6_digits", c.a6.digits()},
              {"terms_used", c.terms_used},
              {"q_valuation", c.q_valuation},
              {"valuation_exact", c.valuation_exact}},
         out);
  });
}

td_status td_dual_pair(const td_padic* z, const char* gamma, td_doc** out) {
  TD_REQUIRE(z);
  TD_REQUIRE(gamma);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto g = PruferElement::parse(gamma);
    emit(json{{"gamma", g.str()}, {"value", pair(z->value, g).str()}}, out);
  });
}

td_status td_dual_bidual(const char* gamma, const td_padic* z, td_doc** out) {
  TD_REQUIRE(gamma);
  TD_REQUIRE(z);
  TD_REQUIRE(out);
  return guarded([&] {
    const auto g = PruferElement::parse(gamma);
    emit(json{{"gamma", g.str()}, {"value", bidual_eval(g, z->value).str()}}, out);
  });
}

td_status td_dual_check(uint64_t p, size_t level, td_doc** out) {
  TD_REQUIRE(out);
  return guarded([&] {
    const auto rep = perfectness_check(p, level);
    emit(json{{"p", rep.p},
              {"level", rep.level},
              {"perfect", rep.perfect()},
              {"bilinear", rep.bilinear},
              {"left_nondegenerate", rep.left_nondegenerate},
              {"right_nondegenerate", rep.right_nondegenerate},
              {"counterexamples", rep.counterexamples}},
         out);
  });
}

}  // extern "C"
