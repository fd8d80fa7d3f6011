// Command-line front end. Talks to the library exclusively through the C API
// in tatedual.h.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tatedual/tatedual.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

struct PadicDeleter {
  void operator()(td_padic* p) const { td_padic_free(p); }
};
struct DocDeleter {
  void operator()(td_doc* d) const { td_doc_free(d); }
};
using PadicHandle = std::unique_ptr<td_padic, PadicDeleter>;
using DocHandle = std::unique_ptr<td_doc, DocDeleter>;

/// Raised inside a handler; carries the exit code and diagnostic.
struct Failure {
  int code;
  std::string message;
};

int exit_code_for(td_status s) { return s == TD_ERR_PARSE ? kExitInput : kExitPrecondition; }

void check(td_status s) {
  if (s != TD_OK) throw Failure{exit_code_for(s), td_last_error()};
}

json take(td_doc* raw) {
  DocHandle doc(raw);
  return json::parse(td_doc_json(doc.get()));
}

std::string format(const td_padic* x) {
  std::string buf(td_padic_format(x, nullptr, 0) + 1, '\0');
  td_padic_format(x, buf.data(), buf.size());
  buf.pop_back();
  return buf;
}

/// Flags shared by the subcommands that take a p-adic parameter.
struct PadicFlags {
  std::uint64_t p = 0;
  std::optional<std::size_t> prec;
  std::string q;

  /// --q accepts a decimal integer, a digit list `[c0,c1,...]` / `c0,c1,...`
  /// (least significant first), or the full text form `p=.. N=.. ...`.
  PadicHandle build(json& inputs, const char* name = "q") const {
    td_padic* raw = nullptr;
    if (q.rfind("p=", 0) == 0) {
      check(td_padic_parse(q.c_str(), &raw));
    } else if (!q.empty() && (q.front() == '[' || q.find(',') != std::string::npos)) {
      std::string body = q;
      if (body.front() == '[') {
        if (body.back() != ']') throw Failure{kExitInput, "unterminated digit list '" + q + "'"};
        body = body.substr(1, body.size() - 2);
      }
      std::vector<std::uint64_t> digits;
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          digits.push_back(std::stoull(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw Failure{kExitInput, "malformed digit '" + item + "' in '" + q + "'"};
        }
      }
      if (prec) {
        if (digits.size() > *prec) {
          throw Failure{kExitInput, "digit list is longer than --prec"};
        }
        digits.resize(*prec, 0);
      }
      check(td_padic_from_digits(p, digits.data(), digits.size(), &raw));
    } else {
      if (!prec) throw Failure{kExitInput, "--prec is required when --" + std::string(name) + " is an integer"};
      check(td_padic_from_int(q.c_str(), p, *prec, &raw));
    }
    PadicHandle h(raw);
    inputs["p"] = td_padic_prime(h.get());
    inputs["prec"] = td_padic_precision(h.get());
    inputs[name] = format(h.get());
    return h;
  }

  bool literal_zero() const {
    return !q.empty() && q.find_first_not_of("+-0") == std::string::npos;
  }
};

void add_padic_flags(CLI::App* cmd, PadicFlags& f, const char* qname = "--q") {
  cmd->add_option("--p", f.p, "prime")->required();
  cmd->add_option("--prec", f.prec, "precision N (number of p-adic digits)");
  cmd->add_option(qname, f.q, "integer, digit list [c0,c1,...], or 'p=.. N=.. digits=[..]'")
      ->required();
}

std::string render(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += v[i].is_object() ? v[i].dump() : render(v[i]);
    }
    return out;
  }
  return v.dump();
}

void print_text(const json& result, const std::string& prefix = "") {
  for (const auto& [key, value] : result.items()) {
    if (value.is_object()) {
      print_text(value, prefix + key + ".");
    } else if (key == "steps") {
      for (const auto& step : value) std::cout << prefix << key << ": " << step.dump() << "\n";
    } else {
      std::cout << prefix << key << ": " << render(value) << "\n";
    }
  }
}

bool strip_json_flag(std::vector<std::string>& args) {
  bool found = false;
  std::erase_if(args, [&](const std::string& a) {
    if (a == "--json") found = true;
    return a == "--json";
  });
  return found;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool as_json = strip_json_flag(args);

  CLI::App app{"Exact computations around Tate curves, Gamma_q and UHF algebras"};
  app.name("tatedual");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  std::string command;
  json inputs = json::object();
  std::function<json()> action;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help) {
    return group->add_subcommand(name, help);
  };

  PadicFlags pf;
  std::string y_text, op_name = "add", target, epsilon, gens_text, generator, r_text, gamma_text;
  std::string desc, sizes, tail, n_text, n1, n2;
  std::uint64_t level = 0;
  PadicFlags yf;

  // padic
  auto* padic = app.add_subcommand("padic", "p-adic integers")->require_subcommand(1);
  {
    auto* c = leaf(padic, "canon", "canonical sequence a_1..a_N");
    add_padic_flags(c, pf);
    c->final_callback([&] {
      action = [&] {
        auto q = pf.build(inputs);
        td_doc* d = nullptr;
        check(td_padic_canonical(q.get(), &d));
        return take(d);
      };
    });
  }
  {
    auto* c = leaf(padic, "arith", "ring operations mod p^N");
    add_padic_flags(c, pf);
    c->add_option("--op", op_name, "add | sub | neg | mul | invert")->required();
    c->add_option("--y", y_text, "second operand (same form as --q)");
    c->final_callback([&] {
      action = [&] {
        auto x = pf.build(inputs);
        inputs["op"] = op_name;
        PadicHandle y;
        if (!y_text.empty()) {
          yf.p = pf.p;
          yf.prec = td_padic_precision(x.get());
          yf.q = y_text;
          y = yf.build(inputs, "y");
        }
        td_padic* raw = nullptr;
        check(td_padic_arith(op_name.c_str(), x.get(), y.get(), &raw));
        PadicHandle z(raw);
        td_doc* d = nullptr;
        check(td_padic_canonical(z.get(), &d));
        json full = take(d);
        return json{{"value", full["q"]}, {"residue", full["residue"]}};
      };
    });
  }

  // gamma
  auto* gamma = app.add_subcommand("gamma", "the subgroup Gamma_q of Q")->require_subcommand(1);
  auto padic_doc_cmd = [&](CLI::App* group, const std::string& name, const std::string& help,
                           td_status (*fn)(const td_padic*, td_doc**)) {
    auto* c = leaf(group, name, help);
    add_padic_flags(c, pf);
    c->final_callback([&, fn] {
      action = [&, fn] {
        auto q = pf.build(inputs);
        td_doc* d = nullptr;
        check(fn(q.get(), &d));
        return take(d);
      };
    });
    return c;
  };
  padic_doc_cmd(gamma, "gens", "generators gamma_n = a_n / p^n", td_gamma_generators);
  padic_doc_cmd(gamma, "group", "truncated group as a cyclic subgroup of Q", td_gamma_group);
  padic_doc_cmd(gamma, "prufer-check", "Pruefer relations among the gamma_n", td_gamma_prufer_check);
  padic_doc_cmd(gamma, "contains-one", "whether 1 lies in the truncated group", td_gamma_contains_one);
  padic_doc_cmd(gamma, "limit", "supernatural limit of the truncations", td_gamma_limit);
  {
    auto* c = leaf(gamma, "density", "nearest group element to a target");
    add_padic_flags(c, pf);
    c->add_option("--target", target, "rational a/b")->required();
    c->add_option("--eps", epsilon, "positive rational tolerance")->required();
    c->final_callback([&] {
      action = [&] {
        auto q = pf.build(inputs);
        inputs["target"] = target;
        inputs["eps"] = epsilon;
        td_doc* d = nullptr;
        check(td_gamma_density(q.get(), target.c_str(), epsilon.c_str(), &d));
        return take(d);
      };
    });
  }
  {
    auto* c = leaf(gamma, "hull", "cyclic hull of finitely many rationals");
    c->add_option("--gens", gens_text, "comma-separated rationals")->required();
    c->final_callback([&] {
      action = [&] {
        inputs["gens"] = gens_text;
        td_doc* d = nullptr;
        check(td_gamma_hull(gens_text.c_str(), &d));
        return take(d);
      };
    });
  }
  {
    auto* c = leaf(gamma, "contains", "membership of r in generator*Z");
    c->add_option("--generator", generator, "rational generator")->required();
    c->add_option("--r", r_text, "rational")->required();
    c->final_callback([&] {
      action = [&] {
        inputs["generator"] = generator;
        inputs["r"] = r_text;
        int hit = 0;
        check(td_gamma_contains(generator.c_str(), r_text.c_str(), &hit));
        return json{{"contains", hit != 0}};
      };
    });
  }
  {
    auto* c = leaf(gamma, "prufer", "image of a rational in Z(p^inf)");
    c->add_option("--p", pf.p, "prime")->required();
    c->add_option("--gamma", gamma_text, "rational with p-power denominator")->required();
    c->final_callback([&] {
      action = [&] {
        inputs["p"] = pf.p;
        inputs["gamma"] = gamma_text;
        td_doc* d = nullptr;
        check(td_gamma_prufer_image(gamma_text.c_str(), pf.p, &d));
        return take(d);
      };
    });
  }

  // uhf
  auto* uhf = app.add_subcommand("uhf", "supernatural numbers and UHF algebras")->require_subcommand(1);
  {
    auto* c = leaf(uhf, "k0", "K0 invariant of a UHF size sequence");
    c->add_option("--desc", desc, "descriptor, e.g. 'sizes=2,4,8' or 'tail=2'");
    c->add_option("--sizes", sizes, "finite prefix k_1,...,k_m");
    c->add_option("--tail", tail, "block repeated forever");
    c->final_callback([&] {
      action = [&] {
        std::string d = desc;
        if (d.empty()) d = "sizes=" + sizes + (tail.empty() ? "" : ";tail=" + tail);
        inputs["descriptor"] = d;
        td_doc* doc = nullptr;
        check(td_uhf_k0(d.c_str(), &doc));
        return take(doc);
      };
    });
  }
  {
    auto* c = leaf(uhf, "contains", "membership of r in Q(n)");
    c->add_option("--n", n_text, "supernatural number, e.g. 2^inf*3")->required();
    c->add_option("--r", r_text, "rational")->required();
    c->final_callback([&] {
      action = [&] {
        inputs["n"] = n_text;
        inputs["r"] = r_text;
        int hit = 0;
        check(td_uhf_qn_contains(n_text.c_str(), r_text.c_str(), &hit));
        return json{{"contains", hit != 0}};
      };
    });
  }
  {
    auto* c = leaf(uhf, "stable-iso", "stable isomorphism of two UHF invariants");
    c->add_option("--n1", n1, "supernatural number")->required();
    c->add_option("--n2", n2, "supernatural number")->required();
    c->final_callback([&] {
      action = [&] {
        inputs["n1"] = n1;
        inputs["n2"] = n2;
        td_doc* d = nullptr;
        check(td_uhf_stable_iso(n1.c_str(), n2.c_str(), &d));
        return take(d);
      };
    });
  }
  padic_doc_cmd(uhf, "from-tate", "UHF algebra dual to the Tate parameter q", td_uhf_from_tate);

  // tate
  auto* tate = app.add_subcommand("tate", "Tate curve coefficients")->require_subcommand(1);
  {
    auto* c = leaf(tate, "coeffs", "a4(q) and a6(q) mod p^N");
    add_padic_flags(c, pf);
    c->final_callback([&] {
      action = [&] {
        if (pf.literal_zero()) throw Failure{kExitPrecondition, "q = 0 is not a Tate parameter (0 < |q| < 1 is required)"};
        auto q = pf.build(inputs);
        td_doc* d = nullptr;
        check(td_tate_coeffs(q.get(), &d));
        return take(d);
      };
    });
  }

  // dual
  auto* dual = app.add_subcommand("dual", "Pontryagin pairing Z_p x Z(p^inf) -> Q/Z")->require_subcommand(1);
  for (const char* name : {"pair", "bidual"}) {
    auto* c = leaf(dual, name, std::string(name) == "pair" ? "pairing <z, gamma>" : "double-dual evaluation x_gamma(y_z)");
    add_padic_flags(c, pf);
    c->add_option("--gamma", gamma_text, "Pruefer element a/p^n")->required();
    const bool is_pair = std::string(name) == "pair";
    c->final_callback([&, is_pair] {
      action = [&, is_pair] {
        auto z = pf.build(inputs);
        inputs["gamma"] = gamma_text;
        td_doc* d = nullptr;
        check(is_pair ? td_dual_pair(z.get(), gamma_text.c_str(), &d)
                      : td_dual_bidual(gamma_text.c_str(), z.get(), &d));
        return take(d);
      };
    });
  }
  {
    auto* c = leaf(dual, "check", "exhaustive perfectness check at level n");
    c->add_option("--p", pf.p, "prime")->required();
    c->add_option("--level", level, "level n (p^n <= 10^6)")->required();
    c->final_callback([&] {
      action = [&] {
        inputs["p"] = pf.p;
        inputs["level"] = level;
        td_doc* d = nullptr;
        check(td_dual_check(pf.p, level, &d));
        return take(d);
      };
    });
  }

  json envelope{{"command", ""}, {"inputs", json::object()}, {"result", nullptr},
                {"status", "ok"}, {"diagnostics", json::array()}};
  int code = kExitOk;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const auto* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      command += (command.empty() ? "" : " ") + sub->get_name();
    }
    envelope["result"] = action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    code = kExitInput;
    command.clear();
    envelope["diagnostics"].push_back(e.what());
    if (!as_json) {
      std::cerr << "error: " << e.what() << "\n\n" << app.help();
      return code;
    }
  } catch (const Failure& f) {
    code = f.code;
    envelope["diagnostics"].push_back(f.message);
  }
  envelope["command"] = command;
  envelope["inputs"] = inputs;
  if (code != kExitOk) {
    envelope["status"] = "error";
    envelope["result"] = nullptr;
  }

  if (as_json) {
    std::cout << envelope.dump() << "\n";
  } else if (code == kExitOk) {
    print_text(envelope["result"]);
  } else {
    std::cerr << "error: " << envelope["diagnostics"][0].get<std::string>() << "\n";
  }
  return code;
}
