// rsl: command line front end for the exact piecewise-polynomial lattice.
//
// Every verb prints a single JSON line on stdout by default; --text switches
// to aligned human-readable output.  Domain errors (bad descriptors, values
// outside the domain, non-members, ...) exit with status 2 and a JSON body
// {"detail": ..., "error": NAME} so scripted callers can branch on the code.
// Usage errors from the option parser exit with status 1.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsl/atomic.hpp"
#include "rsl/errors.hpp"
#include "rsl/json_io.hpp"
#include "rsl/parse.hpp"
#include "rsl/piecewise.hpp"
#include "rsl/spectrum.hpp"

using namespace rsl;

namespace {

struct Common {
  std::vector<std::string> domain{"0", "1"};
  std::optional<int> cap;
  std::string mode;
  bool text = false;
  bool json = false;
};

const Common* active_common = nullptr;

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--domain", c.domain, "domain endpoints a b, as rationals")
      ->expected(2);
  cmd->add_option("--cap", c.cap, "uniform degree cap for all pieces");
  cmd->add_option("--mode", c.mode,
                  "ppol (no cap) or ppoln (requires --cap); inferred when omitted")
      ->check(CLI::IsMember({"ppol", "ppoln"}));
  cmd->add_flag("--text", c.text, "aligned text output");
  cmd->add_flag("--json", c.json, "JSON output (the default)");
}

Domain domain_of(const Common& c) {
  if (c.mode == "ppoln" && !c.cap)
    throw Error(Err::SchemaError, "mode ppoln requires --cap");
  if (c.mode == "ppol" && c.cap)
    throw Error(Err::SchemaError, "mode ppol takes no --cap");
  return make_domain(parse_rational(c.domain[0]), parse_rational(c.domain[1]),
                     c.cap);
}

PiecewisePoly load_fn(const std::string& expr, const std::string& expr_json,
                      const Common& c) {
  if (!expr.empty() && !expr_json.empty())
    throw Error(Err::SchemaError, "give --expr or --expr-json, not both");
  if (expr_json.empty()) {
    if (expr.empty()) throw Error(Err::SchemaError, "a function is required");
    return elaborate(parse_expr(expr), domain_of(c));
  }
  Json j = Json::parse(expr_json, nullptr, false);
  if (j.is_discarded())
    throw Error(Err::SchemaError, "--expr-json is not valid JSON");
  return piecewise_from_json(j);
}

std::uint64_t pick_seed(std::uint64_t flag_value) {
  if (const char* env = std::getenv("RSL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Err::SchemaError, "RSL_SEED is not an unsigned integer");
    }
  }
  return flag_value;
}

// Text-mode helpers.  Bounds that are not rational are shown as the open
// isolating interval of the exact breakpoint.

std::string bound_text(const AlgebraicNumber& x) {
  if (x.is_rational()) return str(*x.rational_shortcut());
  return "(" + str(x.lo()) + ".." + str(x.hi()) + ")";
}

void print_pw_text(const PiecewisePoly& f) {
  const auto& dom = f.domain();
  std::vector<std::string> lo, hi, body;
  std::string prev = str(dom.a);
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    lo.push_back(prev);
    std::string next = i < f.breakpoints().size()
                           ? bound_text(f.breakpoints()[i])
                           : str(dom.b);
    hi.push_back(next);
    body.push_back(f.pieces()[i].str());
    prev = next;
  }
  std::size_t w = std::string("segment").size();
  std::vector<std::string> seg(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    seg[i] = "[" + lo[i] + ", " + hi[i] + "]";
    w = std::max(w, seg[i].size());
  }
  std::cout << std::left << std::setw(static_cast<int>(w + 2)) << "segment"
            << "piece\n";
  for (std::size_t i = 0; i < seg.size(); ++i)
    std::cout << std::left << std::setw(static_cast<int>(w + 2)) << seg[i]
              << body[i] << "\n";
}

std::string descriptor_tag(const PrimeDescriptor& p) {
  std::string s = std::string(kind_tag(p.kind)) + ":" + bound_text(p.t0);
  if (p.k) s += ":" + std::to_string(*p.k);
  return s;
}

std::string scalar_text(const ExactScalar& s) {
  if (s.is_rational()) return str(s.rational());
  auto [lo, hi] = s.enclosure(Rational(1, 1000000));
  return "(" + str(lo) + ".." + str(hi) + ")";
}

void emit(const Json& j, const std::function<void()>& text_fn) {
  if (active_common != nullptr && active_common->text)
    text_fn();
  else
    std::cout << dump_line(j);
}

Json atomic_report(int dim, std::uint64_t seed) {
  auto ideals = enumerate_ideals(dim, seed);
  Json j;
  j["dim"] = dim;
  j["seed"] = seed;
  j["ideal_count"] = static_cast<std::uint64_t>(ideals.size());
  Json primes = Json::array();
  for (const auto& p : enumerate_primes(dim)) {
    IdealClass cl = classify_ideal(p);
    Json row;
    row["ideal"] = coord_ideal_to_json(p);
    Json c;
    c["category"] = ideal_kind_name(cl.kind);
    c["proper"] = cl.proper;
    c["prime"] = cl.prime;
    c["maximal"] = cl.maximal;
    c["minimal_prime"] = cl.minimal_prime;
    row["classification"] = c;
    primes.push_back(row);
  }
  j["primes"] = primes;
  Json chain = Json::array();
  for (const auto& step : noetherian_chain_demo(dim))
    chain.push_back(coord_ideal_to_json(step));
  j["chain_demo"] = chain;
  if (dim >= 2) {
    CoordIdeal zero = make_coord_ideal(dim, {});
    auto w = nonprime_witness(zero);
    Json ex;
    ex["ideal"] = coord_ideal_to_json(zero);
    ex["witness"] = Json::array({finvec_to_json(w->first), finvec_to_json(w->second)});
    j["non_prime_example"] = ex;
  } else {
    j["non_prime_example"] = nullptr;
  }
  return j;
}

void print_atomic_text(const Json& j) {
  std::cout << "dimension " << j["dim"].get<int>() << ", "
            << j["ideal_count"].get<std::uint64_t>() << " coordinate ideals, seed "
            << j["seed"].get<std::uint64_t>() << "\n";
  std::cout << "prime = maximal = minimal prime, one per coordinate:\n";
  for (const auto& row : j["primes"]) {
    std::cout << "  support {";
    bool first = true;
    for (const auto& s : row["ideal"]["support"]) {
      if (!first) std::cout << ", ";
      std::cout << s.get<int>();
      first = false;
    }
    std::cout << "}\n";
  }
  if (!j["non_prime_example"].is_null())
    std::cout << "the zero ideal is not prime; disjoint witnesses on two coordinates\n";
  std::cout << "ascending chain of " << j["chain_demo"].size() << " ideals with "
            << j["chain_demo"].size() - 1 << " strict inclusions\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continuous piecewise-polynomial lattice toolkit"};
  app.require_subcommand(1);
  std::function<void()> run;

  // parse: grammar check and canonical pretty form.
  auto* cmd_parse = app.add_subcommand("parse", "parse an expression and print it back");
  static Common c_parse;
  std::string parse_expr_s;
  add_common(cmd_parse, c_parse);
  cmd_parse->add_option("--expr", parse_expr_s, "expression to parse")->required();
  cmd_parse->callback([&] {
    active_common = &c_parse;
    run = [&] {
      ExprPtr e = rsl::parse_expr(parse_expr_s);
      Json j;
      j["pretty"] = print_expr(e);
      emit(j, [&] { std::cout << print_expr(e) << "\n"; });
    };
  });

  // eval: pointwise value through the expression oracle.
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression at a rational point");
  static Common c_eval;
  std::string eval_expr_s, eval_at;
  add_common(cmd_eval, c_eval);
  cmd_eval->add_option("--expr", eval_expr_s, "expression")->required();
  cmd_eval->add_option("--at", eval_at, "rational evaluation point")->required();
  cmd_eval->callback([&] {
    active_common = &c_eval;
    run = [&] {
      Domain dom = domain_of(c_eval);
      Rational t = parse_rational(eval_at);
      if (t < dom.a || t > dom.b)
        throw Error(Err::OutOfDomain, "point " + str(t) + " outside [" +
                                          str(dom.a) + ", " + str(dom.b) + "]");
      Rational v = eval_expr(rsl::parse_expr(eval_expr_s), t);
      Json j;
      j["value"] = str(v);
      emit(j, [&] { std::cout << str(v) << "\n"; });
    };
  });

  // lattice: realize an expression, or apply a lattice operation.
  auto* cmd_lat = app.add_subcommand(
      "lattice", "realize an expression as a piecewise polynomial, optionally via a lattice op");
  static Common c_lat;
  std::string lat_expr, lat_expr_json, lat_with, lat_op = "realize";
  add_common(cmd_lat, c_lat);
  cmd_lat->add_option("--expr", lat_expr, "expression");
  cmd_lat->add_option("--expr-json", lat_expr_json, "piecewise JSON instead of --expr");
  cmd_lat->add_option("--op", lat_op, "realize, abs, pos, neg, sup, or inf")
      ->check(CLI::IsMember({"realize", "abs", "pos", "neg", "sup", "inf"}));
  cmd_lat->add_option("--with", lat_with, "second expression for sup/inf");
  cmd_lat->callback([&] {
    active_common = &c_lat;
    run = [&] {
      PiecewisePoly f = load_fn(lat_expr, lat_expr_json, c_lat);
      PiecewisePoly out = f;
      if (lat_op == "abs") {
        out = pw_abs(f);
      } else if (lat_op == "pos") {
        out = pw_pos(f);
      } else if (lat_op == "neg") {
        out = pw_neg(f);
      } else if (lat_op == "sup" || lat_op == "inf") {
        if (lat_with.empty())
          throw Error(Err::SchemaError, lat_op + " needs --with");
        PiecewisePoly g = elaborate(rsl::parse_expr(lat_with), f.domain());
        out = lat_op == "sup" ? pw_sup(f, g) : pw_inf(f, g);
      } else if (!lat_with.empty()) {
        throw Error(Err::SchemaError, "--with only applies to sup/inf");
      }
      emit(piecewise_to_json(out), [&] { print_pw_text(out); });
    };
  });

  // jet: one-sided derivative vectors and prime quotient images.
  auto* cmd_jet = app.add_subcommand(
      "jet", "one-sided jet of a function, or its image in a prime quotient");
  static Common c_jet;
  std::string jet_expr, jet_expr_json, jet_at, jet_side = "left", jet_prime;
  std::optional<int> jet_order;
  add_common(cmd_jet, c_jet);
  cmd_jet->add_option("--expr", jet_expr, "expression");
  cmd_jet->add_option("--expr-json", jet_expr_json, "piecewise JSON instead of --expr");
  cmd_jet->add_option("--at", jet_at, "base point (rational)");
  cmd_jet->add_option("--side", jet_side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_jet->add_option("--order", jet_order, "truncate to entries 0..order");
  cmd_jet->add_option("--prime", jet_prime,
                      "prime descriptor; prints the quotient image instead");
  cmd_jet->callback([&] {
    active_common = &c_jet;
    run = [&] {
      PiecewisePoly f = load_fn(jet_expr, jet_expr_json, c_jet);
      LexVector v;
      Json j;
      if (!jet_prime.empty()) {
        PrimeDescriptor p = parse_descriptor(jet_prime, f.domain());
        v = quotient_image(f, p);
        j["prime"] = descriptor_to_json(p);
      } else {
        if (jet_at.empty()) throw Error(Err::SchemaError, "jet needs --at or --prime");
        Rational t0 = parse_rational(jet_at);
        AlgebraicNumber base = AlgebraicNumber::from_rational(t0);
        Side side = jet_side == "left" ? Side::Left : Side::Right;
        v = jet_order ? phi_hom(f, base, side, *jet_order) : psi_hom(f, base, side);
        j["t0"] = str(t0);
        j["side"] = jet_side;
      }
      Json entries = Json::array();
      for (const auto& s : v) entries.push_back(scalar_to_json(s));
      j["entries"] = entries;
      emit(j, [&] {
        for (std::size_t i = 0; i < v.size(); ++i)
          std::cout << "entry " << i << ": " << scalar_text(v[i]) << "\n";
      });
    };
  });

  // spectrum: all primes containing a function.
  auto* cmd_spec = app.add_subcommand("spectrum", "every prime ideal containing the function");
  static Common c_spec;
  std::string spec_expr, spec_expr_json;
  add_common(cmd_spec, c_spec);
  cmd_spec->add_option("--expr", spec_expr, "expression");
  cmd_spec->add_option("--expr-json", spec_expr_json, "piecewise JSON instead of --expr");
  cmd_spec->callback([&] {
    active_common = &c_spec;
    run = [&] {
      PiecewisePoly f = load_fn(spec_expr, spec_expr_json, c_spec);
      SpectrumReport rep = primes_containing(f);
      emit(report_to_json(rep), [&] {
        for (const auto& d : rep.descriptors)
          std::cout << descriptor_tag(d) << "  " << describe_descriptor(d) << "\n";
        for (const auto& fam : rep.k_families)
          std::cout << (fam.side == Side::Left ? "L" : "R") << ":"
                    << bound_text(fam.t0) << ":k  one prime for every order k >= 1\n";
        for (const auto& [u, vv] : rep.maximal_intervals)
          std::cout << "M:[" << bound_text(u) << ", " << bound_text(vv)
                    << "]  maximal ideals at every point of the interval\n";
      });
    };
  });

  // member: membership in a prime or in a principal ideal.
  auto* cmd_mem = app.add_subcommand("member", "test ideal membership");
  static Common c_mem;
  std::string mem_expr, mem_expr_json, mem_prime, mem_base;
  add_common(cmd_mem, c_mem);
  cmd_mem->add_option("--expr", mem_expr, "candidate expression");
  cmd_mem->add_option("--expr-json", mem_expr_json, "piecewise JSON instead of --expr");
  cmd_mem->add_option("--prime", mem_prime, "prime descriptor to test against");
  cmd_mem->add_option("--ideal-of", mem_base,
                      "expression g; tests membership in the principal ideal of g");
  cmd_mem->callback([&] {
    active_common = &c_mem;
    run = [&] {
      PiecewisePoly f = load_fn(mem_expr, mem_expr_json, c_mem);
      if (mem_prime.empty() == mem_base.empty())
        throw Error(Err::SchemaError, "give exactly one of --prime, --ideal-of");
      bool in;
      if (!mem_prime.empty()) {
        in = member(f, parse_descriptor(mem_prime, f.domain()));
      } else {
        PiecewisePoly base = elaborate(rsl::parse_expr(mem_base), f.domain());
        in = principal_membership(f, base);
      }
      Json j;
      j["member"] = in;
      emit(j, [&] { std::cout << (in ? "member" : "not a member") << "\n"; });
    };
  });

  // generator: a principal generator of a non-minimal prime.
  auto* cmd_gen = app.add_subcommand("generator", "synthesize a generator of a prime ideal");
  static Common c_gen;
  std::string gen_prime;
  add_common(cmd_gen, c_gen);
  cmd_gen->add_option("--prime", gen_prime, "prime descriptor")->required();
  cmd_gen->callback([&] {
    active_common = &c_gen;
    run = [&] {
      Domain dom = domain_of(c_gen);
      PiecewisePoly g = synthesize_generator(parse_descriptor(gen_prime, dom), dom);
      emit(piecewise_to_json(g), [&] { print_pw_text(g); });
    };
  });

  // witness: constructive counterexamples.
  auto* cmd_wit = app.add_subcommand("witness", "constructive witnesses");
  static Common c_wit;
  std::string wit_type, wit_prime, wit_expr, wit_expr_json;
  add_common(cmd_wit, c_wit);
  cmd_wit->add_option("--type", wit_type,
                      "nonprincipal: member of a minimal prime outside the candidate's "
                      "principal ideal; dense: element of the prime under the given bound")
      ->required()
      ->check(CLI::IsMember({"nonprincipal", "dense"}));
  cmd_wit->add_option("--prime", wit_prime, "prime descriptor")->required();
  cmd_wit->add_option("--expr", wit_expr, "candidate/bound expression");
  cmd_wit->add_option("--expr-json", wit_expr_json, "piecewise JSON instead of --expr");
  cmd_wit->callback([&] {
    active_common = &c_wit;
    run = [&] {
      PiecewisePoly f = load_fn(wit_expr, wit_expr_json, c_wit);
      PrimeDescriptor p = parse_descriptor(wit_prime, f.domain());
      PiecewisePoly w = wit_type == "nonprincipal" ? nonprincipal_witness(p, f)
                                                   : order_dense_witness(p, f);
      emit(piecewise_to_json(w), [&] { print_pw_text(w); });
    };
  });

  // chain: chains of primes above a descriptor, and length bounds.
  auto* cmd_chain = app.add_subcommand("chain", "chains in the prime spectrum");
  static Common c_chain;
  std::string chain_prime, chain_at;
  std::optional<int> chain_witness_len;
  bool chain_max = false;
  int chain_cutoff = 8;
  add_common(cmd_chain, c_chain);
  cmd_chain->add_option("--prime", chain_prime, "starting prime descriptor");
  cmd_chain->add_flag("--max-length", chain_max, "print the maximal chain length");
  cmd_chain->add_option("--witness-length", chain_witness_len,
                        "build a chain with this many strict inclusions");
  cmd_chain->add_option("--at", chain_at, "base point for --witness-length");
  cmd_chain->add_option("--cutoff", chain_cutoff, "truncation depth for unbounded chains");
  cmd_chain->callback([&] {
    active_common = &c_chain;
    run = [&] {
      Domain dom = domain_of(c_chain);
      int given = (!chain_prime.empty() ? 1 : 0) + (chain_max ? 1 : 0) +
                  (chain_witness_len ? 1 : 0);
      if (given != 1)
        throw Error(Err::SchemaError,
                    "give exactly one of --prime, --max-length, --witness-length");
      if (chain_max) {
        auto n = max_chain_length(dom);
        Json j;
        j["max_chain_length"] = n ? Json(*n) : Json(nullptr);
        emit(j, [&] {
          if (n)
            std::cout << "maximal chain length: " << *n << "\n";
          else
            std::cout << "maximal chain length: unbounded\n";
        });
        return;
      }
      Chain ch;
      if (!chain_prime.empty()) {
        ch = chain_above(parse_descriptor(chain_prime, dom), dom, chain_cutoff);
      } else {
        Rational t0 = chain_at.empty() ? (dom.a + dom.b) / 2 : parse_rational(chain_at);
        ch = witness_chain(dom, t0, *chain_witness_len);
      }
      emit(chain_to_json(ch), [&] {
        for (std::size_t i = 0; i < ch.descriptors.size(); ++i) {
          if (i) std::cout << " < ";
          std::cout << format_descriptor(ch.descriptors[i]);
        }
        std::cout << (ch.truncated ? "  (truncated)" : "") << "\n";
      });
    };
  });

  // norm: gauge norm enclosure within a principal ideal.
  auto* cmd_norm = app.add_subcommand(
      "norm", "enclose the least c with |g| <= c*f inside the principal ideal of f");
  static Common c_norm;
  std::string norm_expr, norm_base, norm_tol = "1/1000";
  add_common(cmd_norm, c_norm);
  cmd_norm->add_option("--expr", norm_expr, "numerator expression g")->required();
  cmd_norm->add_option("--base", norm_base, "positive base expression f")->required();
  cmd_norm->add_option("--tol", norm_tol, "enclosure width bound (rational)");
  cmd_norm->callback([&] {
    active_common = &c_norm;
    run = [&] {
      Domain dom = domain_of(c_norm);
      PiecewisePoly g = elaborate(rsl::parse_expr(norm_expr), dom);
      PiecewisePoly f = elaborate(rsl::parse_expr(norm_base), dom);
      auto [lo, hi] = gauge_norm(g, f, parse_rational(norm_tol));
      Json j;
      j["lo"] = str(lo);
      j["hi"] = str(hi);
      emit(j, [&] {
        std::cout << "norm in (" << str(lo) << ", " << str(hi) << "]\n";
      });
    };
  });

  // atomic: the finite sequence model with atoms.
  auto* cmd_atomic = app.add_subcommand(
      "atomic", "finite coordinate model: ideals, primes, chain stabilisation");
  static Common c_atomic;
  int atomic_dim = 3;
  std::uint64_t atomic_seed = 0;
  add_common(cmd_atomic, c_atomic);
  cmd_atomic->add_option("--dim", atomic_dim, "number of coordinates (1..16)");
  cmd_atomic->add_option("--seed", atomic_seed, "seed for the solidity self-check");
  cmd_atomic->callback([&] {
    active_common = &c_atomic;
    run = [&] {
      Json j = atomic_report(atomic_dim, pick_seed(atomic_seed));
      emit(j, [&] { print_atomic_text(j); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    run();
  } catch (const Error& e) {
    if (active_common != nullptr && active_common->text) {
      std::cout << "error: " << err_name(e.code()) << ": " << e.detail() << "\n";
    } else {
      Json j;
      j["error"] = err_name(e.code());
      j["detail"] = e.detail();
      std::cout << dump_line(j);
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
