#include "glcat/glcat.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace glcat;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : DomainError {
  using DomainError::DomainError;
};

struct Globals {
  bool json = false;
  std::string coeff = "zz";
  int qmax = 8;
  int degmax = 6;
};

template <class F>
decltype(auto) with_ring(const Globals& g, F&& f) {
  if (g.coeff == "zz") return f(Integer(1), std::string("zz"));
  if (g.coeff.rfind("fp:", 0) == 0) {
    std::int64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(g.coeff.substr(3), &used);
      if (used != g.coeff.size() - 3) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p < 2 || p > (std::int64_t{1} << 31) || !is_prime(p)) throw UsageError("--coeff fp:<p> needs a prime p < 2^31");
    return f(Fp(1, p), "fp:" + std::to_string(p));
  }
  throw UsageError("--coeff must be zz or fp:<prime>");
}

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Positional texts, or standard input when none are given (or when one is "-").
std::vector<Expression> read_expressions(const std::vector<std::string>& args) {
  std::vector<Expression> out;
  if (args.empty() || (args.size() == 1 && args[0] == "-")) return parse_expressions(read_stream(std::cin));
  for (const auto& a : args)
    for (auto& e : parse_expressions(a)) out.push_back(std::move(e));
  return out;
}

std::string read_file_or_stdin(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_stream(in);
}

template <class S>
void emit_element(const Globals& g, const Element<S>& e, const TypedSequence& fallback, const std::string& ring) {
  if (g.json) std::cout << element_to_json(e, ring).dump(2) << "\n";
  else std::cout << print_element(e, fallback) << "\n";
}

int cmd_nf(const Globals& g, const std::vector<std::string>& args) {
  const auto exprs = read_expressions(args);
  return with_ring(g, [&](const auto& unit, const std::string& ring) {
    for (const auto& ex : exprs) emit_element(g, evaluate(ex, unit), ex.source, ring);
    return kExitOk;
  });
}

int cmd_mul(const Globals& g, const std::vector<std::string>& args) {
  const auto exprs = read_expressions(args);
  if (exprs.size() < 2) throw UsageError("mul needs at least two expressions (the first is on top)");
  return with_ring(g, [&](const auto& unit, const std::string& ring) {
    auto acc = evaluate(exprs.back(), unit);
    for (std::size_t i = exprs.size() - 1; i-- > 0;) acc = multiply(evaluate(exprs[i], unit), acc);
    emit_element(g, acc, exprs.back().source, ring);
    return kExitOk;
  });
}

int cmd_diff(const Globals& g, const std::vector<std::string>& args) {
  const auto exprs = read_expressions(args);
  return with_ring(g, [&](const auto& unit, const std::string& ring) {
    for (const auto& ex : exprs) emit_element(g, differential(evaluate(ex, unit)), ex.source, ring);
    return kExitOk;
  });
}

std::string term_text(const DiagramTerm& t) {
  return print_expression({t.source, {{Rational(1), term_tokens(t, default_engine().canonical_word(t.perm))}}});
}

int cmd_basis(const Globals& g, const std::string& src, std::string tgt, const std::optional<int>& coh) {
  if (tgt.empty()) tgt = src;
  const TypedSequence s(src), t(tgt);
  if (s.ones() != t.ones() || s.twos() != t.twos()) throw UsageError("source and target have different weights");
  Json terms = Json::array();
  for (const auto& term : enumerate_basis(s, t, g.qmax)) {
    const auto deg = term.bidegree();
    if (coh && deg.coh != *coh) continue;
    if (g.json) {
      terms.push_back({{"word", default_engine().canonical_word(term.perm).letters},
                       {"dots", term.dots},
                       {"cohdeg", deg.coh},
                       {"qdeg", deg.q}});
    } else {
      std::cout << "(" << deg.coh << "," << deg.q << ") " << term_text(term) << "\n";
    }
  }
  if (g.json)
    std::cout << Json{{"schema", "glcat.basis/1"}, {"source", src}, {"target", tgt}, {"qmax", g.qmax}, {"terms", terms}}.dump(2)
              << "\n";
  return kExitOk;
}

int cmd_gdim(const Globals& g, const std::string& src, std::string tgt) {
  if (tgt.empty()) tgt = src;
  const TypedSequence s(src), t(tgt);
  if (s.ones() != t.ones() || s.twos() != t.twos()) throw UsageError("source and target have different weights");
  const auto by_coh = graded_dim_by_coh(s, t, g.qmax);
  LaurentInt total;
  Json rows = Json::array();
  for (const auto& [c, f] : by_coh) {
    total += f;
    if (g.json) rows.push_back({{"cohdeg", c}, {"dim", f.str()}});
    else std::cout << "coh " << c << ": " << f.str() << "\n";
  }
  if (g.json)
    std::cout << Json{{"schema", "glcat.gdim/1"}, {"source", src}, {"target", tgt}, {"qmax", g.qmax}, {"by_coh", rows},
                      {"total", total.str()}}
                     .dump(2)
              << "\n";
  else
    std::cout << "total: " << total.str() << "\n";
  return kExitOk;
}

int cmd_homology(const Globals& g, const std::string& src, const std::string& tgt, const std::optional<int>& n,
                 const std::optional<int>& m, bool torsion) {
  std::vector<std::pair<TypedSequence, TypedSequence>> blocks;
  if (n || m) {
    if (!n || !m || !src.empty()) throw UsageError("give either --n and --m, or --source [--target]");
    if (*n < 0 || *m < 0) throw UsageError("weights must be nonnegative");
    const auto seqs = all_sequences(*n, *m);
    for (const auto& a : seqs)
      for (const auto& b : seqs) blocks.emplace_back(a, b);
  } else {
    if (src.empty()) throw UsageError("homology needs --source or --n/--m");
    const TypedSequence a(src), b(tgt.empty() ? src : tgt);
    if (a.ones() != b.ones() || a.twos() != b.twos()) throw UsageError("source and target have different weights");
    blocks.emplace_back(a, b);
  }
  std::vector<HomologyRow> rows;
  long total = 0;
  for (const auto& [a, b] : blocks)
    for (int q = block_min_qdegree(a, b); q <= g.qmax; ++q)
      for (const auto& [c, dim] : homology_dim(a, b, q)) {
        if (dim != 0) rows.push_back({a.str(), b.str(), q, c, dim});
        total += dim;
        if (torsion && !g.json)
          for (const auto& f : homology_torsion(a, b, q, c))
            std::cout << "torsion " << a.str() << " -> " << b.str() << " q=" << q << " coh=" << c << ": Z/" << f << "\n";
      }
  if (g.json) {
    std::cout << homology_to_json(rows).dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << r.source << " -> " << r.target << " q=" << r.qdeg << " coh=" << r.cohdeg << ": " << r.dim << "\n";
    std::cout << "total dimension up to q=" << g.qmax << ": " << total << "\n";
  }
  return kExitOk;
}

int cmd_contract(const Globals& g, const std::string& seq, const std::vector<std::string>& args) {
  Element<Rational> target;
  TypedSequence fallback;
  if (!seq.empty()) {
    fallback = TypedSequence(seq);
    target = idempotent(fallback, Rational(1));
  } else {
    for (const auto& ex : read_expressions(args)) {
      fallback = ex.source;
      target += evaluate(ex, Rational(1));
    }
  }
  const auto y = find_contraction(target);
  if (!y) {
    std::cerr << "no contraction: the target is not a boundary in its blocks\n";
    return kExitFailed;
  }
  if (g.json) std::cout << element_to_json(*y, "qq").dump(2) << "\n";
  else std::cout << print_element(*y, fallback) << "\n";
  return kExitOk;
}

int cmd_em(const Globals& g, int m) {
  if (m < 0) throw UsageError("--m must be nonnegative");
  return with_ring(g, [&](const auto& unit, const std::string& ring) {
    emit_element(g, lift(e_m(m), unit), TypedSequence(std::string(m, '2')), ring);
    return kExitOk;
  });
}

std::string shift_text(int s) { return s == 0 ? "" : "{" + std::to_string(s) + "}"; }

int cmd_decompose(const Globals& g, const std::string& src, const std::vector<std::string>& tgts, const std::string& out) {
  if (tgts.empty()) throw UsageError("decompose needs at least one --target");
  std::vector<DividedPowerSequence> targets;
  for (const auto& t : tgts) targets.push_back(DividedPowerSequence::parse(t));
  const auto source = DividedPowerSequence::parse(src);
  const auto r = solve_decomposition(source, targets);
  if (!r.solved()) {
    std::cerr << "no decomposition: " << r.message << "\n";
    return kExitFailed;
  }
  const auto& cert = *r.certificate;
  std::string why;
  if (!verify_certificate(cert, &why)) {
    std::cerr << "certificate failed replay: " << why << "\n";
    return kExitFailed;
  }
  const Json j = certificate_to_json(cert);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << j.dump(2) << "\n";
  }
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "P_" << source.str() << shift_text(cert.source_shift) << " =";
    for (std::size_t i = 0; i < cert.targets.size(); ++i)
      std::cout << (i ? " +" : "") << " (" << cert.targets[i].multiplicity.str() << ") P_" << cert.targets[i].seq.str()
                << shift_text(cert.targets[i].shift);
    std::cout << "\ncertificate: " << cert.alphas.size() << " pairs, replay ok\n";
  }
  return kExitOk;
}

int cmd_replay(const Globals& g, const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file_or_stdin(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("certificate JSON: ") + e.what());
  }
  const auto cert = certificate_from_json(j);
  std::string why;
  const bool ok = verify_certificate(cert, &why);
  if (g.json) {
    std::cout << Json{{"schema", "glcat.replay/1"}, {"source", cert.source.str()}, {"valid", ok}, {"reason", why}}.dump(2)
              << "\n";
  } else if (ok) {
    std::cout << "valid: P_" << cert.source.str() << " with " << cert.alphas.size() << " pairs\n";
  } else {
    std::cout << "invalid: " << why << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify(const Globals& g, const std::optional<int>& n, const std::optional<int>& m, bool timings) {
  VerifyLimits lim;
  lim.qmax = g.qmax;
  lim.degmax = g.degmax;
  if (n || m) {
    if (!n || !m) throw UsageError("verify needs both --n and --m, or neither");
    const auto rep = verify_weight(*n, *m, lim);
    if (g.json) std::cout << Json{{"schema", "glcat.verify-weight/1"}, {"n", *n}, {"m", *m}, {"passed", rep.passed}, {"lines", rep.lines}}.dump(2) << "\n";
    else
      for (const auto& l : rep.lines) std::cout << l << "\n";
    return rep.passed ? kExitOk : kExitFailed;
  }
  const auto results = run_acceptance(lim);
  bool ok = true;
  Json crit = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (g.json) {
      Json row{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
      if (timings) row["seconds"] = r.seconds;
      crit.push_back(row);
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail;
      if (timings) std::cout << " [" << r.seconds << " s]";
      std::cout << "\n";
    }
  }
  Json splits = Json::array();
  for (const auto& s : undivided_splits(3)) {
    if (g.json) {
      splits.push_back({{"m", s.m}, {"k", s.k}, {"solved", s.solved}, {"r1", s.r1.str()}, {"r2", s.r2.str()},
                        {"kfact_mkfact_s2", s.predicted_r2.str()}, {"kfact_mfact_s2", s.alternative_r2.str()}});
    } else {
      std::cout << "info undivided 2^" << s.k << " 1 2^" << s.m - s.k << ": r' = " << s.r1.str() << ", r'' = " << s.r2.str()
                << "; [k]![m-k]!s'' = " << s.predicted_r2.str() << ", [k]![m]!s'' = " << s.alternative_r2.str() << "\n";
    }
  }
  if (g.json) std::cout << Json{{"schema", "glcat.verify/1"}, {"passed", ok}, {"criteria", crit}, {"undivided", splits}}.dump(2) << "\n";
  return ok ? kExitOk : kExitFailed;
}

Permutation parse_perm(const std::string& text, int size) {
  if (text.empty()) return Permutation::identity(size);
  std::vector<int> im;
  std::string cur;
  for (char c : text + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (c == ' ' || c == ',') {
      if (!cur.empty()) im.push_back(std::stoi(cur) - 1);
      cur.clear();
    } else {
      throw UsageError("--perm: expected 1-based images separated by spaces or commas");
    }
  }
  if (static_cast<int>(im.size()) != size)
    throw UsageError("--perm must list " + std::to_string(size) + " images (one per fermionic strand)");
  return Permutation(im);
}

int cmd_pol(const Globals& g, const std::vector<std::string>& args, const std::string& poly, const std::string& perm,
            const std::string& rule_name) {
  if (rule_name != "standard" && rule_name != "interchanged") throw UsageError("--rule must be standard or interchanged");
  const MixedRule rule = rule_name == "standard" ? MixedRule::Standard : MixedRule::Interchanged;
  const auto exprs = read_expressions(args);
  return with_ring(g, [&](const auto& unit, const std::string& ring) {
    using S = std::decay_t<decltype(unit)>;
    for (const auto& ex : exprs) {
      const auto f = parse_polynomial<S>(poly.empty() ? "1" : poly, ex.source.twos(), unit);
      const auto v = PolVector<S>::single({ex.source, parse_perm(perm, ex.source.ones())}, f);
      PolVector<S> img;
      const auto e = evaluate(ex, unit);
      for (const auto& [t, c] : e.terms()) img += act_word(default_engine().word(t), v, rule).scaled(c);
      if (g.json) {
        Json blocks = Json::array();
        for (const auto& [key, p] : img.blocks()) {
          Json terms = Json::array();
          for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_string(c)}});
          std::vector<int> w;
          for (int x : key.w.images()) w.push_back(x + 1);
          blocks.push_back({{"seq", key.seq.str()}, {"w", w}, {"terms", terms}});
        }
        std::cout << Json{{"schema", "glcat.pol/1"}, {"ring", ring}, {"blocks", blocks}}.dump(2) << "\n";
      } else {
        std::cout << print_pol_vector(img) << "\n";
      }
    }
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the dg rings R(n,m)"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--coeff", g.coeff, "Coefficient ring: zz or fp:<p>")->capture_default_str();
  app.add_option("--qmax", g.qmax, "Largest q-degree considered")->capture_default_str();
  app.add_option("--degmax", g.degmax, "Largest monomial degree of Pol test vectors")->capture_default_str();

  std::vector<std::string> exprs;
  auto add_exprs = [&](CLI::App* sub) {
    sub->add_option("expr", exprs, "Expressions; read from stdin when absent");
    sub->fallthrough();
  };

  auto* nf = app.add_subcommand("nf", "Normal form of expressions");
  add_exprs(nf);
  auto* mul = app.add_subcommand("mul", "Product of expressions, first on top");
  add_exprs(mul);
  auto* diff = app.add_subcommand("diff", "Differential of expressions");
  add_exprs(diff);

  std::string source, target;
  std::optional<int> coh, wn, wm;
  auto* basis = app.add_subcommand("basis", "Enumerate the basis of a block");
  basis->add_option("--source", source, "Bottom sequence")->required();
  basis->add_option("--target", target, "Top sequence (defaults to the source)");
  basis->add_option("--coh", coh, "Only this cohomological degree");
  basis->fallthrough();

  auto* gdim = app.add_subcommand("gdim", "Graded dimension of a block");
  gdim->add_option("--source", source, "Bottom sequence")->required();
  gdim->add_option("--target", target, "Top sequence (defaults to the source)");
  gdim->fallthrough();

  bool torsion = false;
  auto* hom = app.add_subcommand("homology", "Homology of a block or of a whole weight");
  hom->add_option("--source", source, "Bottom sequence");
  hom->add_option("--target", target, "Top sequence (defaults to the source)");
  hom->add_option("--n", wn, "Number of ones");
  hom->add_option("--m", wm, "Number of twos");
  hom->add_flag("--torsion", torsion, "Also print torsion of the integral homology");
  hom->fallthrough();

  std::string seq;
  auto* contract = app.add_subcommand("contract", "Find y with d(y) equal to a target");
  contract->add_option("--seq", seq, "Target is the idempotent of this sequence");
  add_exprs(contract);

  int em_m = 0;
  auto* em = app.add_subcommand("em", "The nilHecke idempotent e_m");
  em->add_option("--m", em_m, "Number of strands")->required();
  em->fallthrough();

  std::vector<std::string> targets;
  std::string out_path;
  auto* dec = app.add_subcommand("decompose", "Solve and replay a decomposition certificate");
  dec->add_option("--source", source, "Source, e.g. 212 or 2^(2)1")->required();
  dec->add_option("--target", targets, "Target summand (repeatable)");
  dec->add_option("--out", out_path, "Write the certificate JSON to this file");
  dec->fallthrough();

  std::string cert_path;
  auto* replay = app.add_subcommand("replay", "Re-check a stored certificate without solving");
  replay->add_option("file", cert_path, "Certificate JSON; stdin when absent");
  replay->fallthrough();

  bool timings = false;
  auto* ver = app.add_subcommand("verify", "Acceptance suite, or the checks of one weight");
  ver->add_option("--n", wn, "Number of ones");
  ver->add_option("--m", wm, "Number of twos");
  ver->add_flag("--timings", timings, "Report seconds per criterion");
  ver->fallthrough();

  std::string poly, perm, rule = "standard";
  auto* pol = app.add_subcommand("pol", "Act on a vector of the polynomial representation");
  pol->add_option("--poly", poly, "Polynomial in x1..xm of the source (default 1)");
  pol->add_option("--perm", perm, "Block permutation of the fermionic strands, 1-based images");
  pol->add_option("--rule", rule, "Mixed-crossing rule: standard or interchanged")->capture_default_str();
  add_exprs(pol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*nf) return cmd_nf(g, exprs);
    if (*mul) return cmd_mul(g, exprs);
    if (*diff) return cmd_diff(g, exprs);
    if (*basis) return cmd_basis(g, source, target, coh);
    if (*gdim) return cmd_gdim(g, source, target);
    if (*hom) return cmd_homology(g, source, target, wn, wm, torsion);
    if (*contract) return cmd_contract(g, seq, exprs);
    if (*em) return cmd_em(g, em_m);
    if (*dec) return cmd_decompose(g, source, targets, out_path);
    if (*replay) return cmd_replay(g, cert_path);
    if (*ver) return cmd_verify(g, wn, wm, timings);
    if (*pol) return cmd_pol(g, exprs, poly, perm, rule);
  } catch (const glcat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const glcat::SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
