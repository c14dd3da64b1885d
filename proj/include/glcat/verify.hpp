#pragma once

#include "glcat/dg.hpp"
#include "glcat/diagram.hpp"
#include "glcat/k0.hpp"
#include "glcat/laurent.hpp"
#include "glcat/polrep.hpp"
#include "glcat/rewrite.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace glcat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Size caps shared by the acceptance checks.
struct VerifyLimits {
  int qmax = 8;
  int degmax = 6;
  int max_total = 4;  // n + m
  int leibniz_pairs = 1000;
  unsigned seed = 20240601;
};

namespace detail {

inline CriterionResult timed(int id, std::string name, double limit, const std::function<bool(std::ostringstream&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.passed = body(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.detail = detail.str();
  return r;
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

}  // namespace detail

/// dim R(n,0) = n!: reached by closing the identity under left crossings, and by Pol rank.
inline CriterionResult check_basis_dimension(int max_n = 6, Engine& eng = default_engine()) {
  return detail::timed(1, "basis dimension of R(n,0) is n!", 10, [&](std::ostringstream& out) {
    bool ok = true;
    for (int n = 0; n <= max_n; ++n) {
      const TypedSequence seq(std::string(n, '1'));
      std::set<DiagramTerm> seen{DiagramTerm::identity(seq)};
      std::vector<DiagramTerm> frontier(seen.begin(), seen.end());
      while (!frontier.empty()) {
        std::vector<DiagramTerm> next;
        for (const auto& t : frontier)
          for (int k = 1; k < n; ++k) {
            auto w = eng.word(t);
            w.tokens.push_back(GeneratorToken::crossing(k));
            const auto nf = eng.normal_form(w);
            for (const auto& [u, c] : nf.terms())
              if (seen.insert(u).second) next.push_back(u);
          }
        frontier = std::move(next);
      }
      const auto basis = enumerate_basis(seq, seq, 0);
      const bool same = std::set<DiagramTerm>(basis.begin(), basis.end()) == seen;
      const auto pol = faithfulness_check(n, 0, 0, 0, eng);
      const auto expect = static_cast<std::size_t>(detail::factorial(n));
      const bool row = seen.size() == expect && same && pol.rank == expect && pol.terms == expect;
      ok = ok && row;
      out << (n ? " " : "") << "n=" << n << ":" << seen.size() << "/" << pol.rank;
    }
    return ok;
  });
}

/// Every reduced word of w gives the same signed product of crossings.
inline CriterionResult check_sign_well_defined(int max_n = 5) {
  return detail::timed(2, "sigma_w independent of the reduced word", 30, [&](std::ostringstream& out) {
    std::size_t words = 0, perms = 0;
    bool ok = true;
    for (int n = 1; n <= max_n; ++n)
      for (const auto& w : all_permutations(n)) {
        ++perms;
        const auto ref = sigma_w(w);
        for (const auto& rw : all_reduced_words(w)) {
          ++words;
          if (!(sigma_of_word(rw, n) == ref)) {
            ok = false;
            out << "mismatch at " << w.str() << "; ";
          }
        }
      }
    out << perms << " permutations, " << words << " reduced words";
    return ok;
  });
}

/// All defining relations act as zero on Pol up to monomial degree degmax; the basis acts faithfully
/// for n + m <= 3.
inline CriterionResult check_relation_soundness(const VerifyLimits& lim = {}, Engine& eng = default_engine()) {
  return detail::timed(3, "defining relations vanish on Pol", 120, [&](std::ostringstream& out) {
    const Integer unit(1);
    std::size_t instances = 0, failures = 0;
    for (int total = 0; total <= lim.max_total; ++total)
      for (int n = 0; n <= total; ++n)
        for (const auto& seq : all_sequences(n, total - n)) {
          const auto tests = pol_test_vectors<Integer>({seq}, lim.degmax, unit);
          for (const auto& rel : defining_relations(seq)) {
            ++instances;
            for (const auto& v : tests) {
              PolVector<Integer> acc;
              for (const auto& [c, toks] : rel.terms) acc += act_word<Integer>({rel.source, toks}, v).scaled(c);
              if (!acc.is_zero()) {
                ++failures;
                out << rel.name << " on " << rel.source.str() << " fails; ";
                break;
              }
            }
          }
        }
    std::size_t terms = 0, rank = 0;
    for (int total = 0; total <= 3; ++total)
      for (int n = 0; n <= total; ++n) {
        const auto rep = faithfulness_check(n, total - n, lim.degmax, lim.degmax, eng);
        terms += rep.terms;
        rank += rep.rank;
      }
    out << instances << " relation instances, " << failures << " nonzero; Pol rank " << rank << "/" << terms;
    return failures == 0 && rank == terms;
  });
}

/// d^2 = 0 on every basis term and the Leibniz rule on random homogeneous pairs.
inline CriterionResult check_dg_structure(const VerifyLimits& lim = {}, Differential& d = default_differential()) {
  return detail::timed(4, "d^2 = 0 and Leibniz rule", 60, [&](std::ostringstream& out) {
    Engine& eng = d.engine();
    std::size_t terms = 0, bad_square = 0;
    for (int total = 0; total <= lim.max_total; ++total)
      for (int n = 0; n <= total; ++n) {
        const auto seqs = all_sequences(n, total - n);
        for (const auto& s : seqs)
          for (const auto& t : seqs)
            for (const auto& term : enumerate_basis(s, t, lim.qmax)) {
              ++terms;
              if (!d(d(term)).is_zero()) ++bad_square;
            }
      }
    std::mt19937 rng(lim.seed);
    auto pick = [&](std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };
    auto random_homogeneous = [&](const TypedSequence& src, const TypedSequence& tgt) {
      auto basis = enumerate_basis(src, tgt, 6);
      const auto deg = basis[pick(basis.size())].bidegree();
      std::vector<DiagramTerm> same;
      for (const auto& t : basis)
        if (t.bidegree() == deg) same.push_back(t);
      Element<Integer> e;
      const int k = 1 + static_cast<int>(pick(3));
      for (int i = 0; i < k; ++i) e.add(same[pick(same.size())], Integer(static_cast<std::int64_t>(pick(7)) - 3));
      if (e.is_zero()) e.add(same.front(), Integer(1));
      return std::make_pair(e, deg);
    };
    int bad_leibniz = 0;
    for (int i = 0; i < lim.leibniz_pairs; ++i) {
      const int total = 1 + static_cast<int>(pick(lim.max_total));
      const int n = static_cast<int>(pick(total + 1));
      const auto seqs = all_sequences(n, total - n);
      const auto& s1 = seqs[pick(seqs.size())];
      const auto& s2 = seqs[pick(seqs.size())];
      const auto& s3 = seqs[pick(seqs.size())];
      auto [b, db] = random_homogeneous(s1, s2);
      auto [a, da] = random_homogeneous(s2, s3);
      const auto lhs = d(multiply(a, b, eng));
      auto rhs = multiply(d(a), b, eng);
      const auto tail = multiply(a, d(b), eng);
      rhs += da.coh % 2 == 0 ? tail : -tail;
      if (!(lhs == rhs)) ++bad_leibniz;
    }
    out << terms << " terms with " << bad_square << " nonzero d^2; " << lim.leibniz_pairs << " Leibniz pairs with "
        << bad_leibniz << " failures";
    return bad_square == 0 && bad_leibniz == 0;
  });
}

/// find_contraction(1) in R(3,m), m = 0, 1, 2, replayed through d.
inline CriterionResult check_contractions(Differential& d = default_differential()) {
  return detail::timed(5, "contraction of 1 in R(3,m) for m <= 2", 120, [&](std::ostringstream& out) {
    bool ok = true;
    for (int m = 0; m <= 2; ++m) {
      const auto one = lift(unit_element(3, m), Rational(1));
      const auto y = find_contraction(one, d);
      const bool row = y && d(*y) == one;
      ok = ok && row;
      out << (m ? " " : "") << "R(3," << m << "):" << (row ? std::to_string(y->size()) + " terms" : "none");
    }
    return ok;
  });
}

/// H(R(n,0)) = 0 for n = 2, 3 and K0 ranks 1, 1, 0, 0 for n = 0..3 at m = 0.
inline CriterionResult check_oddsector(Differential& d = default_differential()) {
  return detail::timed(6, "odd sector homology and K0 ranks", 60, [&](std::ostringstream& out) {
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
      const TypedSequence seq(std::string(n, '1'));
      int total = 0;
      for (const auto& [c, dim] : homology_dim(seq, seq, 0, d)) total += dim;
      ok = ok && total == 0;
      out << "dim H(R(" << n << ",0)) = " << total << "; ";
    }
    const int expected[] = {1, 1, 0, 0};
    out << "ranks";
    for (int n = 0; n <= 3; ++n) {
      const auto rep = k0_rank(n, 0, d.engine());
      ok = ok && rep.rank == expected[n] && rep.decompositions_ok;
      out << " " << rep.rank;
    }
    return ok;
  });
}

/// e_m is a degree-zero idempotent for m <= 5, and P_22 splits into two shifted copies of P_2^(2).
inline CriterionResult check_nilhecke(Engine& eng = default_engine()) {
  return detail::timed(7, "nilHecke idempotents and P_22 = [2] P_2^(2)", 60, [&](std::ostringstream& out) {
    bool ok = true;
    out << "e_m terms";
    for (int m = 0; m <= 5; ++m) {
      const auto e = e_m(m, eng);
      const auto deg = e.homogeneous_degree();
      const bool row = !e.is_zero() && deg && *deg == BiDegree{0, 0} && multiply(e, e, eng) == e;
      ok = ok && row;
      out << " " << e.size();
    }
    const auto r = solve_decomposition(DividedPowerSequence::parse("22"), {DividedPowerSequence::parse("2^(2)")}, eng);
    const bool split = r.solved() && r.multiplicities[0] == quantum_integer(2) && verify_certificate(*r.certificate, nullptr, eng);
    ok = ok && split;
    out << "; multiplicity " << (r.solved() ? r.multiplicities[0].str() : r.message);
    return ok;
  });
}

/// Multiplicities r', r'' of P_{2^k 1 2^(m-k)} (all twos undivided) in P_{12^(m)} and P_{2^(m)1}.
struct UndividedSplit {
  int m = 0, k = 0;
  bool solved = false;
  LaurentInt r1, r2;
  LaurentInt predicted_r1;   // [k]! [m-k]! s'
  LaurentInt predicted_r2;   // [k]! [m-k]! s''
  LaurentInt alternative_r2; // [k]! [m]! s''
};

inline std::vector<UndividedSplit> undivided_splits(int max_m, Engine& eng = default_engine()) {
  std::vector<UndividedSplit> out;
  for (int m = 2; m <= max_m; ++m)
    for (int k = 1; k < m; ++k) {
      UndividedSplit s;
      s.m = m;
      s.k = k;
      const TypedSequence seq(std::string(k, '2') + "1" + std::string(m - k, '2'));
      const auto r = solve_decomposition(DividedPowerSequence::undivided(seq),
                                         {DividedPowerSequence::sandwich(1, m, 0), DividedPowerSequence::sandwich(0, m, 1)}, eng);
      s.solved = r.solved();
      if (s.solved) {
        s.r1 = r.multiplicities[0];
        s.r2 = r.multiplicities[1];
      }
      const LaurentInt fk = quantum_factorial(k);
      s.predicted_r1 = fk * quantum_factorial(m - k) * quantum_binomial(m - 1, k);
      s.predicted_r2 = fk * quantum_factorial(m - k) * quantum_binomial(m - 1, k - 1);
      s.alternative_r2 = fk * quantum_factorial(m) * quantum_binomial(m - 1, k - 1);
      out.push_back(std::move(s));
    }
  return out;
}

/// P_212 = P_12^(2) + P_2^(2)1 and the divided-power multiplicities s', s'' for m <= 3.
inline CriterionResult check_serre(int max_m = 3, Engine& eng = default_engine()) {
  return detail::timed(8, "P_212 splitting and multiplicities s', s''", 300, [&](std::ostringstream& out) {
    const auto r = solve_decomposition(DividedPowerSequence::parse("212"),
                                       {DividedPowerSequence::parse("12^(2)"), DividedPowerSequence::parse("2^(2)1")}, eng);
    bool ok = r.solved() && r.multiplicities[0] == LaurentInt(1) && r.multiplicities[1] == LaurentInt(1) &&
              verify_certificate(*r.certificate, nullptr, eng);
    out << "212: " << (r.solved() ? r.multiplicities[0].str() + ", " + r.multiplicities[1].str() : r.message);
    int rows = 0;
    for (const auto& c : verify_u_plus_relations(max_m, eng)) {
      if (c.identity.rfind("P_", 0) != 0) continue;
      ++rows;
      ok = ok && c.passed;
      if (!c.passed) out << "; failed " << c.identity << " (" << c.detail << ")";
    }
    out << "; " << rows << " (m,k) cases";
    return ok && rows > 0;
  });
}

/// H(R_1) has the Hilbert series of Sym_m/(x_1...x_m) and d(X) = x_1...x_m e, m <= 3.
inline CriterionResult check_weight_two_collapse(const VerifyLimits& lim = {}, Differential& d = default_differential()) {
  return detail::timed(9, "H(R_1) = Sym_m/(x_1...x_m) and d(X) = x_1...x_m", 120, [&](std::ostringstream& out) {
    bool ok = true;
    for (int m = 1; m <= 3; ++m) {
      const auto h = r1_homology_character(m, lim.qmax, d);
      const auto expect = sym_quotient_series(m, lim.qmax);
      const bool dx = d(r1_generator_x(m, d.engine())) == r1_dot_product(m, d.engine());
      ok = ok && h == expect && dx;
      out << (m > 1 ? "; " : "") << "m=" << m << ": " << h.str() << (dx ? "" : " (d(X) mismatch)");
    }
    return ok;
  });
}

/// Over F_2 the products in R(n,0) are those of the nilCoxeter algebra.
inline CriterionResult check_characteristic_two(int max_n = 4, Engine& eng = default_engine()) {
  return detail::timed(10, "F_2 multiplication tables are nilCoxeter", 60, [&](std::ostringstream& out) {
    const Fp one(1, 2);
    std::size_t pairs = 0, bad = 0;
    for (int n = 0; n <= max_n; ++n) {
      const TypedSequence seq(std::string(n, '1'));
      for (const auto& u : all_permutations(n))
        for (const auto& v : all_permutations(n)) {
          ++pairs;
          const auto a = Element<Fp>::term({seq, u, {}}, one);
          const auto b = Element<Fp>::term({seq, v, {}}, one);
          const auto uv = u * v;
          Element<Fp> expect;
          if (uv.length() == u.length() + v.length()) expect.add({seq, uv, {}}, one);
          if (!(multiply(a, b, eng) == expect)) ++bad;
        }
    }
    out << pairs << " products, " << bad << " mismatches";
    return bad == 0;
  });
}

inline std::vector<CriterionResult> run_acceptance(const VerifyLimits& lim = {}, Differential& d = default_differential()) {
  Engine& eng = d.engine();
  return {check_basis_dimension(6, eng), check_sign_well_defined(5), check_relation_soundness(lim, eng),
          check_dg_structure(lim, d),    check_contractions(d),       check_oddsector(d),
          check_nilhecke(eng),           check_serre(3, eng),         check_weight_two_collapse(lim, d),
          check_characteristic_two(4, eng)};
}

/// Checks tied to a single weight (n, m): relations on Pol, d^2, homology and the K0 count.
struct WeightReport {
  std::vector<std::string> lines;
  bool passed = true;
};

inline WeightReport verify_weight(int n, int m, const VerifyLimits& lim = {}, Differential& d = default_differential()) {
  if (n < 0 || m < 0) throw DomainError("verify_weight: negative weight");
  Engine& eng = d.engine();
  WeightReport rep;
  auto line = [&](bool ok, const std::string& text) {
    rep.passed = rep.passed && ok;
    rep.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + text);
  };
  const auto seqs = all_sequences(n, m);
  const std::string w = "(" + std::to_string(n) + "," + std::to_string(m) + ")";

  std::size_t instances = 0, failures = 0;
  for (const auto& seq : seqs) {
    const auto tests = pol_test_vectors<Integer>({seq}, lim.degmax, Integer(1));
    for (const auto& rel : defining_relations(seq)) {
      ++instances;
      for (const auto& v : tests) {
        PolVector<Integer> acc;
        for (const auto& [c, toks] : rel.terms) acc += act_word<Integer>({rel.source, toks}, v).scaled(c);
        if (!acc.is_zero()) {
          ++failures;
          break;
        }
      }
    }
  }
  line(failures == 0, "relations on Pol" + w + ": " + std::to_string(instances) + " instances, " +
                          std::to_string(failures) + " nonzero");

  std::size_t terms = 0, bad = 0;
  for (const auto& s : seqs)
    for (const auto& t : seqs)
      for (const auto& term : enumerate_basis(s, t, lim.qmax)) {
        ++terms;
        if (!d(d(term)).is_zero()) ++bad;
      }
  line(bad == 0, "d^2 = 0 on R" + w + ": " + std::to_string(terms) + " terms up to q = " + std::to_string(lim.qmax));

  const auto one = lift(unit_element(n, m), Rational(1));
  const auto y = find_contraction(one, d);
  if (y && d(*y) == one) {
    line(true, "H(R" + w + ") = 0: d(y) = 1 with y of " + std::to_string(y->size()) + " terms");
  } else {
    std::size_t total = 0;
    for (const auto& s : seqs)
      for (const auto& t : seqs) {
        const int qmin = block_min_qdegree(s, t);
        for (int q = qmin; q <= lim.qmax; ++q)
          for (const auto& [c, dim] : homology_dim(s, t, q, d)) total += dim;
      }
    line(n < 3, "H(R" + w + "): total dimension " + std::to_string(total) + " up to q = " + std::to_string(lim.qmax));
  }

  const auto k0 = k0_rank(n, m, eng);
  const int expected_rank = n == 0 ? 1 : n == 1 ? (m == 0 ? 1 : 2) : n == 2 ? (m == 0 ? 0 : 1) : 0;
  std::string surv;
  for (const auto& s : k0.surviving) surv += (surv.empty() ? "" : ", ") + s;
  line(k0.rank == expected_rank && k0.decompositions_ok,
       "K0 rank at " + w + " = " + std::to_string(k0.rank) + (surv.empty() ? "" : " (" + surv + ")"));
  return rep;
}

}  // namespace glcat
