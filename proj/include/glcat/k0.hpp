#pragma once

#include "glcat/dg.hpp"
#include "glcat/diagram.hpp"
#include "glcat/laurent.hpp"
#include "glcat/linalg.hpp"
#include "glcat/rewrite.hpp"
#include "glcat/scalar.hpp"
#include "glcat/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace glcat {

/// Sequence of ones and divided powers 2^(m); an undivided two is 2^(1).
class DividedPowerSequence {
 public:
  struct Item {
    bool one;
    int power;  // 1 for a one
    friend bool operator==(const Item&, const Item&) = default;
  };

  DividedPowerSequence() = default;
  explicit DividedPowerSequence(std::vector<Item> items) : items_(std::move(items)) {
    for (const auto& it : items_)
      if (!it.one && it.power < 1) throw DomainError("DividedPowerSequence: divided power must be >= 1");
  }
  static DividedPowerSequence undivided(const TypedSequence& seq) {
    std::vector<Item> items;
    for (char c : seq.str()) items.push_back({c == '1', 1});
    return DividedPowerSequence(std::move(items));
  }
  /// 1^a 2^(m) 1^b, omitting the middle item when m = 0.
  static DividedPowerSequence sandwich(int a, int m, int b) {
    std::vector<Item> items(a, Item{true, 1});
    if (m > 0) items.push_back({false, m});
    for (int i = 0; i < b; ++i) items.push_back({true, 1});
    return DividedPowerSequence(std::move(items));
  }

  /// Accepts "1", "2", "2^(m)" (divided) and "2^k", "1^k" (k undivided copies), e.g. "2^(2)12".
  static DividedPowerSequence parse(std::string_view text) {
    std::vector<Item> items;
    std::size_t i = 0;
    auto read_number = [&](std::size_t& pos) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw DomainError("DividedPowerSequence: expected a number in '" + std::string(text) + "'");
      return std::stoi(std::string(text.substr(start, pos - start)));
    };
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c != '1' && c != '2')
        throw DomainError("DividedPowerSequence: unexpected character '" + std::string(1, c) + "' in '" +
                          std::string(text) + "'");
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i < text.size() && text[i] == '(') {
          ++i;
          const int p = read_number(i);
          if (i >= text.size() || text[i] != ')') throw DomainError("DividedPowerSequence: missing ')'");
          ++i;
          if (c == '1') throw DomainError("DividedPowerSequence: divided powers of 1 are not allowed");
          if (p < 1) throw DomainError("DividedPowerSequence: divided power must be >= 1");
          items.push_back({false, p});
        } else {
          const int k = read_number(i);
          for (int j = 0; j < k; ++j) items.push_back({c == '1', 1});
        }
      } else {
        items.push_back({c == '1', 1});
      }
    }
    return DividedPowerSequence(std::move(items));
  }

  std::string str() const {
    std::string s;
    for (const auto& it : items_) {
      if (it.one) s += "1";
      else if (it.power == 1) s += "2";
      else s += "2^(" + std::to_string(it.power) + ")";
    }
    return s;
  }

  const std::vector<Item>& items() const { return items_; }
  TypedSequence expand() const {
    std::string s;
    for (const auto& it : items_) s += it.one ? std::string(1, '1') : std::string(it.power, '2');
    return TypedSequence(s);
  }
  int ones() const { return expand().ones(); }
  int twos() const { return expand().twos(); }
  /// a = sum over divided powers of m(1-m)/2.
  int shift() const {
    int a = 0;
    for (const auto& it : items_)
      if (!it.one) a += it.power * (1 - it.power) / 2;
    return a;
  }
  friend bool operator==(const DividedPowerSequence&, const DividedPowerSequence&) = default;

 private:
  std::vector<Item> items_;
};

/// Tokens of e_m on strands offset+1 .. offset+m: the dots x^rho first, then the longest divided-difference word.
inline std::vector<GeneratorToken> e_m_tokens(int m, int offset = 0) {
  if (m < 0) throw DomainError("e_m: negative size");
  std::vector<GeneratorToken> out;
  for (int i = 1; i < m; ++i)
    for (int e = 0; e < m - i; ++e) out.push_back(GeneratorToken::dot(offset + i));
  if (m >= 2) {
    std::vector<int> im(m);
    for (int j = 0; j < m; ++j) im[j] = m - 1 - j;
    auto w0 = canonical_reduced_word(Permutation(im));
    for (auto it = w0.letters.rbegin(); it != w0.letters.rend(); ++it) out.push_back(GeneratorToken::crossing(offset + *it));
  }
  return out;
}

inline GeneratorWord e_m_word(int m) { return {TypedSequence(std::string(m, '2')), e_m_tokens(m)}; }

/// The idempotent e_m of R(0,m).
inline Element<Integer> e_m(int m, Engine& eng = default_engine()) { return eng.normal_form(e_m_word(m)); }

/// Word of the idempotent 1_{i} for a divided-power sequence: one e_m block per divided power.
inline GeneratorWord divided_word(const DividedPowerSequence& s) {
  GeneratorWord w{s.expand(), {}};
  int offset = 0;
  for (const auto& it : s.items()) {
    if (!it.one) {
      auto t = e_m_tokens(it.power, offset);
      w.tokens.insert(w.tokens.end(), t.begin(), t.end());
    }
    offset += it.one ? 1 : it.power;
  }
  return w;
}

inline Element<Integer> divided_idempotent(const DividedPowerSequence& s, Engine& eng = default_engine()) {
  return eng.normal_form(divided_word(s));
}

/// q-graded dimension of the block source -> target up to qdeg_cutoff, keyed by cohomological degree.
inline std::map<int, LaurentInt> graded_dim_by_coh(const TypedSequence& source, const TypedSequence& target,
                                                   int qdeg_cutoff) {
  std::map<int, LaurentInt> out;
  for (const auto& t : enumerate_basis(source, target, qdeg_cutoff)) {
    auto d = t.bidegree();
    out[d.coh].add_term(d.q, 1);
  }
  return out;
}

inline LaurentInt graded_dim(const TypedSequence& source, const TypedSequence& target, int qdeg_cutoff) {
  LaurentInt total;
  for (const auto& [c, l] : graded_dim_by_coh(source, target, qdeg_cutoff)) total += l;
  return total;
}

/// q-graded dimension of left * R * right (cohomological degree 0) over [qmin, qmax].
inline LaurentInt truncated_graded_dim(const Element<Rational>& left, const Element<Rational>& right, int qmin,
                                       int qmax, Engine& eng = default_engine()) {
  LaurentInt out;
  for (int q = qmin; q <= qmax; ++q) out.add_term(q, static_cast<std::int64_t>(sandwich_basis(left, right, 0, q, eng).size()));
  return out;
}

struct CertificateTarget {
  DividedPowerSequence seq;
  int shift = 0;
  LaurentInt multiplicity;
};

/// P_source = sum over pairs of alpha_a beta_a; alpha_a: bottom on target, top on source.
struct DecompositionCertificate {
  DividedPowerSequence source;
  int source_shift = 0;
  std::vector<CertificateTarget> targets;
  std::vector<Element<Rational>> alphas;
  std::vector<Element<Rational>> betas;
  std::vector<int> pair_target;  // target index of each pair
  std::vector<int> alpha_degree;
};

struct DecompositionResult {
  bool conclusive = true;
  std::string message;
  std::vector<LaurentInt> multiplicities;
  std::optional<DecompositionCertificate> certificate;
  bool solved() const { return certificate.has_value(); }
};

/// c with p == c * e, if p is a scalar multiple of e.
inline std::optional<Rational> scalar_multiple_of(const Element<Rational>& p, const Element<Rational>& e) {
  if (p.is_zero()) return Rational(0);
  const auto& [t0, c0] = *e.terms().begin();
  Rational c = p.coeff(t0) / c0;
  if (!(p == e.scaled(c))) return std::nullopt;
  return c;
}

/// Replays every identity of a certificate.
inline bool verify_certificate(const DecompositionCertificate& cert, std::string* why = nullptr,
                               Engine& eng = default_engine()) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t r = cert.alphas.size();
  if (cert.betas.size() != r || cert.pair_target.size() != r || cert.alpha_degree.size() != r)
    return fail("certificate arrays have different lengths");
  if (cert.source_shift != cert.source.shift()) return fail("source shift differs from the divided-power convention");
  for (const auto& t : cert.targets) {
    if (t.shift != t.seq.shift()) return fail("target shift differs from the divided-power convention");
    if (t.seq.ones() != cert.source.ones() || t.seq.twos() != cert.source.twos())
      return fail("target " + t.seq.str() + " has a different weight");
  }
  const Element<Rational> es = lift(divided_idempotent(cert.source, eng), Rational(1));
  std::vector<Element<Rational>> et;
  for (const auto& t : cert.targets) et.push_back(lift(divided_idempotent(t.seq, eng), Rational(1)));
  for (std::size_t a = 0; a < r; ++a) {
    const int j = cert.pair_target[a];
    if (j < 0 || j >= static_cast<int>(et.size())) return fail("pair refers to unknown target");
    auto da = cert.alphas[a].homogeneous_degree();
    auto db = cert.betas[a].homogeneous_degree();
    if (!da || !db || *da != BiDegree{0, cert.alpha_degree[a]} || *db != BiDegree{0, -cert.alpha_degree[a]})
      return fail("pair " + std::to_string(a) + " is not homogeneous of the declared degree");
    if (!(multiply(multiply(es, cert.alphas[a], eng), et[j], eng) == cert.alphas[a]))
      return fail("alpha " + std::to_string(a) + " is not in e_source R e_target");
    if (!(multiply(multiply(et[j], cert.betas[a], eng), es, eng) == cert.betas[a]))
      return fail("beta " + std::to_string(a) + " is not in e_target R e_source");
  }
  for (std::size_t b = 0; b < r; ++b)
    for (std::size_t a = 0; a < r; ++a) {
      auto p = multiply(cert.betas[b], cert.alphas[a], eng);
      if (a == b) {
        if (!(p == et[cert.pair_target[a]])) return fail("beta_b alpha_b differs from the target idempotent");
      } else if (!p.is_zero()) {
        return fail("beta_b alpha_a is nonzero for a != b");
      }
    }
  Element<Rational> sum;
  for (std::size_t a = 0; a < r; ++a) sum += multiply(cert.alphas[a], cert.betas[a], eng);
  if (!(sum == es)) return fail("sum of alpha_a beta_a differs from the source idempotent");
  std::vector<LaurentInt> mult(cert.targets.size());
  for (std::size_t a = 0; a < r; ++a) {
    const int j = cert.pair_target[a];
    mult[j].add_term(cert.source_shift - cert.targets[j].shift - cert.alpha_degree[a], 1);
  }
  for (std::size_t j = 0; j < mult.size(); ++j)
    if (!(mult[j] == cert.targets[j].multiplicity)) return fail("declared multiplicity differs from the pairs");
  return true;
}

/// Solves for alpha/beta families realizing P_source as a sum of shifted copies of the targets.
inline DecompositionResult solve_decomposition(const DividedPowerSequence& source,
                                               const std::vector<DividedPowerSequence>& targets,
                                               Engine& eng = default_engine()) {
  DecompositionResult res;
  const TypedSequence sseq = source.expand();
  for (const auto& t : targets)
    if (t.ones() != source.ones() || t.twos() != source.twos())
      throw DomainError("solve_decomposition: target " + t.str() + " has a different weight than " + source.str());
  if (source.ones() > 2) throw DomainError("solve_decomposition: supported for at most two ones");
  const Element<Rational> es = lift(divided_idempotent(source, eng), Rational(1));
  std::vector<Element<Rational>> et;
  for (const auto& t : targets) et.push_back(lift(divided_idempotent(t, eng), Rational(1)));

  struct Chosen {
    int target;
    int degree;
    Element<Rational> alpha;
    std::vector<Element<Rational>> beta_space;
  };
  std::vector<Chosen> chosen;
  res.multiplicities.assign(targets.size(), LaurentInt());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const TypedSequence tseq = targets[j].expand();
    const int lo = block_min_qdegree(tseq, sseq);
    const int hi = -block_min_qdegree(sseq, tseq);
    for (int delta = lo; delta <= hi; ++delta) {
      auto A = sandwich_basis(es, et[j], 0, delta, eng);
      if (A.empty()) continue;
      auto B = sandwich_basis(et[j], es, 0, -delta, eng);
      if (B.empty()) continue;
      std::vector<SparseVec<Rational>> cols(A.size());
      for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t a = 0; a < A.size(); ++a) {
          auto c = scalar_multiple_of(multiply(B[b], A[a], eng), et[j]);
          if (!c) {
            res.conclusive = false;
            res.message = "degree-0 part of e_t R e_t for target " + targets[j].str() + " is not one-dimensional";
            return res;
          }
          if (!is_zero(*c)) cols[a][static_cast<int>(b)] = *c;
        }
      auto piv = independent_indices(cols, Rational(1));
      if (piv.empty()) continue;
      res.multiplicities[j].add_term(source.shift() - targets[j].shift() - delta, static_cast<std::int64_t>(piv.size()));
      for (int a : piv) chosen.push_back({static_cast<int>(j), delta, A[a], B});
    }
  }

  // Unknowns: beta_a = sum_b y[a,b] * beta_space[b]; equations are coordinates of the required products.
  std::vector<std::pair<int, int>> var;  // (pair, basis index)
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = 0; b < chosen[a].beta_space.size(); ++b) var.push_back({static_cast<int>(a), static_cast<int>(b)});
  std::map<std::tuple<int, int, DiagramTerm>, int> eq_index;
  auto eq = [&](int g1, int g2, const DiagramTerm& t) {
    auto [it, _] = eq_index.try_emplace({g1, g2, t}, static_cast<int>(eq_index.size()));
    return it->second;
  };
  RowEchelon<Rational> ech(Rational(1));
  for (std::size_t v = 0; v < var.size(); ++v) {
    const auto [a, b] = var[v];
    const auto& beta = chosen[a].beta_space[b];
    SparseVec<Rational> col;
    for (std::size_t a2 = 0; a2 < chosen.size(); ++a2) {
      const auto p = multiply(beta, chosen[a2].alpha, eng);
      for (const auto& [t, c] : p.terms()) col[eq(a, static_cast<int>(a2), t)] += c;
    }
    const auto q = multiply(chosen[a].alpha, beta, eng);
    for (const auto& [t, c] : q.terms()) col[eq(-1, -1, t)] += c;
    std::erase_if(col, [](const auto& kv) { return is_zero(kv.second); });
    ech.insert(col, static_cast<int>(v));
  }
  SparseVec<Rational> rhs;
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (const auto& [t, c] : et[chosen[a].target].terms()) rhs[eq(static_cast<int>(a), static_cast<int>(a), t)] += c;
  for (const auto& [t, c] : es.terms()) rhs[eq(-1, -1, t)] += c;
  auto sol = ech.solve(rhs);
  if (!sol) {
    res.message = "no alpha/beta family solves the decomposition system for " + source.str();
    return res;
  }
  DecompositionCertificate cert;
  cert.source = source;
  cert.source_shift = source.shift();
  for (std::size_t j = 0; j < targets.size(); ++j) cert.targets.push_back({targets[j], targets[j].shift(), res.multiplicities[j]});
  cert.betas.assign(chosen.size(), Element<Rational>{});
  for (const auto& [v, y] : *sol) {
    const auto [a, b] = var[v];
    cert.betas[a] += chosen[a].beta_space[b].scaled(y);
  }
  for (const auto& c : chosen) {
    cert.alphas.push_back(c.alpha);
    cert.pair_target.push_back(c.target);
    cert.alpha_degree.push_back(c.degree);
  }
  std::string why;
  if (!verify_certificate(cert, &why, eng)) {
    res.message = "solved family failed replay: " + why;
    return res;
  }
  res.certificate = std::move(cert);
  res.message = "certified";
  return res;
}

/// Terminal idempotents 1^a 2^(m) 1^b, a + b = n, without duplicates.
inline std::vector<DividedPowerSequence> terminal_candidates(int n, int m) {
  std::vector<DividedPowerSequence> out;
  for (int a = 0; a <= n; ++a) {
    auto s = DividedPowerSequence::sandwich(a, m, n - a);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

struct K0RankReport {
  int n = 0, m = 0;
  int rank = 0;
  std::vector<std::string> surviving;    // non-contractible candidates
  std::vector<std::string> contractible;
  bool decompositions_ok = true;          // undivided sequences split into candidates (n <= 1)
  std::string message;
};

/// Number of non-contractible terminal candidates at weight (n, m), with decomposition checks for n <= 1
/// and contractibility of every idempotent for n >= 3.
inline K0RankReport k0_rank(int n, int m, Engine& eng = default_engine()) {
  K0RankReport rep{n, m, 0, {}, {}, true, ""};
  auto cands = terminal_candidates(n, m);
  for (const auto& c : cands) {
    auto y = find_contraction(divided_idempotent(c, eng));
    (y ? rep.contractible : rep.surviving).push_back(c.str());
  }
  rep.rank = static_cast<int>(rep.surviving.size());
  if (n <= 1) {
    std::vector<DividedPowerSequence> survivors;
    for (const auto& c : cands)
      if (std::find(rep.surviving.begin(), rep.surviving.end(), c.str()) != rep.surviving.end()) survivors.push_back(c);
    for (const auto& s : all_sequences(n, m)) {
      auto r = solve_decomposition(DividedPowerSequence::undivided(s), survivors, eng);
      if (!r.solved()) {
        rep.decompositions_ok = false;
        rep.message += "no decomposition for " + s.str() + "; ";
      }
    }
  } else if (n >= 3) {
    for (const auto& s : all_sequences(n, m))
      if (!find_contraction(idempotent(s))) {
        rep.decompositions_ok = false;
        rep.message += "1_" + s.str() + " not contractible; ";
      }
  }
  return rep;
}

/// The idempotent 1 (x) e_m (x) 1 on 1 2^m 1.
inline Element<Integer> r1_idempotent(int m, Engine& eng = default_engine()) {
  return divided_idempotent(DividedPowerSequence::sandwich(1, m, 1), eng);
}

/// Hilbert series of Sym(x_1..x_m)/(x_1...x_m), deg x = 2, up to qmax.
inline LaurentInt sym_quotient_series(int m, int qmax) {
  std::vector<std::int64_t> c(qmax + 1, 0);
  if (qmax >= 0) c[0] = 1;
  for (int i = 1; i < m; ++i)
    for (int q = 2 * i; q <= qmax; ++q) c[q] += c[q - 2 * i];
  LaurentInt out;
  for (int q = 0; q <= qmax; ++q) out.add_term(q, c[q]);
  return out;
}

/// Hilbert series of H(R_1), R_1 = e R(2,m) e for e = 1 (x) e_m (x) 1, over [qmin, qmax].
inline LaurentInt r1_homology_character(int m, int qmax, Differential& d = default_differential()) {
  if (m < 0) throw DomainError("r1_homology_character: negative m");
  Truncation tr(r1_idempotent(m, d.engine()), d);
  const TypedSequence seq = DividedPowerSequence::sandwich(1, m, 1).expand();
  const int qmin = block_min_qdegree(seq, seq);
  LaurentInt out;
  for (int q = qmin; q <= qmax; ++q)
    for (const auto& [c, dim] : tr.homology(q)) out.add_term(q, dim);
  return out;
}

/// X = e D e with D the crossing of the two fermionic strands past all bosonic ones.
inline Element<Integer> r1_generator_x(int m, Engine& eng = default_engine()) {
  const TypedSequence seq = DividedPowerSequence::sandwich(1, m, 1).expand();
  std::vector<int> im(m + 2);
  for (int j = 0; j < m + 2; ++j) im[j] = j;
  std::swap(im[0], im[m + 1]);
  DiagramTerm dterm{seq, Permutation(im), std::vector<int>(m, 0)};
  auto e = r1_idempotent(m, eng);
  return multiply(multiply(e, Element<Integer>::term(dterm, 1), eng), e, eng);
}

/// x_1 ... x_m * e in R_1.
inline Element<Integer> r1_dot_product(int m, Engine& eng = default_engine()) {
  GeneratorWord w = divided_word(DividedPowerSequence::sandwich(1, m, 1));
  for (int p = 2; p <= m + 1; ++p) w.tokens.push_back(GeneratorToken::dot(p));
  return eng.normal_form(w);
}

struct RelationCheck {
  std::string identity;
  bool passed = false;
  std::string detail;
};

/// Checks E_1^2 = 0, E_2^(k) E_2^(m-k) = [m choose k] E_2^(m) and
/// E_2^(k) E_1 E_2^(m-k) = [m-1 choose k] E_1 E_2^(m) + [m-1 choose k-1] E_2^(m) E_1 for m <= max_m.
inline std::vector<RelationCheck> verify_u_plus_relations(int max_m, Engine& eng = default_engine()) {
  std::vector<RelationCheck> out;
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; n + m <= 4; ++m)
      for (const auto& s : all_sequences(n, m)) {
        if (s.str().find("11") == std::string::npos) continue;
        bool ok = find_contraction(idempotent(s)).has_value();
        out.push_back({"E1^2=0: 1_" + s.str() + " contractible", ok, ok ? "d(y) = 1 solved" : "no contraction"});
      }
  for (int m = 2; m <= max_m; ++m)
    for (int k = 1; k < m; ++k) {
      std::vector<DividedPowerSequence::Item> items{{false, k}, {false, m - k}};
      DividedPowerSequence src(items);
      auto r = solve_decomposition(src, {DividedPowerSequence({{false, m}})}, eng);
      const LaurentInt expected = quantum_binomial(m, k);
      const bool ok = r.solved() && r.multiplicities[0] == expected;
      out.push_back({"E2^(" + std::to_string(k) + ")E2^(" + std::to_string(m - k) + ") = [" + std::to_string(m) + " choose " +
                         std::to_string(k) + "] E2^(" + std::to_string(m) + ")",
                     ok, r.solved() ? "multiplicity " + r.multiplicities[0].str() : r.message});
    }
  for (int m = 2; m <= max_m; ++m)
    for (int k = 1; k < m; ++k) {
      DividedPowerSequence src({{false, k}, {true, 1}, {false, m - k}});
      auto r = solve_decomposition(src, {DividedPowerSequence::sandwich(1, m, 0), DividedPowerSequence::sandwich(0, m, 1)}, eng);
      const LaurentInt s1 = quantum_binomial(m - 1, k), s2 = quantum_binomial(m - 1, k - 1);
      const bool ok = r.solved() && r.multiplicities[0] == s1 && r.multiplicities[1] == s2;
      out.push_back({"P_" + src.str() + " = (P_" + DividedPowerSequence::sandwich(1, m, 0).str() + ")^[" +
                         std::to_string(m - 1) + " choose " + std::to_string(k) + "] + (P_" +
                         DividedPowerSequence::sandwich(0, m, 1).str() + ")^[" + std::to_string(m - 1) + " choose " +
                         std::to_string(k - 1) + "]",
                     ok,
                     r.solved() ? "s' = " + r.multiplicities[0].str() + ", s'' = " + r.multiplicities[1].str()
                                : r.message});
    }
  return out;
}

}  // namespace glcat
