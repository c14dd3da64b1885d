#pragma once

#include "glcat/diagram.hpp"
#include "glcat/linalg.hpp"
#include "glcat/permutation.hpp"
#include "glcat/rewrite.hpp"
#include "glcat/scalar.hpp"
#include "glcat/sequence.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace glcat {

/// Polynomial in the bosonic variables x_1..x_m of a block, keyed by exponent vector.
template <class S>
class Polynomial {
 public:
  using Map = std::map<std::vector<int>, S>;

  Polynomial() = default;
  static Polynomial monomial(std::vector<int> exps, S c) {
    Polynomial p;
    p.add(std::move(exps), std::move(c));
    return p;
  }

  void add(const std::vector<int>& e, const S& c) {
    if (glcat::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (glcat::is_zero(it->second)) terms_.erase(it);
    }
  }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  Polynomial scaled(const S& c) const {
    Polynomial r;
    for (const auto& [e, v] : terms_) r.add(e, v * c);
    return r;
  }
  Polynomial negated() const {
    Polynomial r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, -v);
    return r;
  }
  Polynomial times_variable(int b) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      auto u = e;
      ++u[b];
      r.terms_.emplace(std::move(u), c);
    }
    return r;
  }
  /// (f - s_b f) / (x_b - x_{b+1}).
  Polynomial divided_difference(int b) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
      const int p = e[b], q = e[b + 1];
      if (p == q) continue;
      const int lo = std::min(p, q), hi = std::max(p, q);
      const S sc = p > q ? c : -c;
      for (int i = 0; i < hi - lo; ++i) {
        auto u = e;
        u[b] = hi - 1 - i;
        u[b + 1] = lo + i;
        r.add(u, sc);
      }
    }
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// Block Pol(seq, w), w a permutation of the fermionic strands.
struct PolBlockKey {
  TypedSequence seq;
  Permutation w;
  friend auto operator<=>(const PolBlockKey&, const PolBlockKey&) = default;
  friend bool operator==(const PolBlockKey&, const PolBlockKey&) = default;
};

template <class S>
class PolVector {
 public:
  using Map = std::map<PolBlockKey, Polynomial<S>>;

  static PolVector single(PolBlockKey key, Polynomial<S> f) {
    PolVector v;
    v.add(std::move(key), f);
    return v;
  }
  void add(const PolBlockKey& key, const Polynomial<S>& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = blocks_.try_emplace(key, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) blocks_.erase(it);
    }
  }
  const Map& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }
  PolVector& operator+=(const PolVector& o) {
    for (const auto& [k, f] : o.blocks_) add(k, f);
    return *this;
  }
  PolVector scaled(const S& c) const {
    PolVector r;
    for (const auto& [k, f] : blocks_) r.add(k, f.scaled(c));
    return r;
  }
  friend bool operator==(const PolVector& a, const PolVector& b) { return a.blocks_ == b.blocks_; }

 private:
  Map blocks_;
};

/// Sign eps^i_w with sigma_{s_i w} = eps^i_w sigma_i sigma_w (defined when l(s_i w) = l(w) + 1).
inline int epsilon_step(const Permutation& w, int i) {
  auto c = canonical_reduced_word(w);
  ReducedWord up{{i}};
  up.letters.insert(up.letters.end(), c.letters.begin(), c.letters.end());
  return epsilon_sign(c, w.size()) * epsilon_sign(up, w.size());
}

/// Which mixed crossing multiplies by the transported variable.
enum class MixedRule { Standard, Interchanged };

/// Action of one generator; blocks whose sequence differs from `seq` are sent to 0.
template <class S>
PolVector<S> act_generator(const TypedSequence& seq, const GeneratorToken& g, const PolVector<S>& v,
                           MixedRule rule = MixedRule::Standard) {
  validate_token(seq, g);
  PolVector<S> out;
  const TypedSequence after = after_token(seq, g);
  for (const auto& [key, f] : v.blocks()) {
    if (key.seq != seq) continue;
    if (g.is_dot()) {
      out.add(key, f.times_variable(seq.bosonic_index(g.position - 1)));
      continue;
    }
    const int k = g.position;
    const char L = seq[k - 1], R = seq[k];
    if (L == '2' && R == '2') {
      out.add(key, f.divided_difference(seq.bosonic_index(k - 1)));
    } else if (L == '1' && R == '1') {
      const int i = seq.fermionic_index(k - 1) + 1;
      if (key.w.is_left_descent(i)) continue;
      const int eps = epsilon_step(key.w, i);
      out.add({after, key.w.left_times_simple(i)}, eps == 1 ? f : f.negated());
    } else {
      const int b = seq.bosonic_index(L == '2' ? k - 1 : k);
      const bool multiply = (L == '2') == (rule == MixedRule::Standard);
      out.add({after, key.w}, multiply ? f.times_variable(b) : f);
    }
  }
  return out;
}

template <class S>
PolVector<S> act_word(const GeneratorWord& word, const PolVector<S>& v, MixedRule rule = MixedRule::Standard) {
  PolVector<S> cur;
  for (const auto& [key, f] : v.blocks())
    if (key.seq == word.source) cur.add(key, f);
  TypedSequence seq = word.source;
  for (const auto& g : word.tokens) {
    cur = act_generator(seq, g, cur, rule);
    seq = after_token(seq, g);
  }
  return cur;
}

template <class S>
PolVector<S> act_term(const DiagramTerm& t, const PolVector<S>& v, Engine& eng = default_engine()) {
  return act_word(eng.word(t), v);
}

template <class S>
PolVector<S> act_element(const Element<S>& e, const PolVector<S>& v, Engine& eng = default_engine()) {
  e.ambient();
  PolVector<S> out;
  for (const auto& [t, c] : e.terms()) out += act_term(t, v, eng).scaled(c);
  return out;
}

/// Basis vectors (block, monomial) of Pol over the sequences `seqs`, monomial degree <= max_degree.
template <class S>
std::vector<PolVector<S>> pol_test_vectors(const std::vector<TypedSequence>& seqs, int max_degree, const S& unit) {
  std::vector<PolVector<S>> out;
  for (const auto& seq : seqs)
    for (const auto& w : all_permutations(seq.ones()))
      for (int d = 0; d <= max_degree; ++d)
        for (auto& e : monomials_of_degree(seq.twos(), d))
          out.push_back(PolVector<S>::single({seq, w}, Polynomial<S>::monomial(e, unit)));
  return out;
}

struct FaithfulnessReport {
  int n = 0, m = 0, qdeg_cutoff = 0, poly_degree = 0;
  std::size_t terms = 0;
  std::size_t rank = 0;
  bool conclusive = false;  // rank == terms
};

/// Certifies linear independence of the Pol operators of all basis terms with q-degree <= qdeg_cutoff,
/// block by block, on test polynomials of degree <= poly_degree. Rank is computed mod a large prime,
/// which bounds the rational rank from below.
inline FaithfulnessReport faithfulness_check(int n, int m, int qdeg_cutoff, int poly_degree = 6,
                                             Engine& eng = default_engine()) {
  if (n < 0 || m < 0) throw DomainError("faithfulness_check: negative weight");
  constexpr std::int64_t kPrime = 1000000007;
  const Fp unit(1, kPrime);
  FaithfulnessReport rep{n, m, qdeg_cutoff, poly_degree, 0, 0, false};
  auto seqs = all_sequences(n, m);
  for (const auto& src : seqs)
    for (const auto& tgt : seqs) {
      auto basis = enumerate_basis(src, tgt, qdeg_cutoff);
      if (basis.empty()) continue;
      rep.terms += basis.size();
      std::vector<GeneratorWord> words;
      for (const auto& t : basis) words.push_back(eng.word(t));
      std::vector<SparseVec<Fp>> rows(basis.size());
      std::map<std::tuple<std::size_t, PolBlockKey, std::vector<int>>, int> coord;
      std::size_t rank = 0, used = 0;
      auto tests = pol_test_vectors<Fp>({src}, poly_degree, unit);
      for (const auto& v : tests) {
        ++used;
        for (std::size_t j = 0; j < basis.size(); ++j) {
          auto img = act_word(words[j], v);
          for (const auto& [key, f] : img.blocks())
            for (const auto& [e, c] : f.terms()) {
              auto [it, _] = coord.try_emplace({used, key, e}, static_cast<int>(coord.size()));
              rows[j][it->second] = c;
            }
        }
        if ((used & (used - 1)) != 0 && used != tests.size()) continue;
        rank = rank_of(rows, unit);
        if (rank == basis.size()) break;
      }
      rep.rank += rank;
    }
  rep.conclusive = rep.rank == rep.terms;
  return rep;
}

}  // namespace glcat
