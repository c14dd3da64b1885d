#pragma once

#include "glcat/permutation.hpp"
#include "glcat/scalar.hpp"
#include "glcat/sequence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glcat {

/// Normal-form basis diagram: the canonical reduced word of `perm` drawn on `source`,
/// followed by dots at the top of the bosonic strands. `dots[b]` is the exponent on the
/// b-th bosonic strand (left to right) at the top boundary.
struct DiagramTerm {
  TypedSequence source;
  Permutation perm;
  std::vector<int> dots;

  static DiagramTerm identity(const TypedSequence& seq) {
    return {seq, Permutation::identity(seq.size()), std::vector<int>(seq.twos(), 0)};
  }

  TypedSequence target() const { return source.apply(perm); }
  int ones() const { return source.ones(); }
  int twos() const { return source.twos(); }
  int dot_degree() const {
    int s = 0;
    for (int d : dots) s += d;
    return s;
  }

  /// Sum of generator bidegrees; depends on the permutation only through its inversions.
  BiDegree bidegree() const {
    BiDegree deg{0, 2 * dot_degree()};
    for (const auto& inv : inversions(perm)) deg += crossing_bidegree(source[inv.low], source[inv.high]);
    return deg;
  }

  friend auto operator<=>(const DiagramTerm&, const DiagramTerm&) = default;
  friend bool operator==(const DiagramTerm&, const DiagramTerm&) = default;
};

struct DiagramTermHash {
  std::size_t operator()(const DiagramTerm& t) const {
    std::size_t h = std::hash<std::string>{}(t.source.str());
    for (int v : t.perm.images()) h = h * 131 + static_cast<std::size_t>(v);
    for (int v : t.dots) h = h * 1000003 + static_cast<std::size_t>(v);
    return h;
  }
};

/// Generators applied bottom-to-top, starting on `source`.
struct GeneratorWord {
  TypedSequence source;
  std::vector<GeneratorToken> tokens;

  /// Sequence at the top; throws DomainError on an invalid token.
  TypedSequence target() const {
    TypedSequence cur = source;
    for (const auto& g : tokens) cur = after_token(cur, g);
    return cur;
  }
  /// Concatenation: `above` stacked on top of this word.
  GeneratorWord then(const GeneratorWord& above) const {
    GeneratorWord w = *this;
    w.tokens.insert(w.tokens.end(), above.tokens.begin(), above.tokens.end());
    return w;
  }
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Tokens realizing a basis term: crossings of a reduced word bottom-to-top, then the dots.
inline std::vector<GeneratorToken> term_tokens(const DiagramTerm& t, const ReducedWord& word) {
  std::vector<GeneratorToken> out;
  out.reserve(word.size() + t.dot_degree());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out.push_back(GeneratorToken::crossing(*it));
  auto top = t.target();
  for (int b = 0; b < static_cast<int>(t.dots.size()); ++b)
    for (int e = 0; e < t.dots[b]; ++e) out.push_back(GeneratorToken::dot(top.position_of_bosonic(b) + 1));
  return out;
}

inline GeneratorWord term_word(const DiagramTerm& t) {
  return {t.source, term_tokens(t, canonical_reduced_word(t.perm))};
}

/// Finite linear combination of basis diagrams with coefficients in S.
template <class S>
class Element {
 public:
  using Map = std::map<DiagramTerm, S>;
  using scalar_type = S;

  Element() = default;
  static Element term(DiagramTerm t, S c) {
    Element e;
    e.add(std::move(t), std::move(c));
    return e;
  }

  void add(const DiagramTerm& t, const S& c) {
    if (glcat::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (glcat::is_zero(it->second)) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  S coeff(const DiagramTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? S{} : it->second;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const {
    Element r;
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
  }
  /// Multiplies every coefficient by c (coefficients of type S).
  Element scaled(const S& c) const {
    Element r;
    for (const auto& [t, v] : terms_) r.add(t, v * c);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Common bidegree, or nullopt for zero / inhomogeneous elements.
  std::optional<BiDegree> homogeneous_degree() const {
    std::optional<BiDegree> d;
    for (const auto& [t, c] : terms_) {
      auto td = t.bidegree();
      if (d && *d != td) return std::nullopt;
      d = td;
    }
    return d;
  }
  /// (n, m) shared by all terms; throws on mixed ambient algebras.
  std::optional<std::pair<int, int>> ambient() const {
    std::optional<std::pair<int, int>> a;
    for (const auto& [t, c] : terms_) {
      std::pair<int, int> ta{t.ones(), t.twos()};
      if (a && *a != ta) throw DomainError("Element: terms from different algebras R(n,m)");
      a = ta;
    }
    return a;
  }

 private:
  Map terms_;
};

/// Converts an integral combination to coefficients in S by scaling the unit of S.
template <class S>
Element<S> lift(const Element<Integer>& e, const S& unit) {
  Element<S> r;
  for (const auto& [t, c] : e.terms()) r.add(t, scale(unit, c));
  return r;
}

template <class S = Integer>
Element<S> idempotent(const TypedSequence& seq, const S& unit = S(1)) {
  return Element<S>::term(DiagramTerm::identity(seq), unit);
}

/// Permutations w with source.apply(w) == target, sorted by image vector.
inline std::vector<Permutation> block_permutations(const TypedSequence& source, const TypedSequence& target) {
  if (source.size() != target.size() || source.ones() != target.ones())
    throw DomainError("block_permutations: sequences " + source.str() + " and " + target.str() +
                      " have different type counts");
  std::vector<int> src1, src2, tgt1, tgt2;
  for (int p = 0; p < source.size(); ++p) (source.is_fermionic(p) ? src1 : src2).push_back(p);
  for (int p = 0; p < target.size(); ++p) (target.is_fermionic(p) ? tgt1 : tgt2).push_back(p);
  std::vector<Permutation> out;
  std::vector<int> a = tgt1;
  do {
    std::vector<int> b = tgt2;
    do {
      std::vector<int> im(source.size());
      for (std::size_t i = 0; i < src1.size(); ++i) im[src1[i]] = a[i];
      for (std::size_t i = 0; i < src2.size(); ++i) im[src2[i]] = b[i];
      out.emplace_back(std::move(im));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Exponent vectors of length `vars` and total degree exactly `degree`, lexicographically descending.
inline std::vector<std::vector<int>> monomials_of_degree(int vars, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  std::vector<int> cur(vars, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == vars - 1 || vars == 0) {
      if (vars == 0) {
        if (left == 0) out.push_back(cur);
        return;
      }
      cur[idx] = left;
      out.push_back(cur);
      cur[idx] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[idx] = e;
      rec(idx + 1, left - e);
    }
    cur[idx] = 0;
  };
  rec(0, degree);
  return out;
}

/// Dot-free q-degree of the block term with permutation w.
inline int permutation_qdegree(const TypedSequence& source, const Permutation& w) {
  int q = 0;
  for (const auto& inv : inversions(w)) q += crossing_bidegree(source[inv.low], source[inv.high]).q;
  return q;
}

/// Basis terms of the block source -> target in q-degree exactly `qdeg`.
inline std::vector<DiagramTerm> enumerate_basis_in_degree(const TypedSequence& source, const TypedSequence& target,
                                                          int qdeg) {
  std::vector<DiagramTerm> out;
  for (const auto& w : block_permutations(source, target)) {
    int rest = qdeg - permutation_qdegree(source, w);
    if (rest < 0 || rest % 2 != 0) continue;
    for (auto& d : monomials_of_degree(source.twos(), rest / 2)) out.push_back({source, w, std::move(d)});
  }
  return out;
}

/// Basis terms of the block with q-degree <= max_qdeg, ordered by canonical word, then dots.
inline std::vector<DiagramTerm> enumerate_basis(const TypedSequence& source, const TypedSequence& target,
                                                int max_qdeg) {
  std::vector<std::pair<std::pair<ReducedWord, std::vector<int>>, DiagramTerm>> keyed;
  for (const auto& w : block_permutations(source, target)) {
    int rest = max_qdeg - permutation_qdegree(source, w);
    if (rest < 0) continue;
    auto word = canonical_reduced_word(w);
    for (int deg = 0; 2 * deg <= rest; ++deg)
      for (auto& d : monomials_of_degree(source.twos(), deg)) keyed.push_back({{word, d}, DiagramTerm{source, w, d}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<DiagramTerm> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

/// Minimum q-degree of the block (attained by a dot-free term).
inline int block_min_qdegree(const TypedSequence& source, const TypedSequence& target) {
  int best = 1 << 20;
  for (const auto& w : block_permutations(source, target)) best = std::min(best, permutation_qdegree(source, w));
  return best;
}

}  // namespace glcat
