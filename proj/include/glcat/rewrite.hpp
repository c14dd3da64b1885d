#pragma once

#include "glcat/diagram.hpp"
#include "glcat/permutation.hpp"
#include "glcat/scalar.hpp"
#include "glcat/sequence.hpp"

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace glcat {

/// Coefficient C in  s_i s_{i+1} s_i - s_{i+1} s_i s_{i+1} = C * 1  on strands of types (2,1,2) at the bottom.
inline constexpr int kBraidCorrection = 1;

/// Normal-form engine over Z. Structure constants are integers, so every other coefficient
/// ring is reached by `lift`. All tables are memoized; public calls are serialized internally.
class Engine {
 public:
  using Comb = Element<Integer>;

  /// Canonical (lexicographically least) reduced word of w.
  ReducedWord canonical_word(const Permutation& w) {
    std::lock_guard lock(mutex_);
    return canon(w);
  }

  /// Tokens of a basis term along its canonical word.
  std::vector<GeneratorToken> tokens(const DiagramTerm& t) {
    std::lock_guard lock(mutex_);
    return term_tokens(t, canon(t.perm));
  }
  GeneratorWord word(const DiagramTerm& t) { return {t.source, tokens(t)}; }

  /// g stacked on top of t.
  Comb left_multiply(const GeneratorToken& g, const DiagramTerm& t) {
    std::lock_guard lock(mutex_);
    return left_mul(g, t);
  }
  Comb left_multiply(const GeneratorToken& g, const Comb& c) {
    std::lock_guard lock(mutex_);
    return left_mul(g, c);
  }

  Comb normal_form(const GeneratorWord& w) {
    std::lock_guard lock(mutex_);
    TypedSequence cur = w.source;
    Comb acc = Comb::term(DiagramTerm::identity(w.source), 1);
    for (const auto& g : w.tokens) {
      validate_token(cur, g);
      acc = left_mul(g, acc);
      cur = after_token(cur, g);
    }
    return acc;
  }

  /// a stacked on top of b; zero unless source(a) == target(b).
  Comb product(const DiagramTerm& a, const DiagramTerm& b) {
    std::lock_guard lock(mutex_);
    if (a.source.size() != b.source.size() || a.ones() != b.ones())
      throw DomainError("product: terms from different algebras R(n,m)");
    if (a.source != b.target()) return {};
    auto key = std::make_pair(a, b);
    if (auto it = product_memo_.find(key); it != product_memo_.end()) return it->second;
    Comb acc = Comb::term(b, 1);
    for (const auto& g : term_tokens(a, canon(a.perm))) acc = left_mul(g, acc);
    product_memo_.emplace(std::move(key), acc);
    return acc;
  }

  std::size_t cache_size() const {
    return product_memo_.size() + cross_memo_.size() + reduce_memo_.size() + front_memo_.size();
  }

 private:
  struct Front {
    Integer coeff;
    std::vector<int> word;  // starts with the requested letter
    Comb rest;
  };

  const ReducedWord& canon(const Permutation& w) {
    auto it = canon_memo_.find(w);
    if (it == canon_memo_.end()) it = canon_memo_.emplace(w, canonical_reduced_word(w)).first;
    return it->second;
  }

  static TypedSequence top_of(const TypedSequence& src, const std::vector<int>& letters) {
    return src.apply(evaluate_word(letters, src.size()));
  }

  static Comb with_dots_on_top(const Comb& c, const std::vector<int>& dots) {
    Comb r;
    for (const auto& [t, v] : c.terms()) {
      DiagramTerm u = t;
      for (std::size_t b = 0; b < dots.size(); ++b) u.dots[b] += dots[b];
      r.add(u, v);
    }
    return r;
  }

  Comb left_mul(const GeneratorToken& g, const Comb& c) {
    Comb r;
    for (const auto& [t, v] : c.terms()) r += left_mul(g, t).scaled(v);
    return r;
  }

  Comb left_mul(const GeneratorToken& g, const DiagramTerm& t) {
    const TypedSequence top = t.target();
    validate_token(top, g);
    if (g.is_dot()) {
      DiagramTerm u = t;
      ++u.dots[top.bosonic_index(g.position - 1)];
      return Comb::term(std::move(u), 1);
    }
    const int k = g.position;
    Comb base = cross_basis(t.source, t.perm, k);
    if (!(top[k - 1] == '2' && top[k] == '2')) return with_dots_on_top(base, t.dots);

    // s * x^f = x^{s f} * s + d(x^f) on two bosonic strands
    const int b = top.bosonic_index(k - 1);
    std::vector<int> f = t.dots;
    std::swap(f[b], f[b + 1]);
    Comb out = with_dots_on_top(base, f);
    const int p = t.dots[b], q = t.dots[b + 1];
    if (p != q) {
      const int lo = std::min(p, q), hi = std::max(p, q);
      const Integer sign = p > q ? 1 : -1;
      for (int i = 0; i < hi - lo; ++i) {
        DiagramTerm u = t;
        u.dots[b] = hi - 1 - i;
        u.dots[b + 1] = lo + i;
        out.add(u, sign);
      }
    }
    return out;
  }

  /// s_k stacked on the dot-free basis term (src, v).
  Comb cross_basis(const TypedSequence& src, const Permutation& v, int k) {
    auto key = std::make_tuple(src, v, k);
    if (auto it = cross_memo_.find(key); it != cross_memo_.end()) return it->second;
    Comb res;
    const auto& cv = canon(v).letters;
    if (!v.is_left_descent(k)) {
      std::vector<int> letters{k};
      letters.insert(letters.end(), cv.begin(), cv.end());
      res = reduce_word(src, letters);
    } else {
      Front fr = bring_to_front(src, cv, k);
      std::vector<int> r(fr.word.begin() + 1, fr.word.end());
      const TypedSequence top_r = top_of(src, r);
      if (top_r[k - 1] != top_r[k]) {
        const int p = top_r[k - 1] == '2' ? k : k + 1;
        res += left_mul(GeneratorToken::dot(p), reduce_word(src, r)).scaled(fr.coeff);
      }
      res += left_mul(GeneratorToken::crossing(k), fr.rest);
    }
    cross_memo_.emplace(std::move(key), res);
    return res;
  }

  /// Normal form of the reduced crossing word u on src.
  Comb reduce_word(const TypedSequence& src, const std::vector<int>& u) {
    auto key = std::make_pair(src, u);
    if (auto it = reduce_memo_.find(key); it != reduce_memo_.end()) return it->second;
    const int n = src.size();
    const Permutation w = evaluate_word(u, n);
    const auto& cw = canon(w).letters;
    Comb res;
    if (u == cw) {
      res = Comb::term(DiagramTerm{src, w, std::vector<int>(src.twos(), 0)}, 1);
    } else if (u.front() == cw.front()) {
      std::vector<int> tail(u.begin() + 1, u.end());
      res = left_mul(GeneratorToken::crossing(u.front()), reduce_word(src, tail));
    } else {
      Front fr = bring_to_front(src, u, cw.front());
      res = reduce_word(src, fr.word).scaled(fr.coeff) + fr.rest;
    }
    reduce_memo_.emplace(std::move(key), res);
    return res;
  }

  /// Rewrites the reduced word u (with left descent a) as coeff * (a, ...) + rest.
  Front bring_to_front(const TypedSequence& src, const std::vector<int>& u, int a) {
    auto key = std::make_tuple(src, u, a);
    if (auto it = front_memo_.find(key); it != front_memo_.end()) return it->second;
    Front out;
    const int t = u.front();
    if (t == a) {
      out = {1, u, {}};
    } else {
      std::vector<int> tail(u.begin() + 1, u.end());
      Front f1 = bring_to_front(src, tail, a);
      std::vector<int> r1(f1.word.begin() + 1, f1.word.end());
      if (std::abs(t - a) >= 2) {
        const TypedSequence top = top_of(src, r1);
        const bool both_odd = top[t - 1] == '1' && top[t] == '1' && top[a - 1] == '1' && top[a] == '1';
        out.coeff = both_odd ? f1.coeff * Integer(-1) : f1.coeff;
        out.word = {a, t};
        out.word.insert(out.word.end(), r1.begin(), r1.end());
        out.rest = left_mul(GeneratorToken::crossing(t), f1.rest);
      } else {
        Front f2 = bring_to_front(src, r1, t);
        std::vector<int> r2(f2.word.begin() + 1, f2.word.end());
        const int i = std::min(a, t);
        const TypedSequence top = top_of(src, r2);
        const bool special = top[i - 1] == '2' && top[i] == '1' && top[i + 1] == '2';
        out.coeff = f1.coeff * f2.coeff;
        out.word = {a, t, a};
        out.word.insert(out.word.end(), r2.begin(), r2.end());
        out.rest = left_mul(GeneratorToken::crossing(t), left_mul(GeneratorToken::crossing(a), f2.rest)).scaled(f1.coeff) +
                   left_mul(GeneratorToken::crossing(t), f1.rest);
        if (special) {
          const Integer c = t == i ? Integer(kBraidCorrection) : Integer(-kBraidCorrection);
          out.rest += reduce_word(src, r2).scaled(out.coeff * c);
        }
      }
    }
    front_memo_.emplace(std::move(key), out);
    return out;
  }

  std::recursive_mutex mutex_;
  std::map<Permutation, ReducedWord> canon_memo_;
  std::map<std::pair<DiagramTerm, DiagramTerm>, Comb> product_memo_;
  std::map<std::tuple<TypedSequence, Permutation, int>, Comb> cross_memo_;
  std::map<std::pair<TypedSequence, std::vector<int>>, Comb> reduce_memo_;
  std::map<std::tuple<TypedSequence, std::vector<int>, int>, Front> front_memo_;
};

/// Process-wide engine shared by the free functions below.
inline Engine& default_engine() {
  static Engine engine;
  return engine;
}

inline Element<Integer> normal_form(const GeneratorWord& w) { return default_engine().normal_form(w); }

template <class S>
Element<S> normal_form(const GeneratorWord& w, const S& unit) {
  return lift(default_engine().normal_form(w), unit);
}

/// Bilinear product a * b (a on top).
template <class S>
Element<S> multiply(const Element<S>& a, const Element<S>& b, Engine& eng = default_engine()) {
  auto aa = a.ambient(), ab = b.ambient();
  if (aa && ab && *aa != *ab) throw DomainError("multiply: elements live in different algebras R(n,m)");
  Element<S> r;
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      if (ta.source != tb.target()) continue;
      const S c = ca * cb;
      const auto prod = eng.product(ta, tb);
      for (const auto& [t, k] : prod.terms()) r.add(t, scale(c, k));
    }
  return r;
}

/// The generator word w (acting from above) applied to every term of e.
template <class S>
Element<S> apply_word_on_top(const std::vector<GeneratorToken>& tokens, const Element<S>& e,
                             Engine& eng = default_engine()) {
  Element<S> r;
  for (const auto& [t, c] : e.terms()) {
    Element<Integer> acc = Element<Integer>::term(t, 1);
    for (const auto& g : tokens) acc = eng.left_multiply(g, acc);
    for (const auto& [u, k] : acc.terms()) r.add(u, scale(c, k));
  }
  return r;
}

/// Signed LOT generator sigma_w = eps(w') * sigma_{w'} in R(n,0), for the canonical word w'.
inline Element<Integer> sigma_w(const Permutation& w) {
  auto word = canonical_reduced_word(w);
  TypedSequence src(std::string(w.size(), '1'));
  return Element<Integer>::term(DiagramTerm{src, w, {}}, epsilon_sign(word, w.size()));
}

/// sigma_{w'} for an arbitrary reduced word w' (product order, first letter on top), with its eps sign.
inline Element<Integer> sigma_of_word(const ReducedWord& word, int n) {
  TypedSequence src(std::string(n, '1'));
  GeneratorWord gw{src, {}};
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) gw.tokens.push_back(GeneratorToken::crossing(*it));
  return normal_form(gw).scaled(epsilon_sign(word, n));
}

/// One instance of a defining relation: sum of coefficient * word (bottom-to-top tokens) = 0.
struct RelationInstance {
  std::string name;
  TypedSequence source;
  std::vector<std::pair<Integer, std::vector<GeneratorToken>>> terms;
};

/// Every instance of the defining relations on one sequence.
inline std::vector<RelationInstance> defining_relations(const TypedSequence& seq,
                                                        int braid_correction = kBraidCorrection) {
  using G = GeneratorToken;
  std::vector<RelationInstance> out;
  const int N = seq.size();
  auto odd = [&](int k) { return seq[k - 1] == '1' && seq[k] == '1'; };
  auto label = [&](const std::string& kind, std::initializer_list<int> where) {
    std::string s = kind + "@" + seq.str();
    for (int w : where) s += ":" + std::to_string(w);
    return s;
  };
  for (int p = 1; p <= N; ++p)
    for (int q = p + 1; q <= N; ++q)
      if (seq.is_bosonic(p - 1) && seq.is_bosonic(q - 1))
        out.push_back({label("dots-commute", {p, q}), seq, {{1, {G::dot(p), G::dot(q)}}, {-1, {G::dot(q), G::dot(p)}}}});
  for (int k = 1; k < N; ++k) {
    for (int l = k + 2; l < N; ++l) {
      const Integer sign = odd(k) && odd(l) ? 1 : -1;
      out.push_back({label("far-crossings", {k, l}), seq,
                     {{1, {G::crossing(k), G::crossing(l)}}, {sign, {G::crossing(l), G::crossing(k)}}}});
    }
    for (int p = 1; p <= N; ++p)
      if (seq.is_bosonic(p - 1) && p != k && p != k + 1)
        out.push_back({label("far-dot", {p, k}), seq,
                       {{1, {G::dot(p), G::crossing(k)}}, {-1, {G::crossing(k), G::dot(p)}}}});
    const char L = seq[k - 1], R = seq[k];
    if (L != R) {
      const int p = L == '2' ? k : k + 1;
      const int p_after = L == '2' ? k + 1 : k;
      out.push_back({label("mixed-dot-slide", {k}), seq,
                     {{1, {G::dot(p), G::crossing(k)}}, {-1, {G::crossing(k), G::dot(p_after)}}}});
      out.push_back({label("mixed-square", {k}), seq, {{1, {G::crossing(k), G::crossing(k)}}, {-1, {G::dot(p)}}}});
    } else {
      out.push_back({label("square", {k}), seq, {{1, {G::crossing(k), G::crossing(k)}}}});
    }
    if (L == '2' && R == '2') {
      out.push_back({label("nilhecke-a", {k}), seq,
                     {{1, {G::crossing(k), G::dot(k)}}, {-1, {G::dot(k + 1), G::crossing(k)}}, {-1, {}}}});
      out.push_back({label("nilhecke-b", {k}), seq,
                     {{1, {G::dot(k), G::crossing(k)}}, {-1, {G::crossing(k), G::dot(k + 1)}}, {-1, {}}}});
    }
  }
  for (int k = 1; k + 1 < N; ++k) {
    RelationInstance r{label("braid", {k}), seq,
                       {{1, {G::crossing(k), G::crossing(k + 1), G::crossing(k)}},
                        {-1, {G::crossing(k + 1), G::crossing(k), G::crossing(k + 1)}}}};
    if (seq[k - 1] == '2' && seq[k] == '1' && seq[k + 1] == '2') r.terms.push_back({-braid_correction, {}});
    out.push_back(std::move(r));
  }
  return out;
}

/// Normal form of a relation instance (zero when the engine respects it).
inline Element<Integer> relation_defect(const RelationInstance& rel, Engine& eng = default_engine()) {
  Element<Integer> acc;
  for (const auto& [c, toks] : rel.terms) acc += eng.normal_form({rel.source, toks}).scaled(c);
  return acc;
}

/// Terms ordered by (target sequence, canonical word, dots).
template <class S>
std::vector<std::pair<DiagramTerm, S>> ordered_terms(const Element<S>& e, Engine& eng = default_engine()) {
  std::vector<std::pair<std::tuple<std::string, ReducedWord, std::string, std::vector<int>>, std::pair<DiagramTerm, S>>> keyed;
  for (const auto& [t, c] : e.terms())
    keyed.push_back({{t.target().str(), eng.canonical_word(t.perm), t.source.str(), t.dots}, {t, c}});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<DiagramTerm, S>> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

}  // namespace glcat
