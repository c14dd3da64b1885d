#pragma once

#include "glcat/diagram.hpp"
#include "glcat/linalg.hpp"
#include "glcat/rewrite.hpp"
#include "glcat/scalar.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace glcat {

/// Differential on basis terms: the signed sum over odd crossings of the term with
/// that crossing resolved. Memoized per term.
class Differential {
 public:
  explicit Differential(Engine& eng = default_engine()) : eng_(eng) {}

  Element<Integer> operator()(const DiagramTerm& t) {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    const auto word = eng_.canonical_word(t.perm).letters;
    const auto labels = crossing_labels(word, t.source.size());
    const auto top = t.target();
    Element<Integer> out;
    int odd_above = 0;
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (!(t.source.is_fermionic(labels[j].low) && t.source.is_fermionic(labels[j].high))) continue;
      GeneratorWord gw{t.source, {}};
      for (std::size_t i = word.size(); i-- > 0;)
        if (i != j) gw.tokens.push_back(GeneratorToken::crossing(word[i]));
      for (int b = 0; b < static_cast<int>(t.dots.size()); ++b)
        for (int e = 0; e < t.dots[b]; ++e) gw.tokens.push_back(GeneratorToken::dot(top.position_of_bosonic(b) + 1));
      out += eng_.normal_form(gw).scaled(odd_above % 2 == 0 ? 1 : -1);
      ++odd_above;
    }
    memo_.emplace(t, out);
    return out;
  }

  template <class S>
  Element<S> operator()(const Element<S>& e) {
    Element<S> out;
    for (const auto& [t, c] : e.terms()) {
      const auto dt = (*this)(t);
      for (const auto& [u, k] : dt.terms()) out.add(u, scale(c, k));
    }
    return out;
  }

  Engine& engine() { return eng_; }

 private:
  Engine& eng_;
  std::recursive_mutex mutex_;
  std::map<DiagramTerm, Element<Integer>> memo_;
};

inline Differential& default_differential() {
  static Differential d;
  return d;
}

template <class S>
Element<S> differential(const Element<S>& e) {
  return default_differential()(e);
}

/// Assigns dense column indices to basis terms.
class TermIndex {
 public:
  int operator()(const DiagramTerm& t) {
    auto [it, inserted] = index_.try_emplace(t, static_cast<int>(terms_.size()));
    if (inserted) terms_.push_back(t);
    return it->second;
  }
  const DiagramTerm& term(int i) const { return terms_[i]; }

  template <class S>
  SparseVec<S> vec(const Element<S>& e) {
    SparseVec<S> v;
    for (const auto& [t, c] : e.terms()) v.emplace((*this)(t), c);
    return v;
  }
  template <class S>
  Element<S> element(const SparseVec<S>& v) const {
    Element<S> e;
    for (const auto& [i, c] : v) e.add(terms_[i], c);
    return e;
  }

 private:
  std::map<DiagramTerm, int> index_;
  std::vector<DiagramTerm> terms_;
};

/// Basis terms of a block in q-degree qdeg, grouped by cohomological degree.
inline std::map<int, std::vector<DiagramTerm>> block_spaces(const TypedSequence& source, const TypedSequence& target,
                                                            int qdeg) {
  std::map<int, std::vector<DiagramTerm>> out;
  for (auto& t : enumerate_basis_in_degree(source, target, qdeg)) out[t.bidegree().coh].push_back(std::move(t));
  return out;
}

/// dim H^c of a complex given by bases of C^c and a map computing d on each basis vector.
template <class Space, class DMap>
std::map<int, int> homology_from_spaces(const std::map<int, Space>& spaces, DMap&& d_rank) {
  std::map<int, int> rank_d, out;
  for (const auto& [c, sp] : spaces) rank_d[c] = d_rank(c, sp);
  for (const auto& [c, sp] : spaces) {
    const int dim = static_cast<int>(sp.size());
    const int incoming = rank_d.count(c - 1) ? rank_d[c - 1] : 0;
    out[c] = dim - rank_d[c] - incoming;
  }
  return out;
}

/// Exact homology dimensions of the block complex over Q; keys are cohomological degrees.
inline std::map<int, int> homology_dim(const TypedSequence& source, const TypedSequence& target, int qdeg,
                                       Differential& d = default_differential()) {
  const auto spaces = block_spaces(source, target, qdeg);
  TermIndex idx;
  auto rank_of_d = [&](int, const std::vector<DiagramTerm>& sp) {
    std::vector<SparseVec<Rational>> rows;
    for (const auto& t : sp) rows.push_back(idx.vec(lift(d(t), Rational(1))));
    return static_cast<int>(rank_of(rows, Rational(1)));
  };
  return homology_from_spaces(spaces, rank_of_d);
}

/// Torsion of the integral homology H^c: nonunit invariant factors of d: C^{c-1} -> C^c.
inline std::vector<BigInt> homology_torsion(const TypedSequence& source, const TypedSequence& target, int qdeg, int coh,
                                            Differential& d = default_differential()) {
  const auto spaces = block_spaces(source, target, qdeg);
  auto it = spaces.find(coh - 1);
  if (it == spaces.end()) return {};
  TermIndex idx;
  std::vector<SparseVec<Integer>> rows;
  for (const auto& t : it->second) rows.push_back(idx.vec(d(t)));
  int cols = 0;
  for (const auto& r : rows)
    for (const auto& [k, x] : r) cols = std::max(cols, k + 1);
  return smith_invariant_factors(rows, cols);
}

/// y with d(y) = target, searched in the (-1, 0) slice of the blocks carrying target.
inline std::optional<Element<Rational>> find_contraction(const Element<Rational>& target,
                                                         Differential& d = default_differential()) {
  if (target.is_zero()) return Element<Rational>{};
  std::set<std::pair<TypedSequence, TypedSequence>> blocks;
  for (const auto& [t, c] : target.terms()) {
    if (t.bidegree() != BiDegree{0, 0}) throw DomainError("find_contraction: target is not of bidegree (0,0)");
    blocks.insert({t.source, t.target()});
  }
  TermIndex idx;
  RowEchelon<Rational> ech(Rational(1));
  std::vector<DiagramTerm> cands;
  for (const auto& [s, t] : blocks) {
    auto sp = block_spaces(s, t, 0);
    auto it = sp.find(-1);
    if (it == sp.end()) continue;
    for (const auto& y : it->second) {
      ech.insert(idx.vec(lift(d(y), Rational(1))), static_cast<int>(cands.size()));
      cands.push_back(y);
    }
  }
  auto sol = ech.solve(idx.vec(target));
  if (!sol) return std::nullopt;
  Element<Rational> y;
  for (const auto& [j, c] : *sol) y.add(cands[j], c);
  return y;
}

inline std::optional<Element<Rational>> find_contraction(const Element<Integer>& target,
                                                         Differential& d = default_differential()) {
  return find_contraction(lift(target, Rational(1)), d);
}

/// Unit of R(n,m): sum of all idempotents 1_i.
inline Element<Integer> unit_element(int n, int m) {
  Element<Integer> e;
  for (const auto& s : all_sequences(n, m)) e.add(DiagramTerm::identity(s), 1);
  return e;
}

/// Basis of left * R * right in bidegree (coh, qdeg), for homogeneous left and right of bidegree (0,0).
inline std::vector<Element<Rational>> sandwich_basis(const Element<Rational>& left, const Element<Rational>& right, int coh,
                                                     int qdeg, Engine& eng = default_engine()) {
  std::set<TypedSequence> bottoms, tops;
  for (const auto& [t, c] : right.terms()) bottoms.insert(t.target());
  for (const auto& [t, c] : left.terms()) tops.insert(t.source);
  TermIndex idx;
  RowEchelon<Rational> ech(Rational(1));
  std::vector<Element<Rational>> out;
  for (const auto& b : bottoms)
    for (const auto& t : tops) {
      if (b.ones() != t.ones() || b.size() != t.size()) continue;
      auto sp = block_spaces(b, t, qdeg);
      auto it = sp.find(coh);
      if (it == sp.end()) continue;
      for (const auto& x : it->second) {
        auto v = multiply(multiply(left, Element<Rational>::term(x, Rational(1)), eng), right, eng);
        if (ech.insert(idx.vec(v), static_cast<int>(out.size()))) out.push_back(std::move(v));
      }
    }
  return out;
}

/// The sub-dg-ring eRe for an idempotent e of bidegree (0,0) with d(e) = 0.
class Truncation {
 public:
  explicit Truncation(Element<Integer> e, Differential& d = default_differential())
      : e_(lift(e, Rational(1))), d_(d), eng_(d.engine()) {
    if (e.is_zero()) throw DomainError("Truncation: zero idempotent");
    auto amb = e.ambient();
    n_ = amb->first;
    m_ = amb->second;
    for (const auto& [t, c] : e.terms())
      if (t.bidegree() != BiDegree{0, 0}) throw DomainError("Truncation: idempotent must have bidegree (0,0)");
    if (!(multiply(e_, e_, eng_) == e_)) throw DomainError("Truncation: element is not idempotent");
    if (!d_(e_).is_zero()) throw DomainError("Truncation: idempotent is not closed");
    for (const auto& [t, c] : e.terms()) {
      sources_.insert(t.source);
      sources_.insert(t.target());
    }
  }

  const Element<Rational>& idempotent() const { return e_; }

  Element<Rational> sandwich(const Element<Rational>& x) const {
    return multiply(multiply(e_, x, eng_), e_, eng_);
  }

  /// Basis of eRe in bidegree (coh, qdeg).
  std::vector<Element<Rational>> basis(int coh, int qdeg) { return sandwich_basis(e_, e_, coh, qdeg, eng_); }

  Element<Rational> multiply_in(const Element<Rational>& a, const Element<Rational>& b) const {
    return multiply(a, b, eng_);
  }
  Element<Rational> differential(const Element<Rational>& a) { return d_(a); }

  /// dim H^c(eRe) in one q-degree, keyed by cohomological degree.
  std::map<int, int> homology(int qdeg) {
    std::map<int, std::vector<Element<Rational>>> spaces;
    for (int c = -n_ * (n_ - 1) / 2; c <= 0; ++c) {
      auto b = basis(c, qdeg);
      if (!b.empty()) spaces[c] = std::move(b);
    }
    TermIndex idx;
    auto rank_of_d = [&](int, const std::vector<Element<Rational>>& sp) {
      std::vector<SparseVec<Rational>> rows;
      for (const auto& v : sp) rows.push_back(idx.vec(d_(v)));
      return static_cast<int>(rank_of(rows, Rational(1)));
    };
    return homology_from_spaces(spaces, rank_of_d);
  }

  int n() const { return n_; }
  int m() const { return m_; }

 private:
  Element<Rational> e_;
  Differential& d_;
  Engine& eng_;
  int n_ = 0, m_ = 0;
  std::set<TypedSequence> sources_;
};

}  // namespace glcat
