#pragma once

#include "glcat/scalar.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace glcat {

/// Bijection of {0..N-1}. In diagram language the strand that starts at bottom
/// position j ends at top position w(j); composition (a * b)(j) = a(b(j)) stacks a above b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw DomainError("Permutation: images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im), Unchecked{});
  }
  /// Simple transposition s_i (1-based, swaps i-1 and i in 0-based terms).
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("Permutation::simple: index out of range");
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const {
    for (int j = 0; j < size(); ++j)
      if (images_[j] != j) return false;
    return true;
  }

  int length() const {
    int inv = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (images_[a] > images_[b]) ++inv;
    return inv;
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int j = 0; j < size(); ++j) im[images_[j]] = j;
    return Permutation(std::move(im), Unchecked{});
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("Permutation: size mismatch in composition");
    std::vector<int> im(b.images_.size());
    for (int j = 0; j < b.size(); ++j) im[j] = a.images_[b.images_[j]];
    return Permutation(std::move(im), Unchecked{});
  }

  /// s_i * this, computed without building s_i.
  Permutation left_times_simple(int i) const {
    Permutation r = *this;
    for (int& v : r.images_) {
      if (v == i - 1) v = i;
      else if (v == i) v = i - 1;
    }
    return r;
  }

  /// True when l(s_i w) < l(w): the strands ending at top positions i, i+1 already cross.
  bool is_left_descent(int i) const {
    int a = -1, b = -1;
    for (int j = 0; j < size(); ++j) {
      if (images_[j] == i - 1) a = j;
      if (images_[j] == i) b = j;
    }
    return a > b;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string str() const {
    std::string s = "[";
    for (int j = 0; j < size(); ++j) s += (j ? " " : "") + std::to_string(images_[j] + 1);
    return s + "]";
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> im, Unchecked) : images_(std::move(im)) {}

  std::vector<int> images_;
};

/// Sequence of simple-reflection indices (i_1, ..., i_r), read as the product
/// s_{i_1} ... s_{i_r}; i_1 is the topmost crossing of the diagram.
struct ReducedWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

inline Permutation evaluate_word(const std::vector<int>& letters, int n) {
  auto p = Permutation::identity(n);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (*it < 1 || *it >= n) throw DomainError("evaluate_word: letter out of range");
    p = p.left_times_simple(*it);
  }
  return p;
}

inline bool is_reduced(const std::vector<int>& letters, int n) {
  return evaluate_word(letters, n).length() == static_cast<int>(letters.size());
}

/// Lexicographically smallest reduced word: the first letter is the smallest left descent.
inline ReducedWord canonical_reduced_word(const Permutation& w) {
  ReducedWord r;
  Permutation cur = w;
  const int n = w.size();
  while (!cur.is_identity()) {
    for (int i = 1; i < n; ++i) {
      if (cur.is_left_descent(i)) {
        r.letters.push_back(i);
        cur = cur.left_times_simple(i);
        break;
      }
    }
  }
  return r;
}

/// All reduced words of w, in lexicographic order.
inline std::vector<ReducedWord> all_reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  std::vector<int> prefix;
  std::function<void(const Permutation&)> rec = [&](const Permutation& cur) {
    if (cur.is_identity()) {
      out.push_back(ReducedWord{prefix});
      return;
    }
    for (int i = 1; i < cur.size(); ++i) {
      if (!cur.is_left_descent(i)) continue;
      prefix.push_back(i);
      rec(cur.left_times_simple(i));
      prefix.pop_back();
    }
  };
  rec(w);
  return out;
}

/// Lists every permutation of {0..n-1} in lexicographic order of images.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// A crossing of a reduced-word diagram identified by the bottom positions of its two strands.
struct Inversion {
  int low;
  int high;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

/// Quadruple (j1, j2, k1, k2), 1-based, with (j1,j2) and (k1,k2) inversions on four distinct letters and j1 < k1.
struct DisjointInversionPair {
  std::array<int, 4> q;
  friend auto operator<=>(const DisjointInversionPair&, const DisjointInversionPair&) = default;
};

using InversionPairSet = std::set<DisjointInversionPair>;

inline std::vector<Inversion> inversions(const Permutation& w) {
  std::vector<Inversion> out;
  for (int a = 0; a < w.size(); ++a)
    for (int b = a + 1; b < w.size(); ++b)
      if (w(a) > w(b)) out.push_back({a, b});
  return out;
}

inline InversionPairSet pdi(const Permutation& w) {
  InversionPairSet out;
  auto inv = inversions(w);
  for (const auto& x : inv)
    for (const auto& y : inv) {
      if (x.low >= y.low) continue;
      if (x.low == y.high || x.high == y.low || x.high == y.high) continue;
      out.insert({{x.low + 1, x.high + 1, y.low + 1, y.high + 1}});
    }
  return out;
}

/// For each letter of the word (product order), the inversion it realizes.
inline std::vector<Inversion> crossing_labels(const std::vector<int>& letters, int n) {
  std::vector<int> at(n);  // at[pos] = bottom label of the strand currently at pos
  std::iota(at.begin(), at.end(), 0);
  std::vector<Inversion> labels(letters.size());
  for (std::size_t idx = letters.size(); idx-- > 0;) {
    int k = letters[idx];
    if (k < 1 || k >= n) throw DomainError("crossing_labels: letter out of range");
    int a = at[k - 1], b = at[k];
    labels[idx] = {std::min(a, b), std::max(a, b)};
    std::swap(at[k - 1], at[k]);
  }
  return labels;
}

/// Product over pairs of disjoint inversions of +1 when the (j1,j2)-crossing
/// lies to the right of (below) the (k1,k2)-crossing, -1 otherwise.
inline int epsilon_sign(const ReducedWord& word, int n) {
  if (!is_reduced(word.letters, n)) throw DomainError("epsilon_sign: word is not reduced");
  auto labels = crossing_labels(word.letters, n);
  int sign = 1;
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = 0; y < labels.size(); ++y) {
      const auto& jx = labels[x];
      const auto& ky = labels[y];
      if (jx.low >= ky.low) continue;
      if (jx.low == ky.high || jx.high == ky.low || jx.high == ky.high) continue;
      if (x < y) sign = -sign;  // (j1,j2) generator is to the left
    }
  return sign;
}

}  // namespace glcat
