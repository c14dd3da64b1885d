#pragma once

#include "glcat/permutation.hpp"
#include "glcat/scalar.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>

namespace glcat {

/// Word over {1,2}: '1' marks a fermionic (odd, dotless) strand, '2' a bosonic one.
class TypedSequence {
 public:
  TypedSequence() = default;
  explicit TypedSequence(std::string_view letters) : letters_(letters) {
    for (char c : letters_)
      if (c != '1' && c != '2') throw DomainError("TypedSequence: letters must be '1' or '2', got '" + letters_ + "'");
  }
  static TypedSequence of(int ones, int twos, bool ones_first = true) {
    std::string s = ones_first ? std::string(ones, '1') + std::string(twos, '2')
                               : std::string(twos, '2') + std::string(ones, '1');
    return TypedSequence(s);
  }

  const std::string& str() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  char operator[](int pos) const { return letters_[pos]; }  // 0-based
  bool is_bosonic(int pos) const { return letters_[pos] == '2'; }
  bool is_fermionic(int pos) const { return letters_[pos] == '1'; }

  int ones() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), '1')); }
  int twos() const { return size() - ones(); }

  /// Number of bosonic strands strictly left of `pos` (0-based).
  int bosonic_index(int pos) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.begin() + pos, '2'));
  }
  int fermionic_index(int pos) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.begin() + pos, '1'));
  }
  /// 0-based position of the b-th bosonic strand.
  int position_of_bosonic(int b) const {
    for (int p = 0; p < size(); ++p)
      if (letters_[p] == '2' && b-- == 0) return p;
    throw DomainError("TypedSequence: bosonic index out of range");
  }

  /// Sequence at the top of a diagram with permutation w: top[w(j)] = bottom[j].
  TypedSequence apply(const Permutation& w) const {
    if (w.size() != size()) throw DomainError("TypedSequence::apply: size mismatch");
    std::string top(letters_.size(), '?');
    for (int j = 0; j < size(); ++j) top[w(j)] = letters_[j];
    return TypedSequence(top, Unchecked{});
  }
  TypedSequence swapped(int k) const {  // swap 1-based positions k, k+1
    std::string s = letters_;
    std::swap(s[k - 1], s[k]);
    return TypedSequence(s, Unchecked{});
  }
  TypedSequence operator+(const TypedSequence& o) const { return TypedSequence(letters_ + o.letters_, Unchecked{}); }

  friend auto operator<=>(const TypedSequence&, const TypedSequence&) = default;
  friend bool operator==(const TypedSequence&, const TypedSequence&) = default;

 private:
  struct Unchecked {};
  TypedSequence(std::string s, Unchecked) : letters_(std::move(s)) {}
  std::string letters_;
};

/// All sequences with the given numbers of ones and twos, lexicographically.
inline std::vector<TypedSequence> all_sequences(int ones, int twos) {
  std::string s = std::string(ones, '1') + std::string(twos, '2');
  std::vector<TypedSequence> out;
  do {
    out.emplace_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

/// A single generator placed at some height: a dot on strand `position`, or a crossing of
/// strands `position`, `position + 1`. Positions are 1-based.
struct GeneratorToken {
  enum class Kind { Dot, Crossing };
  Kind kind;
  int position;

  static GeneratorToken dot(int p) { return {Kind::Dot, p}; }
  static GeneratorToken crossing(int k) { return {Kind::Crossing, k}; }
  bool is_dot() const { return kind == Kind::Dot; }
  bool is_crossing() const { return kind == Kind::Crossing; }
  std::string str() const { return (is_dot() ? "x" : "s") + std::to_string(position); }

  friend auto operator<=>(const GeneratorToken&, const GeneratorToken&) = default;
  friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
};

/// (cohomological degree, q-degree).
struct BiDegree {
  int coh = 0;
  int q = 0;
  BiDegree& operator+=(BiDegree o) {
    coh += o.coh;
    q += o.q;
    return *this;
  }
  friend BiDegree operator+(BiDegree a, BiDegree b) { return a += b; }
  friend auto operator<=>(const BiDegree&, const BiDegree&) = default;
  friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

/// Bidegree of a crossing by the (left, right) labels of its two strands at the bottom.
inline BiDegree crossing_bidegree(char left, char right) {
  if (left == '2' && right == '2') return {0, -2};
  if (left == '1' && right == '1') return {-1, 0};
  return {0, 1};
}

inline void validate_token(const TypedSequence& seq, const GeneratorToken& g) {
  if (g.is_dot()) {
    if (g.position < 1 || g.position > seq.size())
      throw DomainError("dot position " + std::to_string(g.position) + " out of range for sequence " + seq.str());
    if (!seq.is_bosonic(g.position - 1))
      throw DomainError("dot on fermionic strand " + std::to_string(g.position) + " of sequence " + seq.str());
  } else if (g.position < 1 || g.position >= seq.size()) {
    throw DomainError("crossing position " + std::to_string(g.position) + " out of range for sequence " + seq.str());
  }
}

inline BiDegree generator_bidegree(const TypedSequence& seq, const GeneratorToken& g) {
  validate_token(seq, g);
  if (g.is_dot()) return {0, 2};
  return crossing_bidegree(seq[g.position - 1], seq[g.position]);
}

/// Sequence after applying the token at the current height.
inline TypedSequence after_token(const TypedSequence& seq, const GeneratorToken& g) {
  validate_token(seq, g);
  return g.is_dot() ? seq : seq.swapped(g.position);
}

}  // namespace glcat
