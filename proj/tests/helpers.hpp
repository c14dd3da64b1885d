#pragma once

#include "glcat/glcat.hpp"

#include <random>
#include <string>
#include <vector>

namespace glcat::testing {

/// Random word of at most max_len valid tokens on a random sequence with n + m <= max_total.
inline GeneratorWord random_word(std::mt19937& rng, int max_total, int max_len) {
  const int total = 1 + static_cast<int>(rng() % max_total);
  const int n = static_cast<int>(rng() % (total + 1));
  const auto seqs = all_sequences(n, total - n);
  GeneratorWord w{seqs[rng() % seqs.size()], {}};
  TypedSequence cur = w.source;
  const int len = static_cast<int>(rng() % (max_len + 1));
  for (int j = 0; j < len; ++j) {
    std::vector<GeneratorToken> opts;
    for (int k = 1; k < total; ++k) opts.push_back(GeneratorToken::crossing(k));
    for (int p = 1; p <= total; ++p)
      if (cur.is_bosonic(p - 1)) opts.push_back(GeneratorToken::dot(p));
    if (opts.empty()) break;
    const auto g = opts[rng() % opts.size()];
    w.tokens.push_back(g);
    cur = after_token(cur, g);
  }
  return w;
}

/// Every basis term of R(n,m) with q-degree <= qmax.
inline std::vector<DiagramTerm> all_terms(int n, int m, int qmax) {
  std::vector<DiagramTerm> out;
  const auto seqs = all_sequences(n, m);
  for (const auto& s : seqs)
    for (const auto& t : seqs)
      for (auto& term : enumerate_basis(s, t, qmax)) out.push_back(std::move(term));
  return out;
}

inline Element<Integer> nf(const std::string& seq, const std::vector<GeneratorToken>& tokens) {
  return default_engine().normal_form({TypedSequence(seq), tokens});
}

inline GeneratorToken X(int p) { return GeneratorToken::dot(p); }
inline GeneratorToken S(int k) { return GeneratorToken::crossing(k); }

inline Element<Integer> term_element(const DiagramTerm& t, std::int64_t c = 1) { return Element<Integer>::term(t, Integer(c)); }

}  // namespace glcat::testing
