#pragma once

#include "glcat/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace glcat {

template <class F>
using SparseVec = std::map<int, F>;

/// v += c * w, dropping entries that cancel.
template <class F>
void axpy(SparseVec<F>& v, const std::type_identity_t<F>& c, const SparseVec<F>& w) {
  for (const auto& [k, x] : w) {
    auto [it, inserted] = v.try_emplace(k, c * x);
    if (!inserted) {
      it->second += c * x;
      if (glcat::is_zero(it->second)) v.erase(it);
    } else if (glcat::is_zero(it->second)) {
      v.erase(it);
    }
  }
}

/// Incrementally built row-echelon basis of a subspace of F^(ints). Every stored row has
/// leading entry 1 and remembers which combination of inserted vectors produced it.
template <class F>
class RowEchelon {
 public:
  explicit RowEchelon(F unit) : unit_(std::move(unit)) {}

  struct Reduction {
    SparseVec<F> remainder;
    SparseVec<F> combination;  // remainder = v - sum combination[j] * inserted[j]
  };

  Reduction reduce(SparseVec<F> v) const {
    Reduction r;
    auto it = v.begin();
    while (it != v.end()) {
      auto pr = pivot_.find(it->first);
      if (pr == pivot_.end()) {
        ++it;
        continue;
      }
      const int key = it->first;
      const Row& row = rows_[pr->second];
      const F f = it->second;
      axpy(v, -f, row.v);
      axpy(r.combination, f, row.comb);
      it = v.upper_bound(key);
    }
    r.remainder = std::move(v);
    return r;
  }

  /// Adds v (tagged with index `tag`); returns true when v was independent of the rows so far.
  bool insert(const SparseVec<F>& v, int tag) {
    auto red = reduce(v);
    if (red.remainder.empty()) return false;
    SparseVec<F> comb;
    comb.emplace(tag, unit_);
    axpy(comb, -unit_, red.combination);
    const int p = red.remainder.begin()->first;
    const F inv = unit_ / red.remainder.begin()->second;
    for (auto& [k, x] : red.remainder) x = x * inv;
    for (auto& [k, x] : comb) x = x * inv;
    pivot_.emplace(p, rows_.size());
    rows_.push_back({std::move(red.remainder), std::move(comb)});
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  /// Coefficients c with sum c[j] * inserted[j] == v, if v lies in the span.
  std::optional<SparseVec<F>> solve(const SparseVec<F>& v) const {
    auto red = reduce(v);
    if (!red.remainder.empty()) return std::nullopt;
    return red.combination;
  }

 private:
  struct Row {
    SparseVec<F> v;
    SparseVec<F> comb;
  };
  F unit_;
  std::vector<Row> rows_;
  std::map<int, std::size_t> pivot_;
};

template <class F>
std::size_t rank_of(const std::vector<SparseVec<F>>& rows, const F& unit) {
  RowEchelon<F> ech(unit);
  for (std::size_t i = 0; i < rows.size(); ++i) ech.insert(rows[i], static_cast<int>(i));
  return ech.rank();
}

/// Indices of a maximal independent subfamily, chosen greedily in order.
template <class F>
std::vector<int> independent_indices(const std::vector<SparseVec<F>>& rows, const F& unit) {
  RowEchelon<F> ech(unit);
  std::vector<int> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (ech.insert(rows[i], static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

/// Nonunit invariant factors (absolute values > 1) of an integer matrix given by sparse rows.
inline std::vector<BigInt> smith_invariant_factors(const std::vector<SparseVec<Integer>>& rows, int cols) {
  const int nr = static_cast<int>(rows.size());
  std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(cols, 0));
  for (int i = 0; i < nr; ++i)
    for (const auto& [k, x] : rows[i]) a[i][k] = x.value();
  std::vector<BigInt> diag;
  int t = 0;
  while (t < nr && t < cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (int i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        for (int i = t + 1; i < nr && clean; ++i)
          for (int j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  std::vector<BigInt> out;
  for (auto& d : diag)
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace glcat
