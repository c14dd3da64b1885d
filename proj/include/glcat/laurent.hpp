#pragma once

#include "glcat/scalar.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace glcat {

/// Element of Z[q, q^-1], stored sparsely by exponent. Zero coefficients are never stored.
class LaurentInt {
 public:
  using Map = std::map<int, Integer>;

  LaurentInt() = default;
  LaurentInt(Integer c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

  static LaurentInt monomial(int exponent, Integer c = 1) {
    LaurentInt r;
    r.add_term(exponent, c);
    return r;
  }
  static LaurentInt q(int exponent = 1) { return monomial(exponent); }

  void add_term(int exponent, Integer c) {
    if (glcat::is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (glcat::is_zero(it->second)) coeffs_.erase(it);
    }
  }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }
  int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  /// q <-> q^-1.
  LaurentInt bar() const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_) r.add_term(-e, c);
    return r;
  }
  Integer at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }
  bool nonnegative() const {
    for (const auto& [e, c] : coeffs_)
      if (c.value() < 0) return false;
    return true;
  }
  /// Drops every term with exponent above `max_exponent`.
  LaurentInt truncated(int max_exponent) const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_)
      if (e <= max_exponent) r.add_term(e, c);
    return r;
  }
  LaurentInt shifted(int by) const {
    LaurentInt r;
    for (const auto& [e, c] : coeffs_) r.add_term(e + by, c);
    return r;
  }

  LaurentInt& operator+=(const LaurentInt& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentInt& operator-=(const LaurentInt& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentInt operator-() const { return LaurentInt() - *this; }
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) = default;

  /// Exact division; throws DomainError when the divisor does not divide.
  LaurentInt divided_by(const LaurentInt& d) const {
    if (d.is_zero()) throw DomainError("LaurentInt: division by zero");
    LaurentInt rem = *this, quot;
    const int dhi = d.max_degree(), dlo = d.min_degree();
    const Integer dc = d.coeff(dhi);
    while (!rem.is_zero()) {
      const int lead = rem.max_degree();
      const Integer c = rem.coeff(lead);
      if (lead - dhi < rem.min_degree() - dlo || c.value() % dc.value() != 0)
        throw DomainError("LaurentInt: inexact division");
      auto t = monomial(lead - dhi, Integer(c.value() / dc.value()));
      quot += t;
      rem -= t * d;
    }
    return quot;
  }

  /// Human-readable form, highest exponent first: "q^4+q^2+2+q^-2+q^-4".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      auto [e, c] = *it;
      std::int64_t v = c.value();
      if (!out.empty()) out += v < 0 ? "-" : "+";
      else if (v < 0) out += "-";
      std::int64_t a = v < 0 ? -v : v;
      if (e == 0) {
        out += std::to_string(a);
        continue;
      }
      if (a != 1) out += std::to_string(a) + "*";
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  /// Inverse of str(); also accepts whitespace and "q^(-2)".
  static LaurentInt parse(std::string_view text) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') s += ch;
    if (s.empty()) throw DomainError("LaurentInt: empty input");
    LaurentInt r;
    std::size_t i = 0;
    auto read_int = [&](std::int64_t& out) {
      std::size_t start = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw DomainError("LaurentInt: expected integer in '" + s + "'");
      out = std::stoll(s.substr(start, i - start));
    };
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      std::int64_t c = 1;
      bool have_coeff = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        read_int(c);
        have_coeff = true;
        if (i < s.size() && s[i] == '*') ++i;
      }
      int e = 0;
      if (i < s.size() && s[i] == 'q') {
        ++i;
        e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::int64_t ev;
          read_int(ev);
          e = static_cast<int>(ev);
        }
      } else if (!have_coeff) {
        throw DomainError("LaurentInt: malformed term in '" + s + "'");
      }
      r.add_term(e, Integer(sign * c));
    }
    return r;
  }

 private:
  Map coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentInt& l) { return os << l.str(); }

/// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline LaurentInt quantum_integer(int n) {
  if (n < 0) throw DomainError("quantum_integer: negative argument");
  LaurentInt r;
  for (int j = 0; j < n; ++j) r.add_term(n - 1 - 2 * j, 1);
  return r;
}

inline LaurentInt quantum_factorial(int n) {
  if (n < 0) throw DomainError("quantum_factorial: negative argument");
  LaurentInt r(1);
  for (int j = 2; j <= n; ++j) r = r * quantum_integer(j);
  return r;
}

/// Gaussian binomial [m choose k], via the q-Pascal rule
/// [m,k] = q^{k} [m-1,k] + q^{k-m} [m-1,k-1].
inline LaurentInt quantum_binomial(int m, int k) {
  if (m < 0 || k < 0) throw DomainError("quantum_binomial: negative argument");
  if (k > m) throw DomainError("quantum_binomial: k > m");
  std::vector<LaurentInt> row{LaurentInt(1)};
  for (int r = 1; r <= m; ++r) {
    std::vector<LaurentInt> next(r + 1);
    for (int j = 0; j <= r; ++j) {
      if (j <= r - 1) next[j] += row[j] * LaurentInt::q(j);
      if (j >= 1) next[j] += row[j - 1] * LaurentInt::q(j - r);
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace glcat
