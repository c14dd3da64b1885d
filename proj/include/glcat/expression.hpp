#pragma once

#include "glcat/diagram.hpp"
#include "glcat/polrep.hpp"
#include "glcat/rewrite.hpp"
#include "glcat/scalar.hpp"
#include "glcat/sequence.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace glcat {

/// Syntax error at a 1-based line and column.
struct ParseError : DomainError {
  ParseError(int line, int column, const std::string& msg)
      : DomainError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line(line), column(column) {}
  int line;
  int column;
};

/// Well-formed text whose tokens are invalid for the running sequence.
struct SemanticError : DomainError {
  SemanticError(int term, int token, int line, int column, const std::string& msg)
      : DomainError(std::to_string(line) + ":" + std::to_string(column) + ": term " + std::to_string(term) + ", token " +
                    std::to_string(token) + ": " + msg),
        term(term),
        token(token),
        line(line),
        column(column) {}
  int term;
  int token;
  int line;
  int column;
};

struct ExpressionTerm {
  Rational coeff{1};
  std::vector<GeneratorToken> tokens;  // bottom-to-top
  friend bool operator==(const ExpressionTerm&, const ExpressionTerm&) = default;
};

/// `seq=<word>; <term> (+|- <term>)*` with term = [coefficient [*]] token*.
struct Expression {
  TypedSequence source;
  std::vector<ExpressionTerm> terms;
  friend bool operator==(const Expression&, const Expression&) = default;
};

namespace detail {

class ExpressionLexer {
 public:
  explicit ExpressionLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    advance();
  }
  void expect_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }
  bool at_word(std::string_view w) {
    skip_space();
    return text_.substr(pos_, w.size()) == w;
  }
  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    return out;
  }
  char take() {
    char c = text_[pos_];
    advance();
    return c;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline Expression parse_one(ExpressionLexer& lex) {
  Expression expr;
  lex.expect_word("seq");
  lex.expect('=', "'=' after 'seq'");
  lex.skip_space();
  std::string seq;
  while (lex.peek() == '1' || lex.peek() == '2') seq += lex.take();
  if (seq.empty()) lex.fail("expected a sequence over {1,2}");
  expr.source = TypedSequence(seq);
  lex.expect(';', "';' after the sequence");

  struct Pos {
    int line, column;
  };
  std::vector<std::vector<Pos>> where;
  bool first = true;
  while (!lex.at_end() && !lex.at_word("seq")) {
    Rational sign(1);
    const char c = lex.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? Rational(-1) : Rational(1);
      lex.take();
    } else if (!first) {
      lex.fail("expected '+' or '-' between terms");
    }
    first = false;
    ExpressionTerm term;
    std::vector<Pos> pos;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      std::string num = lex.digits();
      if (lex.peek() == '/') {
        lex.take();
        lex.skip_space();
        std::string den = lex.digits();
        if (den.empty()) lex.fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) lex.fail("zero denominator");
        num += "/" + den;
      }
      term.coeff = Rational(num);
      have_coeff = true;
      if (lex.peek() == '*') lex.take();
    }
    term.coeff *= sign;
    while ((lex.peek() == 'x' || lex.peek() == 's') && !lex.at_word("seq")) {
      pos.push_back({lex.line(), lex.column()});
      const char kind = lex.take();
      std::string num = lex.digits();
      if (num.empty()) lex.fail(std::string("expected a strand index after '") + kind + "'");
      const int k = std::stoi(num);
      term.tokens.push_back(kind == 'x' ? GeneratorToken::dot(k) : GeneratorToken::crossing(k));
    }
    if (!have_coeff && term.tokens.empty()) {
      if (lex.at_end()) lex.fail("expected a term");
      lex.fail(std::string("unexpected character '") + lex.peek() + "'");
    }
    expr.terms.push_back(std::move(term));
    where.push_back(std::move(pos));
  }
  if (expr.terms.empty()) lex.fail("expected at least one term");

  for (std::size_t t = 0; t < expr.terms.size(); ++t) {
    TypedSequence cur = expr.source;
    for (std::size_t i = 0; i < expr.terms[t].tokens.size(); ++i) {
      const auto& g = expr.terms[t].tokens[i];
      try {
        cur = after_token(cur, g);
      } catch (const DomainError& e) {
        throw SemanticError(static_cast<int>(t), static_cast<int>(i), where[t][i].line, where[t][i].column, e.what());
      }
    }
  }
  return expr;
}

}  // namespace detail

/// Parses exactly one expression.
inline Expression parse_expression(std::string_view text) {
  detail::ExpressionLexer lex(text);
  auto e = detail::parse_one(lex);
  if (!lex.at_end()) lex.fail("expected end of input");
  return e;
}

/// Parses a sequence of expressions, each introduced by `seq=`.
inline std::vector<Expression> parse_expressions(std::string_view text) {
  detail::ExpressionLexer lex(text);
  std::vector<Expression> out;
  do {
    out.push_back(detail::parse_one(lex));
  } while (!lex.at_end());
  return out;
}

/// Converts an expression coefficient into the ring of `unit`.
inline Integer coefficient_in(const Rational& c, const Integer&) {
  if (denominator(c) != 1) throw DomainError("coefficient " + c.str() + " is not an integer");
  const BigInt n = numerator(c);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw DomainError("coefficient " + c.str() + " does not fit in 64 bits");
  return Integer(static_cast<std::int64_t>(n));
}
inline Fp coefficient_in(const Rational& c, const Fp& unit) {
  const std::int64_t p = unit.modulus();
  auto mod = [&](const BigInt& v) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
  };
  const std::int64_t den = mod(denominator(c));
  if (den == 0) throw DomainError("coefficient " + c.str() + " has a denominator divisible by " + std::to_string(p));
  return Fp(mod(numerator(c)), p) / Fp(den, p);
}
inline Rational coefficient_in(const Rational& c, const Rational&) { return c; }

/// Sum of coefficient * normal form over the terms.
template <class S>
Element<S> evaluate(const Expression& e, const S& unit, Engine& eng = default_engine()) {
  Element<S> out;
  for (const auto& t : e.terms) {
    const S c = coefficient_in(t.coeff, unit);
    const auto nf = eng.normal_form({e.source, t.tokens});
    for (const auto& [u, k] : nf.terms()) out.add(u, scale(c, k));
  }
  return out;
}

inline std::string coefficient_text(const Rational& c) { return c.str(); }
inline std::string coefficient_text(Integer c) { return std::to_string(c.value()); }
inline std::string coefficient_text(Fp c) { return std::to_string(c.value()); }

inline std::string print_expression(const Expression& e) {
  std::string out = "seq=" + e.source.str() + ";";
  bool first = true;
  for (const auto& t : e.terms) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) out += negative ? " -" : " ";
    else out += negative ? " - " : " + ";
    first = false;
    std::string body;
    if (mag != 1 || t.tokens.empty()) body = mag.str();
    for (const auto& g : t.tokens) body += (body.empty() ? "" : " ") + g.str();
    out += body;
  }
  return out;
}

/// Expressions (one per source sequence) whose evaluation is e.
template <class S>
std::vector<Expression> element_expressions(const Element<S>& e, Engine& eng = default_engine()) {
  std::map<TypedSequence, Expression> by_source;
  for (const auto& [t, c] : ordered_terms(e, eng)) {
    auto& ex = by_source[t.source];
    ex.source = t.source;
    ex.terms.push_back({Rational(coefficient_text(c)), term_tokens(t, eng.canonical_word(t.perm))});
  }
  std::vector<Expression> out;
  for (auto& [s, ex] : by_source) out.push_back(std::move(ex));
  return out;
}

/// One line per source sequence; a zero element prints as `seq=<fallback>; 0`.
template <class S>
std::string print_element(const Element<S>& e, const TypedSequence& fallback, Engine& eng = default_engine()) {
  auto exprs = element_expressions(e, eng);
  if (exprs.empty()) return "seq=" + fallback.str() + "; 0";
  std::string out;
  for (std::size_t i = 0; i < exprs.size(); ++i) out += (i ? "\n" : "") + print_expression(exprs[i]);
  return out;
}

/// Polynomial in x_1..x_vars: terms `[coefficient [*]] (x<k>[^e] [*])*` joined by + and -.
template <class S>
Polynomial<S> parse_polynomial(std::string_view text, int vars, const S& unit) {
  detail::ExpressionLexer lex(text);
  Polynomial<S> out;
  bool first = true;
  while (!lex.at_end()) {
    Rational sign(1);
    const char c = lex.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? Rational(-1) : Rational(1);
      lex.take();
    } else if (!first) {
      lex.fail("expected '+' or '-' between terms");
    }
    first = false;
    Rational coeff(1);
    bool have = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      std::string num = lex.digits();
      if (lex.peek() == '/') {
        lex.take();
        lex.skip_space();
        std::string den = lex.digits();
        if (den.empty() || den.find_first_not_of('0') == std::string::npos) lex.fail("expected a nonzero denominator");
        num += "/" + den;
      }
      coeff = Rational(num);
      have = true;
      if (lex.peek() == '*') lex.take();
    }
    std::vector<int> exps(vars, 0);
    while (lex.peek() == 'x') {
      lex.take();
      const std::string idx = lex.digits();
      if (idx.empty()) lex.fail("expected a variable index after 'x'");
      const int k = std::stoi(idx);
      if (k < 1 || k > vars) lex.fail("variable x" + idx + " out of range 1.." + std::to_string(vars));
      int e = 1;
      if (lex.peek() == '^') {
        lex.take();
        lex.skip_space();
        const std::string ex = lex.digits();
        if (ex.empty()) lex.fail("expected an exponent");
        e = std::stoi(ex);
      }
      exps[k - 1] += e;
      have = true;
      if (lex.peek() == '*') lex.take();
    }
    if (!have) lex.fail(lex.at_end() ? "expected a term" : std::string("unexpected character '") + lex.peek() + "'");
    out.add(exps, coefficient_in(Rational(coeff * sign), unit));
  }
  return out;
}

template <class S>
std::string print_polynomial(const Polynomial<S>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string num = coefficient_text(c);
    const bool negative = !num.empty() && num[0] == '-';
    if (negative) num.erase(0, 1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) mono += (mono.empty() ? "" : " ") + ("x" + std::to_string(k + 1)) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    if (mono.empty()) out += num;
    else out += (num == "1" ? "" : num + " ") + mono;
  }
  return out;
}

/// One line per Pol block: `seq=<s> w=<perm>: <polynomial>`.
template <class S>
std::string print_pol_vector(const PolVector<S>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [key, f] : v.blocks())
    out += (out.empty() ? "" : "\n") + ("seq=" + key.seq.str() + " w=" + key.w.str() + ": ") + print_polynomial(f);
  return out;
}

}  // namespace glcat
