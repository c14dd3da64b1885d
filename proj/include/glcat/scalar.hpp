#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace glcat {

/// Raised on precondition violations (bad indices, dots on fermionic strands, k > m, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// 64-bit integer with overflow-checked arithmetic.
class Integer {
 public:
  constexpr Integer(std::int64_t v = 0) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend Integer operator+(Integer a, Integer b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Integer: addition overflow");
    return r;
  }
  friend Integer operator-(Integer a, Integer b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Integer: subtraction overflow");
    return r;
  }
  friend Integer operator*(Integer a, Integer b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Integer: multiplication overflow");
    return r;
  }
  Integer operator-() const { return Integer(0) - *this; }
  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }

  friend constexpr bool operator==(Integer a, Integer b) = default;
  friend constexpr auto operator<=>(Integer a, Integer b) = default;

 private:
  std::int64_t v_;
};

/// Element of the prime field F_p; the modulus travels with the value.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::int64_t p) : v_(reduce(v, p)), p_(p) {
    if (p < 2) throw DomainError("Fp: modulus must be a prime >= 2");
  }

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.v_, a.common(b)); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ - b.v_, a.common(b)); }
  friend Fp operator*(Fp a, Fp b) {
    auto p = a.common(b);
    return Fp(static_cast<std::int64_t>((static_cast<__int128>(a.v_) * b.v_) % p), p);
  }
  friend Fp operator*(Fp a, std::int64_t k) { return a * Fp(k, a.p_); }
  friend Fp operator*(Fp a, Integer k) { return a * Fp(k.value(), a.p_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-v_, p_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inverse() const {
    if (v_ == 0) throw DomainError("Fp: inverse of zero");
    // Fermat; p is assumed prime
    std::int64_t result = 1, base = v_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % p_);
      base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p_);
      e >>= 1;
    }
    return Fp(result, p_);
  }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  static std::int64_t reduce(std::int64_t v, std::int64_t p) {
    if (p < 2) return 0;
    auto r = v % p;
    return r < 0 ? r + p : r;
  }
  std::int64_t common(Fp o) const {
    if (p_ != o.p_) throw DomainError("Fp: mixed moduli");
    return p_;
  }

  std::int64_t v_ = 0;
  std::int64_t p_ = 2;
};

inline bool is_zero(Integer x) { return x.value() == 0; }
inline bool is_zero(Fp x) { return x.value() == 0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::string to_string(Integer x) { return std::to_string(x.value()); }
inline std::string to_string(Fp x) { return std::to_string(x.value()); }
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.value(); }
inline std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

/// c * k for an integer structure constant k.
inline Integer scale(Integer c, Integer k) { return c * k; }
inline Fp scale(Fp c, Integer k) { return c * k; }
inline Rational scale(const Rational& c, Integer k) { return c * Rational(k.value()); }

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace glcat
