#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gross/error.hpp"

namespace gross {

// Exact arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Backed by GMP.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long long n) : v_(mpz_from_ll(n)) {}
  Rational(long n, long d);
  Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "123", "-4", "3.1" (exact decimal), "31/10".
  static std::optional<Rational> from_string(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  bool fits_slong() const { return is_integer() && v_.get_num().fits_slong_p(); }
  long to_slong() const { return v_.get_num().get_si(); }

  std::string to_string() const;           // "5", "-3/10"
  std::string to_fraction_string() const;  // always "n/d", e.g. "5/1"

  // x^e for integer e; negative e inverts (ZeroToNegativePower on zero base).
  Rational pow_int(long long e) const;

  // Exact square root / n-th root, or nullopt if the result is irrational.
  std::optional<Rational> exact_sqrt() const;
  std::optional<Rational> exact_root(unsigned long n) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  static mpz_class mpz_from_ll(long long n);

  mpq_class v_;
};

}  // namespace gross
