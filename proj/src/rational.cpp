#include "gross/rational.hpp"

#include <cctype>

namespace gross {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::NonPositivePoint: return "NonPositivePoint";
    case ErrorKind::NotLambdaForm: return "NotLambdaForm";
    case ErrorKind::LambdaNotSquare: return "LambdaNotSquare";
    case ErrorKind::NotPrimeParameter: return "NotPrimeParameter";
    case ErrorKind::NegativeM: return "NegativeM";
    case ErrorKind::PrimeExceedsBound: return "PrimeExceedsBound";
  }
  return "Error";
}

mpz_class Rational::mpz_from_ll(long long n) {
  return mpz_class(std::to_string(n));
}

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
}

std::optional<Rational> Rational::from_string(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    return i > start;
  };
  std::string whole;
  if (!digits(whole)) return std::nullopt;
  mpz_class num(whole, 10);
  mpz_class den(1);
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::string frac;
    if (!digits(frac)) return std::nullopt;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    std::string d;
    if (!digits(d)) return std::nullopt;
    den = mpz_class(d, 10);
    if (den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::to_fraction_string() const {
  return num().get_str() + "/" + den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::pow_int(long long e) const {
  if (e == 0) return Rational(1L);
  if (is_zero()) {
    if (e < 0) throw Error(ErrorKind::ZeroToNegativePower, "0 raised to a negative power");
    return Rational();
  }
  unsigned long long mag = e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(mag));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(mag));
  if (e < 0) return Rational(d, n);
  return Rational(n, d);
}

std::optional<Rational> Rational::exact_sqrt() const {
  return exact_root(2);
}

std::optional<Rational> Rational::exact_root(unsigned long n) const {
  if (n == 0) return std::nullopt;
  if (n == 1) return *this;
  if (sign() < 0 && n % 2 == 0) return std::nullopt;
  mpz_class rn, rd;
  // mpz_root returns nonzero iff the root is exact.
  mpz_class a = num();
  bool neg = a < 0;
  if (neg) a = -a;
  if (!mpz_root(rn.get_mpz_t(), a.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den().get_mpz_t(), n)) return std::nullopt;
  if (neg) rn = -rn;
  return Rational(rn, rd);
}

}  // namespace gross
