#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gross/rational.hpp"

namespace gross {

// One grosspower c * G^p with nonzero coefficient. G denotes the grossone
// unit, the number of elements of the set of natural numbers.
struct GrossTerm {
  Rational coeff;
  Rational expo;

  friend bool operator==(const GrossTerm& a, const GrossTerm& b) {
    return a.coeff == b.coeff && a.expo == b.expo;
  }
};

// A gross-number: finite sum of grosspowers with exponents strictly
// decreasing along the term list. The empty sum is zero. All operations
// keep this canonical form, so equality is term-wise.
class GrossNumber {
public:
  GrossNumber() = default;
  GrossNumber(const Rational& finite);  // NOLINT: implicit by design
  GrossNumber(long n) : GrossNumber(Rational(n)) {}

  static GrossNumber grossone() { return grosspower(Rational(1L), Rational(1L)); }
  static GrossNumber grosspower(const Rational& coeff, const Rational& expo);

  const std::vector<GrossTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const GrossTerm& leading() const { return terms_.front(); }
  const GrossTerm& trailing() const { return terms_.back(); }
  bool is_single_term() const { return terms_.size() == 1; }

  // True when the value is a plain rational (a*G^0 or zero).
  bool is_purely_finite() const;
  Rational finite_value() const;  // requires is_purely_finite()

  friend bool operator==(const GrossNumber& a, const GrossNumber& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GrossNumber& a, const GrossNumber& b) { return !(a == b); }

private:
  std::vector<GrossTerm> terms_;

  friend GrossNumber normalize(const std::vector<std::pair<Rational, Rational>>& raw_terms);
  friend GrossNumber add(const GrossNumber& a, const GrossNumber& b);
  friend GrossNumber neg(const GrossNumber& a);
  friend GrossNumber mul(const GrossNumber& a, const GrossNumber& b);
  friend GrossNumber div(const GrossNumber& a, const GrossNumber& b);
};

enum class Ordering { Less, Equal, Greater };
enum class Trilean { False, True, Unknown };

const char* to_string(Ordering o);
const char* to_string(Trilean t);

// The unique split of a gross-number by exponent sign.
struct Decomposition {
  GrossNumber infinite_part;       // exponents > 0
  Rational finite_part;            // the G^0 coefficient
  GrossNumber infinitesimal_part;  // exponents < 0

  GrossNumber recompose() const;
};

struct ShapeClass {
  bool is_zero = false;
  bool is_finite = false;
  bool is_purely_infinite = false;
  bool has_infinitesimal = false;
  bool is_simple = false;
  bool is_compound = false;
};

// Canonicalize an arbitrary coefficient/exponent list: merge like exponents,
// drop zero coefficients, sort by strictly decreasing exponent.
GrossNumber normalize(const std::vector<std::pair<Rational, Rational>>& raw_terms);

GrossNumber add(const GrossNumber& a, const GrossNumber& b);
GrossNumber neg(const GrossNumber& a);
GrossNumber sub(const GrossNumber& a, const GrossNumber& b);
GrossNumber mul(const GrossNumber& a, const GrossNumber& b);

// Exact division. Single-term divisors divide term-wise; otherwise long
// division by leading terms. Throws NotRepresentable when the exact quotient
// is not a finite sum of grosspowers, DivisionByZero on b = 0.
GrossNumber div(const GrossNumber& a, const GrossNumber& b);

// x^e for a finite integer exponent. e = 0 gives 1; negative e requires a
// single-term base (NotRepresentable otherwise, ZeroToNegativePower on 0).
GrossNumber pow(const GrossNumber& x, long long e);

// x^G, defined only for x in {0, 1}: 0^G = 0 and 1^G = 1.
GrossNumber pow_grossone(const GrossNumber& x);

// Total order: sign of the leading coefficient of a - b.
Ordering cmp(const GrossNumber& a, const GrossNumber& b);

Decomposition decompose(const GrossNumber& x);
ShapeClass classify_shape(const GrossNumber& x);

// Integrality under the divisibility axiom: a term q*G^k is an integer for
// any rational q when k is a positive integer (grossone is divisible by
// every finite integer), an integer iff q is one when k = 0, never an
// integer when k < 0, and undecided for positive non-integer k.
Trilean is_integer(const GrossNumber& x);

// Whether d divides x. Quotients that exist are answered through
// is_integer; a non-representable quotient of two recognized integers is a
// definite no, anything else stays Unknown.
Trilean divides(const GrossNumber& d, const GrossNumber& x);

// Substitute G := t for a positive rational t. Requires every exponent to be
// an integer. This is the finite-analogue evaluation used by tests and the
// `subst` command.
Rational eval_at(const GrossNumber& x, const Rational& t);

inline GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) { return add(a, b); }
inline GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) { return sub(a, b); }
inline GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) { return mul(a, b); }
inline GrossNumber operator-(const GrossNumber& a) { return neg(a); }

}  // namespace gross
