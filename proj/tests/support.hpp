#pragma once

// Shared helpers for the unit and acceptance suites: a deterministically
// seeded value fuzzer and an invariant checker for canonical form. Kept
// independent of the arithmetic paths it is used to test.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gross/number.hpp"
#include "gross/parser.hpp"

namespace gross::testing {

using Rng = std::mt19937_64;

inline GrossNumber G(std::string_view text) { return eval_string(text); }

inline Rational random_rational(Rng& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 10);
  long n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Rational(n, den(rng));
}

// Exponents mix small integers with simple fractions.
inline Rational random_exponent(Rng& rng, bool integer_only) {
  std::uniform_int_distribution<long> small(-3, 3);
  if (integer_only || std::uniform_int_distribution<int>(0, 9)(rng) < 7) {
    return Rational(small(rng));
  }
  std::uniform_int_distribution<long> den(2, 4);
  return Rational(small(rng) * 2 + 1, den(rng));
}

inline GrossNumber random_number(Rng& rng, bool integer_expo = false, int max_terms = 4) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::vector<std::pair<Rational, Rational>> raw;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    raw.emplace_back(random_rational(rng), random_exponent(rng, integer_expo));
  }
  return normalize(raw);
}

inline GrossNumber random_nonzero(Rng& rng, bool integer_expo = false) {
  for (;;) {
    GrossNumber x = random_number(rng, integer_expo);
    if (!x.is_zero()) return x;
  }
}

// Every operation result must satisfy the canonical-form invariants:
// strictly decreasing exponents, no zero coefficients, reduced rationals.
inline bool is_canonical(const GrossNumber& x) {
  const auto& ts = x.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].coeff.is_zero()) return false;
    if (ts[i].coeff.den() <= 0 || ts[i].expo.den() <= 0) return false;
    if (gcd(ts[i].coeff.num(), ts[i].coeff.den()) != 1) return false;
    if (i + 1 < ts.size() && !(ts[i + 1].expo < ts[i].expo)) return false;
  }
  return true;
}

}  // namespace gross::testing
