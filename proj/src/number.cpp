#include "gross/number.hpp"

#include <algorithm>
#include <map>

namespace gross {

namespace {

struct ExpoGreater {
  bool operator()(const Rational& a, const Rational& b) const { return b < a; }
};

}  // namespace

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

const char* to_string(Trilean t) {
  switch (t) {
    case Trilean::False: return "False";
    case Trilean::True: return "True";
    case Trilean::Unknown: return "Unknown";
  }
  return "?";
}

GrossNumber::GrossNumber(const Rational& finite) {
  if (!finite.is_zero()) terms_.push_back(GrossTerm{finite, Rational()});
}

GrossNumber GrossNumber::grosspower(const Rational& coeff, const Rational& expo) {
  GrossNumber out;
  if (!coeff.is_zero()) out.terms_.push_back(GrossTerm{coeff, expo});
  return out;
}

bool GrossNumber::is_purely_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().expo.is_zero());
}

Rational GrossNumber::finite_value() const {
  if (terms_.empty()) return Rational();
  return terms_.front().coeff;
}

GrossNumber normalize(const std::vector<std::pair<Rational, Rational>>& raw_terms) {
  std::map<Rational, Rational, ExpoGreater> merged;
  for (const auto& [coeff, expo] : raw_terms) {
    auto [it, inserted] = merged.emplace(expo, coeff);
    if (!inserted) it->second += coeff;
  }
  GrossNumber out;
  out.terms_.reserve(merged.size());
  for (auto& [expo, coeff] : merged) {
    if (!coeff.is_zero()) out.terms_.push_back(GrossTerm{coeff, expo});
  }
  return out;
}

GrossNumber add(const GrossNumber& a, const GrossNumber& b) {
  GrossNumber out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->expo > ib->expo) {
      out.terms_.push_back(*ia++);
    } else if (ib->expo > ia->expo) {
      out.terms_.push_back(*ib++);
    } else {
      Rational c = ia->coeff + ib->coeff;
      if (!c.is_zero()) out.terms_.push_back(GrossTerm{c, ia->expo});
      ++ia;
      ++ib;
    }
  }
  out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
  out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
  return out;
}

GrossNumber neg(const GrossNumber& a) {
  GrossNumber out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

GrossNumber sub(const GrossNumber& a, const GrossNumber& b) {
  return add(a, neg(b));
}

GrossNumber mul(const GrossNumber& a, const GrossNumber& b) {
  std::map<Rational, Rational, ExpoGreater> merged;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Rational expo = ta.expo + tb.expo;
      Rational coeff = ta.coeff * tb.coeff;
      auto [it, inserted] = merged.emplace(std::move(expo), coeff);
      if (!inserted) it->second += coeff;
    }
  }
  GrossNumber out;
  out.terms_.reserve(merged.size());
  for (auto& [expo, coeff] : merged) {
    if (!coeff.is_zero()) out.terms_.push_back(GrossTerm{coeff, expo});
  }
  return out;
}

GrossNumber div(const GrossNumber& a, const GrossNumber& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero gross-number");
  if (a.is_zero()) return GrossNumber();

  if (b.is_single_term()) {
    const GrossTerm& d = b.terms().front();
    GrossNumber out = a;
    for (auto& t : out.terms_) {
      t.coeff = t.coeff / d.coeff;
      t.expo = t.expo - d.expo;
    }
    return out;
  }

  // Long division by leading terms. If q*b = a exactly, the quotient's
  // lowest exponent equals min_expo(a) - min_expo(b); once a candidate term
  // drops below that bound no exact finite quotient exists.
  const Rational bound = a.trailing().expo - b.trailing().expo;
  GrossNumber quotient;
  GrossNumber remainder = a;
  while (!remainder.is_zero()) {
    Rational e = remainder.leading().expo - b.leading().expo;
    if (e < bound) {
      throw Error(ErrorKind::NotRepresentable,
                  "quotient is not a finite sum of grosspowers");
    }
    Rational c = remainder.leading().coeff / b.leading().coeff;
    GrossNumber piece = GrossNumber::grosspower(c, e);
    quotient.terms_.push_back(GrossTerm{c, e});  // exponents strictly decrease
    remainder = sub(remainder, mul(piece, b));
  }
  return quotient;
}

GrossNumber pow(const GrossNumber& x, long long e) {
  if (e == 0) return GrossNumber(1);
  if (x.is_zero()) {
    if (e < 0) throw Error(ErrorKind::ZeroToNegativePower, "0 raised to a negative power");
    return GrossNumber();
  }
  if (x.is_single_term()) {
    const GrossTerm& t = x.terms().front();
    return GrossNumber::grosspower(t.coeff.pow_int(e), t.expo * Rational(e));
  }
  if (e < 0) {
    throw Error(ErrorKind::NotRepresentable,
                "negative power of a multi-term gross-number");
  }
  GrossNumber acc(1);
  GrossNumber base = x;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

GrossNumber pow_grossone(const GrossNumber& x) {
  if (x.is_zero()) return GrossNumber();
  if (x == GrossNumber(1)) return GrossNumber(1);
  throw Error(ErrorKind::NotRepresentable,
              "grossone exponent is defined only for bases 0 and 1");
}

Ordering cmp(const GrossNumber& a, const GrossNumber& b) {
  GrossNumber d = sub(a, b);
  if (d.is_zero()) return Ordering::Equal;
  return d.leading().coeff.sign() > 0 ? Ordering::Greater : Ordering::Less;
}

GrossNumber Decomposition::recompose() const {
  return add(add(infinite_part, GrossNumber(finite_part)), infinitesimal_part);
}

Decomposition decompose(const GrossNumber& x) {
  Decomposition d;
  std::vector<std::pair<Rational, Rational>> inf, eps;
  for (const auto& t : x.terms()) {
    int s = t.expo.sign();
    if (s > 0) {
      inf.emplace_back(t.coeff, t.expo);
    } else if (s == 0) {
      d.finite_part = t.coeff;
    } else {
      eps.emplace_back(t.coeff, t.expo);
    }
  }
  d.infinite_part = normalize(inf);
  d.infinitesimal_part = normalize(eps);
  return d;
}

ShapeClass classify_shape(const GrossNumber& x) {
  Decomposition d = decompose(x);
  ShapeClass s;
  s.is_zero = x.is_zero();
  s.is_finite = d.infinite_part.is_zero() && d.infinitesimal_part.is_zero();
  s.is_purely_infinite =
      !d.infinite_part.is_zero() && d.finite_part.is_zero() && d.infinitesimal_part.is_zero();
  s.has_infinitesimal = !d.infinitesimal_part.is_zero();
  s.is_compound = d.infinite_part.term_count() >= 2;
  s.is_simple = !s.is_compound;
  return s;
}

Trilean is_integer(const GrossNumber& x) {
  bool unknown = false;
  for (const auto& t : x.terms()) {
    int s = t.expo.sign();
    if (s < 0) return Trilean::False;
    if (s == 0) {
      if (!t.coeff.is_integer()) return Trilean::False;
    } else if (!t.expo.is_integer()) {
      unknown = true;
    }
    // positive integer exponent: integer for any rational coefficient,
    // since grossone is divisible by every finite integer
  }
  return unknown ? Trilean::Unknown : Trilean::True;
}

Trilean divides(const GrossNumber& d, const GrossNumber& x) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "divisibility by zero");
  try {
    return is_integer(div(x, d));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotRepresentable) throw;
  }
  if (is_integer(d) == Trilean::True && is_integer(x) == Trilean::True) return Trilean::False;
  return Trilean::Unknown;
}

Rational eval_at(const GrossNumber& x, const Rational& t) {
  if (t.sign() <= 0) throw Error(ErrorKind::NonPositivePoint, "substitution point must be positive");
  Rational sum;
  for (const auto& term : x.terms()) {
    if (!term.expo.is_integer()) {
      throw Error(ErrorKind::NonIntegerExponent,
                  "substitution requires integer exponents, got " + term.expo.to_string());
    }
    if (!term.expo.num().fits_slong_p()) {
      throw Error(ErrorKind::NotRepresentable, "exponent too large to evaluate");
    }
    sum += term.coeff * t.pow_int(term.expo.to_slong());
  }
  return sum;
}

}  // namespace gross
