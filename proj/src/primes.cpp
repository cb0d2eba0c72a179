#include "gross/primes.hpp"

#include <stdexcept>

#include "gross/finite.hpp"
#include "gross/parser.hpp"

namespace gross {

namespace {

using u64 = std::uint64_t;

constexpr u64 kFactorBound = 1'000'000;

std::string show(const GrossNumber& x) {
  return format(x, Style::Unicode);
}

std::string show(const Rational& r) {
  return r.to_string();
}

struct FactorProfile {
  std::vector<std::pair<u64, long>> factors;  // (prime, valuation), valuation >= 1
  bool complete = false;                      // true when no unknown odd valuation can hide
};

// Trial division by primes up to kFactorBound. The leftover cofactor is
// resolved when it is 1, a detected prime, or a perfect square (all hidden
// valuations even); otherwise the profile is incomplete.
FactorProfile factor_profile(mpz_class n) {
  FactorProfile out;
  if (n == 1) {
    out.complete = true;
    return out;
  }
  static const std::vector<u64> primes = primes_up_to(kFactorBound);
  mpz_class rem = n;
  for (u64 p : primes) {
    if (rem == 1) break;
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_cmp(pz.get_mpz_t(), rem.get_mpz_t()) > 0) break;
    mpz_class big = pz * pz;
    if (big > rem) {
      // rem is prime: every smaller prime has been removed
      out.factors.emplace_back(mpz_get_ui(rem.get_mpz_t()), 1);
      rem = 1;
      break;
    }
    unsigned long v = mpz_remove(rem.get_mpz_t(), rem.get_mpz_t(), pz.get_mpz_t());
    if (v > 0) out.factors.emplace_back(p, static_cast<long>(v));
  }
  if (rem == 1) {
    out.complete = true;
  } else {
    out.complete = mpz_perfect_square_p(rem.get_mpz_t()) != 0;
  }
  return out;
}

PrimalityVerdict verdict(PrimalityVerdict::Kind kind) {
  PrimalityVerdict v;
  v.kind = kind;
  return v;
}

PrimalityVerdict unknown(std::string reason) {
  PrimalityVerdict v;
  v.kind = PrimalityVerdict::Kind::Unknown;
  v.trace.push_back("no rule applies: " + reason);
  v.reason = std::move(reason);
  return v;
}

PrimalityVerdict classify_finite(const mpz_class& n) {
  if (n == 1) return unknown("1 is a unit, neither prime nor composite");
  if (!n.fits_ulong_p()) {
    return unknown("finite value exceeds the oracle's 64-bit range");
  }
  u64 v = n.get_ui();
  PrimalityVerdict out;
  if (is_prime_small(v)) {
    out.kind = PrimalityVerdict::Kind::Prime;
    out.rule = PrimalityVerdict::Rule::Finite;
    out.trace.push_back("Finite rule: " + n.get_str() + " is prime (deterministic oracle)");
  } else {
    u64 f = smallest_prime_factor(v);
    out.kind = PrimalityVerdict::Kind::Composite;
    out.witness = GrossNumber(Rational(mpz_class(static_cast<unsigned long>(f))));
    out.cofactor = GrossNumber(Rational(mpz_class(n / f)));
    out.trace.push_back("Finite rule: " + std::to_string(f) + " divides " + n.get_str());
  }
  return out;
}

std::string axiom_step(const LambdaCert& cert) {
  return "axiom: every finite positive integer divides " + show(cert.value);
}

}  // namespace

std::optional<LambdaCert> lambda_certify(const GrossNumber& x) {
  if (!x.is_single_term()) return std::nullopt;
  const GrossTerm& t = x.leading();
  if (t.coeff.sign() <= 0) return std::nullopt;
  if (!t.expo.is_integer() || t.expo.sign() <= 0) return std::nullopt;
  if (!t.expo.num().fits_slong_p()) return std::nullopt;
  LambdaCert cert;
  cert.q = t.coeff;
  cert.k = t.expo.to_slong();
  cert.value = x;
  return cert;
}

SquarenessVerdict squareness(const LambdaCert& cert) {
  SquarenessVerdict out;
  if (cert.k % 2 != 0) {
    out.kind = SquarenessVerdict::Kind::Unknown;
    out.reason = "odd grossone exponent: squareness is undecided";
    return out;
  }
  if (auto root = cert.q.exact_sqrt()) {
    out.kind = SquarenessVerdict::Kind::Square;
    out.root = GrossNumber::grosspower(*root, Rational(cert.k / 2));
    return out;
  }

  FactorProfile num = factor_profile(cert.q.num());
  FactorProfile den = factor_profile(cert.q.den());
  if (!num.complete || !den.complete) {
    out.kind = SquarenessVerdict::Kind::Unknown;
    out.reason = "coefficient " + cert.q.to_string() + " could not be fully factored";
    return out;
  }
  std::vector<u64> odd;
  for (const auto& [p, v] : num.factors) {
    if (v % 2 != 0) odd.push_back(p);
  }
  for (const auto& [p, v] : den.factors) {
    if (v % 2 != 0) odd.push_back(p);
  }
  if (odd.size() == 1) {
    out.kind = SquarenessVerdict::Kind::NotSquare;
    out.witness_prime = odd.front();
    return out;
  }
  out.kind = SquarenessVerdict::Kind::Unknown;
  out.reason = "coefficient " + cert.q.to_string() + " has " + std::to_string(odd.size()) +
               " primes with odd valuation; no rule decides this case";
  return out;
}

PrimalityVerdict classify_prime(const GrossNumber& x) {
  if (cmp(x, GrossNumber()) != Ordering::Greater) {
    return verdict(PrimalityVerdict::Kind::NotPositive);
  }

  switch (is_integer(x)) {
    case Trilean::False: return verdict(PrimalityVerdict::Kind::NotInteger);
    case Trilean::Unknown: return unknown("integrality of " + show(x) + " is undecided");
    case Trilean::True: break;
  }

  Decomposition d = decompose(x);
  if (d.infinite_part.is_zero()) {
    return classify_finite(d.finite_part.num());
  }

  auto cert = lambda_certify(d.infinite_part);
  if (!cert) {
    return unknown("infinite part " + show(d.infinite_part) +
                   " is not a simple positive grosspower with integer exponent");
  }

  const Rational& offset = d.finite_part;
  PrimalityVerdict out;

  if (offset == Rational(1L)) {
    out.kind = PrimalityVerdict::Kind::Prime;
    out.rule = PrimalityVerdict::Rule::R1;
    out.trace.push_back(axiom_step(*cert));
    out.trace.push_back("Theorem 1: " + show(cert->value) + " + 1 has no nontrivial factorization");
    return out;
  }

  if (offset == Rational(-1L)) {
    SquarenessVerdict sq = squareness(*cert);
    switch (sq.kind) {
      case SquarenessVerdict::Kind::Square: {
        out.kind = PrimalityVerdict::Kind::Composite;
        out.witness = sub(sq.root, GrossNumber(1));
        out.cofactor = add(sq.root, GrossNumber(1));
        out.trace.push_back(axiom_step(*cert));
        out.trace.push_back("Lemma 2: " + show(cert->value) + " is the square of " + show(sq.root) +
                            ", so it factors as (" + show(out.witness) + ")(" + show(out.cofactor) + ")");
        return out;
      }
      case SquarenessVerdict::Kind::NotSquare: {
        out.kind = PrimalityVerdict::Kind::Prime;
        out.rule = PrimalityVerdict::Rule::R2;
        out.trace.push_back(axiom_step(*cert));
        out.trace.push_back("Lemma 3: " + show(cert->value) + " is not a square (prime " +
                            std::to_string(sq.witness_prime) + " has odd valuation in coefficient " +
                            show(cert->q) + ")");
        out.trace.push_back("Lemma 2: " + show(cert->value) + " - 1 is prime because " +
                            show(cert->value) + " is not a square");
        return out;
      }
      case SquarenessVerdict::Kind::Unknown:
        return unknown("squareness of " + show(cert->value) + " is undecided (" + sq.reason + ")");
    }
  }

  if (offset.is_zero()) {
    out.kind = PrimalityVerdict::Kind::Composite;
    out.witness = GrossNumber(2);
    out.cofactor = div(x, GrossNumber(2));
    out.trace.push_back(axiom_step(*cert));
    out.trace.push_back("axiom: 2 divides " + show(x) + " with cofactor " + show(out.cofactor));
    return out;
  }

  // |offset| >= 2: the offset itself is a finite divisor, since it divides
  // both the lambda-form part and itself.
  Rational w = offset.sign() < 0 ? -offset : offset;
  out.kind = PrimalityVerdict::Kind::Composite;
  out.witness = GrossNumber(w);
  out.cofactor = div(x, out.witness);
  out.trace.push_back(axiom_step(*cert));
  out.trace.push_back("axiom: " + show(w) + " divides " + show(cert->value) + " and divides " +
                      show(offset) + ", hence divides " + show(x) + " with cofactor " +
                      show(out.cofactor));
  return out;
}

namespace {

void require_prime_parameter(u64 p) {
  if (!is_prime_small(p)) {
    throw Error(ErrorKind::NotPrimeParameter, std::to_string(p) + " is not a finite prime");
  }
}

GrossNumber divide_by_prime_power(const GrossNumber& value, u64 p, long long m) {
  mpz_class divisor;
  mpz_ui_pow_ui(divisor.get_mpz_t(), static_cast<unsigned long>(p),
                2 * static_cast<unsigned long>(m) + 1);
  return div(value, GrossNumber(Rational(divisor)));
}

}  // namespace

TwinPair make_twins(const LambdaCert& lambda, u64 p, long long m) {
  if (m < 0) throw Error(ErrorKind::NegativeM, "m must be nonnegative");
  require_prime_parameter(p);
  if (!squareness(lambda).is_square()) {
    throw Error(ErrorKind::LambdaNotSquare, show(lambda.value) + " is not a certified square");
  }

  TwinPair pair;
  pair.lambda = lambda;
  pair.p = p;
  pair.m = m;
  GrossNumber x = divide_by_prime_power(lambda.value, p, m);
  pair.lower = sub(x, GrossNumber(1));
  pair.upper = add(x, GrossNumber(1));
  pair.lower_verdict = classify_prime(pair.lower);
  pair.upper_verdict = classify_prime(pair.upper);
  if (!pair.lower_verdict.is_prime() || !pair.upper_verdict.is_prime()) {
    throw std::logic_error("twin construction produced a non-prime member");
  }
  return pair;
}

std::vector<GrossNumber> enumerate_A(const LambdaCert& lambda, u64 p, std::size_t count,
                                     long long m_start) {
  require_prime_parameter(p);
  if (m_start < 0) throw Error(ErrorKind::NegativeM, "m_start must be nonnegative");
  std::vector<GrossNumber> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(divide_by_prime_power(lambda.value, p, m_start + static_cast<long long>(i)));
  }
  return out;
}

std::vector<GrossNumber> enumerate_B(const LambdaCert& lambda, u64 p, std::size_t count) {
  require_prime_parameter(p);
  if (!squareness(lambda).is_square()) {
    throw Error(ErrorKind::LambdaNotSquare, show(lambda.value) + " is not a certified square");
  }
  std::vector<GrossNumber> out;
  out.reserve(2 * count);
  for (std::size_t i = 0; i < count; ++i) {
    GrossNumber x = divide_by_prime_power(lambda.value, p, 1 + static_cast<long long>(i));
    out.push_back(sub(x, GrossNumber(1)));
    out.push_back(add(x, GrossNumber(1)));
  }
  return out;
}

GrossNumber set_count(SetId id) {
  switch (id) {
    case SetId::Naturals: return GrossNumber::grossone();
    case SetId::Evens:
    case SetId::Odds: return GrossNumber::grosspower(Rational(1, 2), Rational(1L));
    case SetId::Integers:
      return add(GrossNumber::grosspower(Rational(2L), Rational(1L)), GrossNumber(1));
  }
  throw std::logic_error("unknown set id");
}

}  // namespace gross
