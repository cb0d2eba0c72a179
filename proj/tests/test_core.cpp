#include <doctest.h>

#include "gross/finite.hpp"
#include "gross/number.hpp"
#include "support.hpp"

using namespace gross;
using gross::testing::G;

namespace {

GrossNumber gp(long c, long d, long pn, long pd) {
  return GrossNumber::grosspower(Rational(c, d), Rational(pn, pd));
}

}  // namespace

TEST_SUITE("normalize") {
  TEST_CASE("merges like exponents") {
    GrossNumber x = normalize({{Rational(1L), Rational(1L)},
                               {Rational(2L), Rational(1L)},
                               {Rational(0L), Rational(5L)}});
    CHECK(x == G("3G"));
    CHECK(x.term_count() == 1);
  }

  TEST_CASE("empty input is zero") {
    CHECK(normalize({}).is_zero());
    CHECK(normalize({}) == GrossNumber());
  }

  TEST_CASE("sorts by decreasing exponent") {
    GrossNumber x = normalize({{Rational(1L), Rational(0L)}, {Rational(1L), Rational(2L)}});
    CHECK(x == G("G^2 + 1"));
    CHECK(x.leading().expo == Rational(2L));
  }

  TEST_CASE("cancellation leaves zero out of the term list") {
    GrossNumber x = normalize({{Rational(1L), Rational(3L)}, {Rational(-1L), Rational(3L)}});
    CHECK(x.is_zero());
  }
}

TEST_SUITE("add") {
  TEST_CASE("grossone minus grossone is zero") {
    CHECK(sub(G("G"), G("G")).is_zero());
    CHECK(sub(G("G^-1"), G("G^-1")).is_zero());
  }

  TEST_CASE("finite part cancellation") {
    CHECK(add(G("2G+1"), GrossNumber(-1)) == G("2G"));
  }

  TEST_CASE("neg flips every coefficient") {
    GrossNumber x = G("3G^2 - G + 1.5");
    CHECK(add(x, neg(x)).is_zero());
    CHECK(neg(neg(x)) == x);
  }
}

TEST_SUITE("mul") {
  TEST_CASE("grossone times its inverse") {
    CHECK(mul(G("G"), G("G^-1")) == GrossNumber(1));
    CHECK(mul(G("G^3.1"), G("G^-3.1")) == GrossNumber(1));
  }

  TEST_CASE("zero annihilates") {
    CHECK(mul(GrossNumber(), G("G")).is_zero());
    CHECK(mul(G("G"), GrossNumber()).is_zero());
    CHECK(mul(GrossNumber(), G("G^-1")).is_zero());
  }

  TEST_CASE("exponents add") {
    CHECK(mul(G("G"), G("G^-3.1")) == gp(1, 1, -21, 10));
    CHECK(mul(G("G^3.1"), G("G^-1")) == gp(1, 1, 21, 10));
  }
}

TEST_SUITE("div") {
  TEST_CASE("single-term divisor is term-wise") {
    CHECK(div(G("5 + G^-3.1"), G("G^-3.1")) == G("5G^3.1 + 1"));
    CHECK(div(G("G^3.1 + 4G"), G("G")) == G("G^2.1 + 4"));
    CHECK(div(G("G^3.1"), G("G^-3.1")) == G("G^6.2"));
    CHECK(div(G("G"), G("G")) == GrossNumber(1));
    CHECK(div(G("G^-1"), G("G^-1")) == GrossNumber(1));
  }

  TEST_CASE("long division recovers factors") {
    CHECK(div(G("G^2 - 1"), G("G - 1")) == G("G + 1"));
    CHECK(div(G("G^2 - 1"), G("G + 1")) == G("G - 1"));
    CHECK(div(G("G^2 + 2G + 1"), G("G + 1")) == G("G + 1"));
  }

  TEST_CASE("inexact quotients are rejected") {
    CHECK_THROWS_AS(div(GrossNumber(1), G("G + 1")), Error);
    try {
      div(GrossNumber(1), G("G + 1"));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotRepresentable);
    }
    CHECK_THROWS_AS(div(G("G^2 + 1"), G("G + 1")), Error);
  }

  TEST_CASE("division by zero") {
    try {
      div(G("G"), GrossNumber());
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }

  TEST_CASE("zero divided by anything nonzero is zero") {
    CHECK(div(GrossNumber(), G("G + 1")).is_zero());
  }
}

TEST_SUITE("pow") {
  TEST_CASE("zero exponent gives one") {
    CHECK(pow(G("G^3.1"), 0) == GrossNumber(1));
    CHECK(pow(G("G^-1"), 0) == GrossNumber(1));
    CHECK(pow(G("G"), 0) == GrossNumber(1));
    CHECK(pow(GrossNumber(), 0) == GrossNumber(1));
  }

  TEST_CASE("grossone exponent identities") {
    CHECK(pow_grossone(GrossNumber()).is_zero());
    CHECK(pow_grossone(GrossNumber(1)) == GrossNumber(1));
    try {
      pow_grossone(GrossNumber(2));
      FAIL("expected NotRepresentable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotRepresentable);
    }
  }

  TEST_CASE("binomial expansion") {
    CHECK(pow(G("G + 1"), 2) == G("G^2 + 2G + 1"));
    CHECK(pow(G("G - 1"), 3) == G("G^3 - 3G^2 + 3G - 1"));
  }

  TEST_CASE("negative exponents need a single term") {
    CHECK(pow(G("2G"), -1) == G("G^-1/2"));
    CHECK(pow(G("2G"), -2) == gp(1, 4, -2, 1));
    try {
      pow(G("G + 1"), -1);
      FAIL("expected NotRepresentable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotRepresentable);
    }
    try {
      pow(GrossNumber(), -1);
      FAIL("expected ZeroToNegativePower");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ZeroToNegativePower);
    }
  }
}

TEST_SUITE("cmp") {
  TEST_CASE("ordering chain prefix") {
    const char* chain[] = {"G/2", "G-1", "G", "G+1", "2G+1", "2G^2-1", "2G^2", "2G^2+1", "2G^2+2"};
    for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
      CAPTURE(chain[i]);
      CHECK(cmp(G(chain[i]), G(chain[i + 1])) == Ordering::Less);
      CHECK(cmp(G(chain[i + 1]), G(chain[i])) == Ordering::Greater);
    }
  }

  TEST_CASE("grosspower ordering row") {
    const char* row[] = {"G^3.1", "G^1", "1", "G^-1", "G^-3.1", "0"};
    for (std::size_t i = 0; i + 1 < std::size(row); ++i) {
      CHECK(cmp(G(row[i]), G(row[i + 1])) == Ordering::Greater);
    }
  }

  TEST_CASE("equality is reflexive") {
    for (const char* s : {"0", "G", "G^2 - G + 1/2", "-3G^-2"}) {
      CHECK(cmp(G(s), G(s)) == Ordering::Equal);
    }
  }
}

TEST_SUITE("decompose") {
  TEST_CASE("infinite and finite parts separate") {
    Decomposition d = decompose(G("1.7G - 1.5"));
    CHECK(d.infinite_part == G("1.7G"));
    CHECK(d.finite_part == Rational(-3, 2));
    CHECK(d.infinitesimal_part.is_zero());
    CHECK(d.recompose() == G("1.7G - 1.5"));
  }

  TEST_CASE("sign split") {
    Decomposition d = decompose(G("G + G^-1"));
    CHECK(d.infinite_part == G("G"));
    CHECK(d.finite_part.is_zero());
    CHECK(d.infinitesimal_part == G("G^-1"));
  }

  TEST_CASE("purely finite") {
    Decomposition d = decompose(GrossNumber(5));
    CHECK(d.infinite_part.is_zero());
    CHECK(d.finite_part == Rational(5L));
    CHECK(d.infinitesimal_part.is_zero());
  }
}

TEST_SUITE("classify_shape") {
  TEST_CASE("compound purely infinite") {
    ShapeClass s = classify_shape(G("G - 3G^(1/2)"));
    CHECK(s.is_purely_infinite);
    CHECK(s.is_compound);
    CHECK_FALSE(s.is_simple);
    CHECK_FALSE(s.is_finite);
  }

  TEST_CASE("compound with finite part") {
    ShapeClass s = classify_shape(G("G^2 + G + 3.5"));
    CHECK(s.is_compound);
    CHECK_FALSE(s.is_purely_infinite);
  }

  TEST_CASE("simple numbers") {
    ShapeClass half = classify_shape(G("G/2"));
    CHECK(half.is_simple);
    CHECK(half.is_purely_infinite);
    ShapeClass sq = classify_shape(G("G^2 + 1"));
    CHECK(sq.is_simple);
    CHECK_FALSE(sq.is_purely_infinite);
  }

  TEST_CASE("zero and finite") {
    ShapeClass z = classify_shape(GrossNumber());
    CHECK(z.is_zero);
    CHECK(z.is_finite);
    CHECK_FALSE(z.is_purely_infinite);
    ShapeClass f = classify_shape(GrossNumber(5));
    CHECK(f.is_finite);
    CHECK(f.is_simple);
    ShapeClass eps = classify_shape(G("1 + G^-1"));
    CHECK(eps.has_infinitesimal);
    CHECK_FALSE(eps.is_finite);
  }
}

TEST_SUITE("is_integer") {
  TEST_CASE("grossone over a finite integer") {
    CHECK(is_integer(G("G/2")) == Trilean::True);
    CHECK(is_integer(G("G^2/3")) == Trilean::True);
    CHECK(is_integer(G("7G/5")) == Trilean::True);
  }

  TEST_CASE("non-integer finite part") {
    CHECK(is_integer(G("G/2 + 1/2")) == Trilean::False);
    CHECK(is_integer(G("1/2")) == Trilean::False);
    CHECK(is_integer(G("G + 1/2")) == Trilean::False);
  }

  TEST_CASE("fractional grossone exponents are undecided") {
    CHECK(is_integer(G("G^(1/2)")) == Trilean::Unknown);
    CHECK(is_integer(G("G^3.1")) == Trilean::Unknown);
    CHECK(is_integer(G("G^(1/2) + 1/2")) == Trilean::False);  // the half makes it definite
  }

  TEST_CASE("infinitesimal parts are never integers") {
    CHECK(is_integer(G("G^-1")) == Trilean::False);
    CHECK(is_integer(G("G + G^-1")) == Trilean::False);
  }

  TEST_CASE("plain integers and zero") {
    CHECK(is_integer(GrossNumber(7)) == Trilean::True);
    CHECK(is_integer(GrossNumber()) == Trilean::True);
    CHECK(is_integer(G("G^2 + G + 3")) == Trilean::True);
  }
}

TEST_SUITE("divides") {
  TEST_CASE("every finite integer divides grossone") {
    CHECK(divides(GrossNumber(5), G("G")) == Trilean::True);
    CHECK(divides(GrossNumber(12), G("G/7")) == Trilean::True);
  }

  TEST_CASE("factor divides product") {
    CHECK(divides(G("G - 1"), G("G^2 - 1")) == Trilean::True);
    CHECK(divides(G("G + 1"), G("G^2 - 1")) == Trilean::True);
  }

  TEST_CASE("two does not divide grossone plus one") {
    // Quotient G/2 + 1/2 has a non-integer finite part. The finite analogue
    // agrees: lcm(1..B) is even, so lcm(1..B) + 1 is odd.
    CHECK(divides(GrossNumber(2), G("G + 1")) == Trilean::False);
    mpz_class analogue = lcm_up_to(10) + 1;
    CHECK(analogue % 2 == 1);
  }

  TEST_CASE("non-representable quotients of integers") {
    CHECK(divides(G("G - 1"), G("G + 1")) == Trilean::False);
    CHECK(divides(G("G - 1"), G("G^2 + 1")) == Trilean::False);
  }

  TEST_CASE("unknown when integrality is unknown") {
    CHECK(divides(G("G^(1/2)"), G("G")) == Trilean::Unknown);
    CHECK(divides(G("G - 1"), G("G^(1/2)")) == Trilean::Unknown);
  }

  TEST_CASE("zero divisor is an error") {
    try {
      divides(GrossNumber(), G("G"));
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }

  TEST_CASE("everything divides zero") {
    CHECK(divides(GrossNumber(3), GrossNumber()) == Trilean::True);
    CHECK(divides(G("G - 1"), GrossNumber()) == Trilean::True);
  }
}

TEST_SUITE("eval_at") {
  TEST_CASE("polynomial substitution") {
    CHECK(eval_at(G("G^2 - 1"), Rational(10L)) == Rational(99L));
    CHECK(eval_at(G("2G + 1"), Rational(5L)) == Rational(11L));
    CHECK(eval_at(G("G^-1"), Rational(4L)) == Rational(1, 4));
    CHECK(eval_at(GrossNumber(), Rational(7L)) == Rational());
  }

  TEST_CASE("rejects fractional exponents") {
    try {
      eval_at(G("G^3.1"), Rational(2L));
      FAIL("expected NonIntegerExponent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonIntegerExponent);
    }
  }

  TEST_CASE("rejects non-positive points") {
    for (long t : {0L, -1L}) {
      try {
        eval_at(G("G"), Rational(t));
        FAIL("expected NonPositivePoint");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositivePoint);
      }
    }
  }
}
