#include <doctest.h>

#include <random>
#include <string>

#include "gross/parser.hpp"
#include "support.hpp"

using namespace gross;
using gross::testing::G;

TEST_SUITE("parse") {
  TEST_CASE("implicit product binds below the power") {
    // "3G-2" is (3*G) - 2
    AstPtr ast = parse("3\xE2\x91\xA0-2");
    REQUIRE(ast->kind == AstKind::Sub);
    REQUIRE(ast->lhs->kind == AstKind::Mul);
    CHECK(ast->lhs->lhs->kind == AstKind::Number);
    CHECK(ast->lhs->lhs->value == Rational(3L));
    CHECK(ast->lhs->rhs->kind == AstKind::Grossone);
    CHECK(ast->rhs->kind == AstKind::Number);

    // "2G^3" is 2*(G^3), not (2G)^3
    CHECK(G("2G^3") == GrossNumber::grosspower(Rational(2L), Rational(3L)));
    CHECK(G("5G^3.1") == GrossNumber::grosspower(Rational(5L), Rational(31, 10)));
  }

  TEST_CASE("decimal exponents and explicit products") {
    GrossNumber x = G("\xE2\x91\xA0^3.1 + 4*\xE2\x91\xA0");
    GrossNumber expected = add(GrossNumber::grosspower(Rational(1L), Rational(31, 10)),
                               GrossNumber::grosspower(Rational(4L), Rational(1L)));
    CHECK(x == expected);
  }

  TEST_CASE("grossone spellings") {
    for (const char* s : {"\xE2\x91\xA0", "G", "grossone", "GROSSONE", "Grossone", "gRoSsOnE"}) {
      CAPTURE(s);
      CHECK(G(s) == GrossNumber::grossone());
    }
    CHECK_THROWS_AS(parse("g"), ParseError);
    CHECK_THROWS_AS(parse("gross"), ParseError);
  }

  TEST_CASE("decimal literals are exact rationals") {
    CHECK(G("3.1") == GrossNumber(Rational(31, 10)));
    CHECK(G("0.5") == GrossNumber(Rational(1, 2)));
    CHECK(G("50.1G^-10.2 + 16.38G^-20.3") ==
          add(GrossNumber::grosspower(Rational(501, 10), Rational(-51, 5)),
              GrossNumber::grosspower(Rational(819, 50), Rational(-203, 10))));
  }

  TEST_CASE("rational exponents need parentheses") {
    CHECK(G("G^(1/2)") == GrossNumber::grosspower(Rational(1L), Rational(1, 2)));
    CHECK(G("G^(-1/2)") == GrossNumber::grosspower(Rational(1L), Rational(-1, 2)));
    // without parentheses '/' is division: (G^1)/2
    CHECK(G("G^1/2") == GrossNumber::grosspower(Rational(1, 2), Rational(1L)));
  }

  TEST_CASE("power is right-associative") {
    CHECK(G("2^3^2") == GrossNumber(512));
    CHECK(G("G^2^3") == GrossNumber::grosspower(Rational(1L), Rational(8L)));
  }

  TEST_CASE("unary minus") {
    CHECK(G("-G") == neg(GrossNumber::grossone()));
    CHECK(G("--G") == GrossNumber::grossone());
    CHECK(G("2--3") == GrossNumber(5));
    CHECK(G("G^-1") == GrossNumber::grosspower(Rational(1L), Rational(-1L)));
  }

  TEST_CASE("positions are code points, not bytes") {
    try {
      parse("\xE2\x91\xA0^");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
    try {
      parse("G^");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
  }

  TEST_CASE("error positions and messages") {
    try {
      parse("");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 1);
    }
    try {
      parse("2**3");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
    try {
      parse("(1");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
      CHECK(e.expected() == "expected ')'");
    }
    try {
      parse("1 2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(parse("3."), ParseError);
    CHECK_THROWS_AS(parse("2(G)"), ParseError);  // implicit product is number-grossone only
    CHECK_THROWS_AS(parse("@"), ParseError);
  }

  TEST_CASE("whitespace is insignificant") {
    CHECK(G(" \tG  -  G ") == GrossNumber());
    CHECK(G("2 G") == G("2G"));
  }

  TEST_CASE("deep nesting is rejected, not a crash") {
    std::string s(5000, '(');
    s += "1";
    s.append(5000, ')');
    CHECK_THROWS_AS(parse(s), ParseError);
  }

  TEST_CASE("arbitrary bytes never crash the parser") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> byte(0, 255);
    const std::string alphabet = "0123456789.+-*/^()Gg \xE2\x91\xA0";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 10000; ++i) {
      std::string s;
      int n = len(rng);
      bool raw = i % 2 == 0;
      for (int j = 0; j < n; ++j) {
        s += raw ? static_cast<char>(byte(rng)) : alphabet[pick(rng)];
      }
      try {
        auto ast = parse(s);
        (void)ast;
      } catch (const ParseError&) {
        // fine: totality means Ast or ParseError
      }
    }
  }
}

TEST_SUITE("eval_ast") {
  TEST_CASE("identities through the full pipeline") {
    CHECK(G("\xE2\x91\xA0*\xE2\x91\xA0^-1") == GrossNumber(1));
    CHECK(G("(\xE2\x91\xA0^2-1)/(\xE2\x91\xA0-1)") == G("G+1"));
    CHECK(G("G/G") == GrossNumber(1));
    CHECK(G("1^G") == GrossNumber(1));
    CHECK(G("0^G") == GrossNumber());
    CHECK(G("G^0") == GrossNumber(1));
  }

  TEST_CASE("errors propagate") {
    CHECK_THROWS_AS(G("1/(G+1)"), Error);
    CHECK_THROWS_AS(G("1/0"), Error);
    CHECK_THROWS_AS(G("2^G"), Error);
    CHECK_THROWS_AS(G("0^-1"), Error);
    CHECK_THROWS_AS(G("(G+1)^-1"), Error);
    CHECK_THROWS_AS(G("2^(1/2)"), Error);
    CHECK_THROWS_AS(G("G^(G+1)"), Error);
  }

  TEST_CASE("grossone exponent rule is syntactic") {
    CHECK(G("1^(G)") == GrossNumber(1));      // parentheses do not hide the atom
    CHECK_THROWS_AS(G("1^(G+0)"), Error);     // a compound exponent is not the atom
  }

  TEST_CASE("fractional powers of single terms") {
    CHECK(G("(4G)^(1/2)") == GrossNumber::grosspower(Rational(2L), Rational(1, 2)));
    CHECK(G("(8G^2)^(1/3)") == GrossNumber::grosspower(Rational(2L), Rational(2, 3)));
    CHECK(G("4^(1/2)") == GrossNumber(2));
    CHECK(G("0^(1/2)") == GrossNumber());
  }
}

TEST_SUITE("format") {
  TEST_CASE("fixed renderings") {
    CHECK(format(GrossNumber(1)) == "1");
    CHECK(format(GrossNumber()) == "0");
    CHECK(format(GrossNumber(-1)) == "-1");

    GrossNumber x = add(GrossNumber::grosspower(Rational(5L), Rational(31, 10)), GrossNumber(1));
    CHECK(format(x) == "5\xE2\x91\xA0^(31/10) + 1");
    CHECK(format(x, Style::Ascii) == "5G^(31/10) + 1");

    CHECK(format(G("G")) == "\xE2\x91\xA0");
    CHECK(format(G("-G"), Style::Ascii) == "-G");
    CHECK(format(G("G/2"), Style::Ascii) == "G/2");
    CHECK(format(G("G^2/8 - 1"), Style::Ascii) == "G^2/8 - 1");
    CHECK(format(G("1.7G - 1.5"), Style::Ascii) == "17G/10 - 3/2");
    CHECK(format(G("3G^-1"), Style::Ascii) == "3G^-1");
    CHECK(format(G("G^(-1/2)"), Style::Ascii) == "G^(-1/2)");
    CHECK(format(G("-2G^2 + G - 7"), Style::Ascii) == "-2G^2 + G - 7");
  }

  TEST_CASE("machine records") {
    GrossNumber x = add(GrossNumber::grosspower(Rational(5L), Rational(31, 10)), GrossNumber(1));
    CHECK(format(x, Style::Machine) ==
          R"({"terms":[{"c":"5/1","p":"31/10"},{"c":"1/1","p":"0/1"}]})");
    CHECK(format(GrossNumber(), Style::Machine) == R"({"terms":[]})");
  }

  TEST_CASE("round-trip on random values") {
    gross::testing::Rng rng(20240818);
    for (int i = 0; i < 10000; ++i) {
      GrossNumber x = gross::testing::random_number(rng);
      CAPTURE(format(x));
      CHECK(G(format(x, Style::Unicode)) == x);
      CHECK(G(format(x, Style::Ascii)) == x);
    }
  }
}
