#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gross/number.hpp"

namespace gross {

// Certificate that a value is a lambda-form q*G^k (q > 0 rational, k a
// positive integer): purely infinite, simple, positive, and divisible by
// every finite positive integer. These are the hypothesis class of the
// classification rules below.
struct LambdaCert {
  Rational q;
  long long k = 0;
  GrossNumber value;
};

struct SquarenessVerdict {
  enum class Kind { Square, NotSquare, Unknown };

  Kind kind = Kind::Unknown;
  GrossNumber root;                     // Square: root*root == value exactly
  std::uint64_t witness_prime = 0;      // NotSquare: unique prime with odd valuation
  std::string reason;                   // Unknown

  bool is_square() const { return kind == Kind::Square; }
};

// Classification outcome with a machine-checkable proof trace. Every trace
// step names the rule it applied (Theorem 1, Lemma 2, Lemma 3, the
// divisibility axiom, or the finite oracle).
struct PrimalityVerdict {
  enum class Kind { Prime, Composite, NotInteger, NotPositive, Unknown };
  enum class Rule { None, R1, R2, Finite };

  Kind kind = Kind::Unknown;
  Rule rule = Rule::None;
  GrossNumber witness;   // Composite: witness * cofactor == input exactly
  GrossNumber cofactor;
  std::string reason;    // Unknown
  std::vector<std::string> trace;

  bool is_prime() const { return kind == Kind::Prime; }
};

struct TwinPair {
  GrossNumber lower;  // lambda/p^(2m+1) - 1
  GrossNumber upper;  // lower + 2
  LambdaCert lambda;
  std::uint64_t p = 0;
  long long m = 0;
  PrimalityVerdict lower_verdict;
  PrimalityVerdict upper_verdict;
};

// Recognizes exactly the single terms q*G^k with q > 0 and integer k >= 1.
std::optional<LambdaCert> lambda_certify(const GrossNumber& x);

// Certifies squares via exact rational square roots; refutes via the unique
// odd-prime-valuation pattern (k even, exactly one prime with odd valuation
// in q). Everything else is an honest Unknown.
SquarenessVerdict squareness(const LambdaCert& cert);

// Decision tree over the unique decomposition x = X1 + x2:
//   R1: X1 a lambda-form, x2 = +1    -> Prime
//   R2: X1 a lambda-form, x2 = -1    -> Prime iff X1 is not a square;
//                                       square X1 factors as (r-1)(r+1)
//   offset 0 or |x2| >= 2            -> Composite with a divisor witness
//   purely finite                    -> finite oracle
// Verdicts are never guessed: anything outside the rules is Unknown.
PrimalityVerdict classify_prime(const GrossNumber& x);

// Builds (lambda/p^(2m+1) - 1, lambda/p^(2m+1) + 1) and verifies both
// members classify Prime. Requires a square lambda, a finite prime p, and
// m >= 0 (m = 0 admitted explicitly; default enumerations start at m = 1).
TwinPair make_twins(const LambdaCert& lambda, std::uint64_t p, long long m);

// First `count` members of A(p) = { lambda/p^(2m+1) }, m from m_start.
std::vector<GrossNumber> enumerate_A(const LambdaCert& lambda, std::uint64_t p,
                                     std::size_t count, long long m_start = 1);

// First 2*count members of B(p): the pairs (x-1, x+1) around each element
// of A(p) for m = 1..count. The total cardinality is not computed here.
std::vector<GrossNumber> enumerate_B(const LambdaCert& lambda, std::uint64_t p, std::size_t count);

enum class SetId { Naturals, Evens, Odds, Integers };

// Number of elements measured in grossone units: N has G, the evens and the
// odds have G/2 each, Z has 2G+1.
GrossNumber set_count(SetId id);

}  // namespace gross
