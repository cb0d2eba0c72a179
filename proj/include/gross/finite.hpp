#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gross/error.hpp"

namespace gross {

// Classical finite number theory used as ground truth by the classifier and
// the acceptance checks.

// Deterministic primality for the full 64-bit range (Miller-Rabin with a
// proven base set). 0 and 1 are not prime.
bool is_prime_small(std::uint64_t n);

// Smallest prime factor of n >= 2 (trial division + Pollard rho).
std::uint64_t smallest_prime_factor(std::uint64_t n);

// All primes <= n, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// All pairs (p, p+2) with both prime and p+2 <= limit, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_sieve(std::uint64_t limit);

// lcm(1..B).
mpz_class lcm_up_to(unsigned long B);

// Smallest prime <= bound dividing v (|v| after sign strip), if any.
std::optional<std::uint64_t> smallest_prime_factor_up_to(const mpz_class& v, std::uint64_t bound);

// Desk-scale stand-in run: N = lcm(1..B)^2 is divisible by every integer up
// to B, so whenever p^(2m+1) divides N the neighbors N/p^(2m+1) +- 1 must be
// free of prime factors <= B. An m with p^(2m+1) too large for the stand-in
// lies outside the analogue family (the stand-in's version of m <= M(p)) and
// is reported in_range = false; it is not a failure.
struct AnalogueReport {
  struct Case {
    long m = 0;
    bool in_range = true;  // p^(2m+1) divides the stand-in
    bool passed = false;
    std::optional<std::uint64_t> offending_prime;
  };

  unsigned long bound = 0;    // B
  mpz_class stand_in;         // N = lcm(1..B)^2
  unsigned long p = 0;
  std::vector<Case> cases;    // one per m in 0..m_max

  bool all_passed() const;
};

// Throws NotPrimeParameter when p is not prime, PrimeExceedsBound when p > B.
AnalogueReport finite_analogue_check(unsigned long B, unsigned long p, long m_max);

}  // namespace gross
