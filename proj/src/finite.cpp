#include "gross/finite.hpp"

#include <algorithm>
#include <numeric>

namespace gross {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin(u64 n, u64 a) {
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
    ++c;  // cycle hit the factor n itself; retry with a new polynomial
  }
}

}  // namespace

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Base set proven deterministic for all 64-bit integers.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

u64 smallest_prime_factor(u64 n) {
  if (n < 2) throw Error(ErrorKind::NotPrimeParameter, "no prime factor below 2");
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return p;
  }
  if (is_prime_small(n)) return n;
  // n is composite with no tiny factor: split recursively.
  u64 d = pollard_rho(n);
  u64 a = smallest_prime_factor(d);
  u64 b = smallest_prime_factor(n / d);
  return std::min(a, b);
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::pair<u64, u64>> twin_sieve(u64 limit) {
  std::vector<std::pair<u64, u64>> out;
  auto primes = primes_up_to(limit);
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    if (primes[i + 1] - primes[i] == 2) out.emplace_back(primes[i], primes[i + 1]);
  }
  return out;
}

mpz_class lcm_up_to(unsigned long B) {
  mpz_class acc = 1;
  for (unsigned long n = 2; n <= B; ++n) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), n);
  }
  return acc;
}

std::optional<u64> smallest_prime_factor_up_to(const mpz_class& v, u64 bound) {
  mpz_class a = abs(v);
  if (a <= 1) return std::nullopt;
  for (u64 p : primes_up_to(bound)) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p)) return p;
  }
  return std::nullopt;
}

bool AnalogueReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.passed; });
}

AnalogueReport finite_analogue_check(unsigned long B, unsigned long p, long m_max) {
  if (!is_prime_small(p)) {
    throw Error(ErrorKind::NotPrimeParameter, std::to_string(p) + " is not prime");
  }
  if (p > B) {
    throw Error(ErrorKind::PrimeExceedsBound,
                "p = " + std::to_string(p) + " exceeds bound B = " + std::to_string(B));
  }

  AnalogueReport report;
  report.bound = B;
  report.p = p;
  mpz_class l = lcm_up_to(B);
  report.stand_in = l * l;

  for (long m = 0; m <= m_max; ++m) {
    AnalogueReport::Case c;
    c.m = m;
    mpz_class divisor;
    mpz_ui_pow_ui(divisor.get_mpz_t(), p, 2 * static_cast<unsigned long>(m) + 1);
    if (!mpz_divisible_p(report.stand_in.get_mpz_t(), divisor.get_mpz_t())) {
      // beyond the stand-in's M(p): vacuous, nothing to test
      c.in_range = false;
      c.passed = true;
      report.cases.push_back(c);
      continue;
    }
    mpz_class x = report.stand_in / divisor;
    c.passed = true;
    for (const mpz_class& v : {mpz_class(x - 1), mpz_class(x + 1)}) {
      if (auto q = smallest_prime_factor_up_to(v, B)) {
        c.passed = false;
        c.offending_prime = q;
        break;
      }
    }
    report.cases.push_back(c);
  }
  return report;
}

}  // namespace gross
