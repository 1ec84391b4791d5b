#pragma once

// Exhaustive desk-scale sweeps behind `ssred verify <lemma>`.

#include <cstdint>
#include <string>
#include <vector>

namespace ssred {

struct VerifySummary {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failure_count = 0;
  std::vector<std::string> failures;  ///< the first few, for the report
  std::vector<std::string> notes;     ///< recorded observations that are not asserted

  bool passed() const { return failure_count == 0 && cases > 0; }
  void fail(std::string what);
  void merge(VerifySummary other);
};

/// binom_mod_p2 against exact binomials for 0 <= K <= N < p^2 (lemma path
/// only), and lucas_mod_p against exact binomials for N < p^2.
VerifySummary sweep_lucas2(const std::vector<std::int64_t>& primes, unsigned jobs = 1);

/// stirling_lucas_check for y <= 2p, x <= y + p^i and each i in `exponents`,
/// plus the recurrence on the cached table.
VerifySummary sweep_stirling_lucas(const std::vector<std::int64_t>& primes, const std::vector<std::int64_t>& exponents,
                                   unsigned jobs = 1);

/// solve_lambda == lambda_closed and the bullet checks for every valid (b, n).
/// Bullet two at b = 0 is recorded in the notes.
VerifySummary sweep_lambda(const std::vector<std::int64_t>& primes, unsigned jobs = 1);

/// shallow_kill_check for 1 <= i <= floor(r/p), i(p+1)-1 <= r <= p^2-p-1,
/// plus the r = p - 1, lambda = 0 negative case.
VerifySummary sweep_shallow(const std::vector<std::int64_t>& primes, unsigned jobs = 1);

/// star_full against star_mod_p2 and the mod p / mod p^2 case table for every
/// admissible (r, n, j).
VerifySummary sweep_star(const std::vector<std::int64_t>& primes, unsigned jobs = 1);

/// inequality_suite for every admissible (r, n).
VerifySummary sweep_inequalities(const std::vector<std::int64_t>& primes, unsigned jobs = 1);

}  // namespace ssred
