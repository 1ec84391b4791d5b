#pragma once

// Lucas-type congruences for binomial coefficients and Stirling numbers of
// the second kind.

#include <cstdint>
#include <utility>
#include <vector>

#include "ssred/exactnum.hpp"

namespace ssred {

/// Classical Lucas: product over base-p digits of C(N_i, K_i), mod p.
std::int64_t lucas_mod_p(std::int64_t N, std::int64_t K, std::int64_t p);

struct BinomModP2 {
  std::int64_t value = 0;  ///< residue in [0, p^2)
  /// True when the digit hypothesis 0 <= s <= r' held and the value came
  /// from the mod p^2 Lucas formula; false for the exact fallback.
  bool lemma_path = false;
};

/// C(N, K) mod p^2. With N = pa + r', K = pb + s and 0 <= s <= r' <= p - 1:
///   C(a, b) C(r', s) (1 + pa (H_{r'} - H_{r'-s}) + pb (H_{r'-s} - H_s)).
/// Outside that hypothesis the exact binomial is reduced instead.
BinomModP2 binom_mod_p2(std::int64_t N, std::int64_t K, std::int64_t p);

/// Stirling number of the second kind {t brace s}, by the recurrence
/// {t, s} = s {t-1, s} + {t-1, s-1}. Zero for s < 0 or s > t.
Integer stirling2(std::int64_t t, std::int64_t s);

/// The defining alternating sum (1/s!) sum_j (-1)^j C(s, j) (s - j)^t,
/// evaluated exactly. Independent of stirling2; used to cross-check it.
Integer stirling2_by_definition(std::int64_t t, std::int64_t s);

/// Cached exact Stirling numbers {t brace s} for 0 <= s <= t <= t_max,
/// together with their residues mod p^precision.
class StirlingTable {
 public:
  StirlingTable(std::int64_t p, std::int64_t t_max, int precision = 2);

  std::int64_t prime() const noexcept { return p_; }
  std::int64_t t_max() const noexcept { return t_max_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  /// Exact value; zero outside 0 <= s <= t. Throws invalid_argument for t > t_max.
  const Integer& value(std::int64_t t, std::int64_t s) const;
  /// value(t, s) mod p^precision.
  std::int64_t residue(std::int64_t t, std::int64_t s) const;

  /// Re-checks the recurrence on every cached entry.
  bool verify_recurrence() const;

 private:
  std::int64_t p_;
  std::int64_t t_max_;
  std::int64_t modulus_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::vector<std::int64_t>> residues_;
  Integer zero_ = 0;
};

/// Both sides of {y + p^i brace x} = {y + 1 brace x} + sum_{j=1..i} {y brace x - p^j}
/// reduced mod p, returned as (lhs, rhs).
std::pair<std::int64_t, std::int64_t> stirling_lucas_check(std::int64_t y, std::int64_t x, std::int64_t i,
                                                           std::int64_t p);
/// Same, reading values from a table that covers t <= y + p^i.
std::pair<std::int64_t, std::int64_t> stirling_lucas_check(const StirlingTable& table, std::int64_t y,
                                                           std::int64_t x, std::int64_t i);

}  // namespace ssred
