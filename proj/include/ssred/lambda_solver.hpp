#pragma once

// Interpolation coefficients lambda_i on the node set
// I = {0, 1, ..., n, (b + 1) p} annihilating every power z^j with j <= n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssred/exactnum.hpp"

namespace ssred {

struct LambdaVector {
  std::int64_t p = 0;
  std::int64_t b = 0;
  std::int64_t n = 0;
  /// lambda_0, ..., lambda_n. The coefficient at (b + 1) p is always -1.
  std::vector<Rational> entries;

  std::int64_t top_node() const noexcept { return (b + 1) * p; }
  /// I in increasing order; node z_i equals the index i.
  std::vector<std::int64_t> index_set() const;
  /// lambda at index i in I. Throws invalid_argument for i outside I.
  Rational at(std::int64_t i) const;

  friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
};

/// Exact solve of sum_{i <= n} x_i * nodes[i]^j = rhs[j], 0 <= j <= n, for
/// pairwise distinct integer nodes. Newton-style elimination on the
/// transposed Vandermonde matrix (O(n^2) exact operations).
std::vector<Rational> solve_vandermonde(std::span<const std::int64_t> nodes, std::span<const Rational> rhs);

/// Solves the lambda system exactly and verifies it. Requires p >= 5,
/// 0 <= b <= p - 2 and bp <= n <= (b + 1) p - 1.
LambdaVector solve_lambda(std::int64_t p, std::int64_t b, std::int64_t n);

/// (-1)^{n-i} (b+1)p / ((b+1)p - i) C((b+1)p - 1, n) C(n, i) for 0 <= i <= n.
Rational lambda_closed(std::int64_t p, std::int64_t b, std::int64_t n, std::int64_t i);

enum class BulletStatus {
  pass,
  fail,
  observed_pass,  ///< evaluated but not asserted
  observed_fail,  ///< evaluated but not asserted; a recorded deviation
};

std::string_view to_string(BulletStatus s) noexcept;

struct ResidueClassWitness {
  std::int64_t a = 0;
  std::int64_t j = 0;
  std::int64_t residue = 0;  ///< sum_{i = a mod p} lambda_i i^j mod p^2
};

struct BulletReport {
  std::int64_t p = 0, b = 0, n = 0;
  bool integral = false;
  bool top_is_minus_one = false;
  BulletStatus exact_vanishing = BulletStatus::fail;     // bullet one
  BulletStatus class_sums_mod_p2 = BulletStatus::fail;   // bullet two
  BulletStatus multiples_of_p = BulletStatus::fail;      // bullet three
  BulletStatus non_multiples = BulletStatus::fail;       // bullet four
  /// Bullet three's two mod p expressions agree.
  bool bullet_three_forms_agree = false;
  std::vector<ResidueClassWitness> class_sum_failures;

  /// Every asserted bullet passed.
  bool passed() const;
};

BulletReport verify_lambda(const LambdaVector& v);

}  // namespace ssred
