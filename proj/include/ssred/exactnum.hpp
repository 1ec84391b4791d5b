#pragma once

// Exact integer and rational arithmetic with p-adic valuations.
//
// Integers and rationals are GMP values; every rational handed out by this
// library is canonical (positive denominator, coprime parts, zero is 0/1).
// Small quantities such as primes, degrees and indices are plain int64_t.

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ssred {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a/b" or "a" exactly. Decimal notation is rejected.
Rational parse_rational(const std::string& text);

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_prime(std::int64_t p) noexcept;

/// Throws invalid_prime unless p is a prime >= min_prime.
void require_prime(std::int64_t p, std::int64_t min_prime = 2);

/// A p-adic valuation: a rational, or +infinity for the valuation of zero.
class ValP {
 public:
  ValP() = default;
  ValP(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit ValP(Rational v) : value_(std::move(v)) { value_.canonicalize(); }

  static ValP infinity() {
    ValP v;
    v.infinite_ = true;
    return v;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws invalid_argument on +infinity.
  const Rational& value() const;

  friend ValP operator+(const ValP& a, const ValP& b);
  friend ValP operator-(const ValP& a, const Rational& b);

  friend bool operator==(const ValP& a, const ValP& b);
  friend std::strong_ordering operator<=>(const ValP& a, const ValP& b);

  /// "inf" or the canonical rational text.
  std::string str() const;
  static ValP parse(const std::string& text);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// v_p of a nonzero integer.
std::int64_t vp(const Integer& a, std::int64_t p);
/// v_p(num) - v_p(den) of a nonzero rational. Throws invalid_argument on zero.
std::int64_t vp(const Rational& q, std::int64_t p);
/// Total version: +infinity on zero.
ValP vp_total(const Rational& q, std::int64_t p);

/// Legendre's formula: sum over e >= 1 of floor(n / p^e).
std::int64_t vp_factorial(std::int64_t n, std::int64_t p);

/// n (n - 1) ... (n - m + 1); empty product is 1. n may be negative.
Integer falling_factorial(const Integer& n, std::int64_t m);

Integer factorial(std::int64_t n);

/// Exact C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binom(std::int64_t n, std::int64_t k);
/// C(n, k) reduced into [0, modulus).
std::int64_t binom_mod(std::int64_t n, std::int64_t k, std::int64_t modulus);

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(std::int64_t n);

/// Image of a rational in Z/modulus, in [0, modulus). The denominator must
/// be invertible modulo `modulus`; throws invalid_argument otherwise.
std::int64_t residue(const Rational& q, std::int64_t modulus);
std::int64_t residue(const Integer& a, std::int64_t modulus);

/// q / p^{v_p(q)} reduced mod `modulus` (0 for q == 0).
std::int64_t unit_part_residue(const Rational& q, std::int64_t p, std::int64_t modulus);

/// Exact p^e for e >= 0.
Integer ipow(std::int64_t base, std::int64_t e);

/// Floor division for signed integers.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ssred
