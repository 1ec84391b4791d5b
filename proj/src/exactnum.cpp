#include "ssred/exactnum.hpp"

#include <cctype>

#include "ssred/error.hpp"

namespace ssred {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_prime: return "invalid-prime";
    case ErrorCode::invalid_window: return "invalid-window";
    case ErrorCode::unsupported_digit: return "unsupported-digit";
    case ErrorCode::invalid_range: return "invalid-range";
    case ErrorCode::invalid_degree: return "invalid-degree";
    case ErrorCode::vl_bound: return "vL-bound";
    case ErrorCode::not_polynomial: return "not-polynomial";
    case ErrorCode::not_good_candidate: return "not-good-candidate";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::elimination_incomplete: return "elimination-incomplete";
    case ErrorCode::prediction_unavailable: return "prediction-unavailable";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::invalid_argument, "not an exact rational literal: '" + text + "'"); };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  Integer n, d;
  n.set_str(num[0] == '+' ? num.substr(1) : num, 10);
  d.set_str(den, 10);
  if (d == 0) throw bad();
  return make_rational(n, d);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

bool is_prime(std::int64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p, std::int64_t min_prime) {
  if (!is_prime(p) || p < min_prime) {
    throw Error(ErrorCode::invalid_prime,
                "p = " + std::to_string(p) + " is not a prime >= " + std::to_string(min_prime));
  }
}

const Rational& ValP::value() const {
  if (infinite_) throw Error(ErrorCode::invalid_argument, "valuation is +infinity");
  return value_;
}

ValP operator+(const ValP& a, const ValP& b) {
  if (a.infinite_ || b.infinite_) return ValP::infinity();
  return ValP(Rational(a.value_ + b.value_));
}

ValP operator-(const ValP& a, const Rational& b) {
  if (a.infinite_) return ValP::infinity();
  return ValP(Rational(a.value_ - b));
}

bool operator==(const ValP& a, const ValP& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ValP& a, const ValP& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ValP::str() const { return infinite_ ? "inf" : to_string(value_); }

ValP ValP::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return ValP(parse_rational(text));
}

std::int64_t vp(const Integer& a, std::int64_t p) {
  require_prime(p);
  if (a == 0) throw Error(ErrorCode::invalid_argument, "v_p(0) is infinite; use vp_total");
  Integer rest;
  Integer prime(static_cast<long>(p));
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t vp(const Rational& q, std::int64_t p) {
  if (q == 0) throw Error(ErrorCode::invalid_argument, "v_p(0) is infinite; use vp_total");
  return vp(q.get_num(), p) - vp(q.get_den(), p);
}

ValP vp_total(const Rational& q, std::int64_t p) {
  if (q == 0) {
    require_prime(p);
    return ValP::infinity();
  }
  return ValP(vp(q, p));
}

std::int64_t vp_factorial(std::int64_t n, std::int64_t p) {
  require_prime(p);
  if (n < 0) throw Error(ErrorCode::invalid_argument, "factorial of a negative integer");
  std::int64_t total = 0;
  for (std::int64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

Integer falling_factorial(const Integer& n, std::int64_t m) {
  if (m < 0) throw Error(ErrorCode::invalid_argument, "falling factorial length must be >= 0");
  Integer out = 1;
  Integer f = n;
  for (std::int64_t k = 0; k < m; ++k, --f) out *= f;
  return out;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "binom requires n >= 0");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::int64_t binom_mod(std::int64_t n, std::int64_t k, std::int64_t modulus) {
  return residue(binom(n, k), modulus);
}

Rational harmonic(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "harmonic number of a negative index");
  Rational h = 0;
  for (std::int64_t m = 1; m <= n; ++m) h += Rational(1, m);
  h.canonicalize();
  return h;
}

std::int64_t residue(const Integer& a, std::int64_t modulus) {
  if (modulus <= 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(modulus));
  return r.get_si();
}

std::int64_t residue(const Rational& q, std::int64_t modulus) {
  if (modulus <= 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  Integer inv;
  Integer m(static_cast<long>(modulus));
  if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0 && modulus != 1) {
    throw Error(ErrorCode::invalid_argument,
                "denominator of " + to_string(q) + " is not invertible mod " + std::to_string(modulus));
  }
  return residue(Integer(q.get_num() * inv), modulus);
}

std::int64_t unit_part_residue(const Rational& q, std::int64_t p, std::int64_t modulus) {
  if (q == 0) return 0;
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer prime(static_cast<long>(p));
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  return residue(make_rational(num, den), modulus);
}

Integer ipow(std::int64_t base, std::int64_t e) {
  if (e < 0) throw Error(ErrorCode::invalid_argument, "negative exponent in ipow");
  Integer out;
  Integer b(static_cast<long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

}  // namespace ssred
