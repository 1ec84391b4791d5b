#include "ssred/congruence.hpp"

#include <string>

#include "ssred/combinat.hpp"
#include "ssred/error.hpp"

namespace ssred {

std::string_view to_string(BoundMode m) noexcept { return m == BoundMode::strict ? "strict" : "weak"; }

bool is_admissible(std::int64_t p, std::int64_t r, std::int64_t n) noexcept {
  if (!is_prime(p) || p < 5) return false;
  if (r < p || r > p * p - p - 1) return false;
  const std::int64_t b = n / p;
  return n <= r && 2 * n >= r + 2 * b + 2 && b <= p - 2;
}

CongruenceParams make_params(std::int64_t p, std::int64_t r, std::int64_t n, const Rational& vL, BoundMode mode) {
  require_prime(p, 5);
  if (r < p || r > p * p - p - 1) {
    throw Error(ErrorCode::invalid_range,
                "r = " + std::to_string(r) + " outside [p, p^2-p-1] = [" + std::to_string(p) + ", " +
                    std::to_string(p * p - p - 1) + "]");
  }
  CongruenceParams params;
  params.p = p;
  params.r = r;
  params.n = n;
  params.b = n >= 0 ? n / p : 0;
  params.eps = n - params.b * p;
  params.mode = mode;
  if (n > r || 2 * n < r + 2 * params.b + 2) {
    throw Error(ErrorCode::invalid_window, "n = " + std::to_string(n) + " outside [r/2 + b + 1, r] with b = " +
                                               std::to_string(params.b) + ", r = " + std::to_string(r));
  }
  if (params.b > p - 2) throw Error(ErrorCode::unsupported_digit, "b = " + std::to_string(params.b) + " > p - 2");

  const Rational bound = make_rational(r, 2) - n;
  const int c = cmp(vL, bound);
  if ((mode == BoundMode::strict && c >= 0) || (mode == BoundMode::weak && c > 0)) {
    throw Error(ErrorCode::vl_bound, "vL = " + to_string(vL) + (mode == BoundMode::strict ? " must be < " : " must be <= ") +
                                         "r/2 - n = " + to_string(bound));
  }
  params.vL = vL;
  params.vL.canonicalize();
  params.v_fall = vp(falling_factorial(Integer(n), params.b + 1), p);
  params.x = bound - params.v_fall - params.vL;
  params.x.canonicalize();

  // x >= -vFall >= -1 and n - vFall > r/2 follow from the hypotheses.
  if (params.x < -params.v_fall || params.v_fall > 1 || 2 * (n - params.v_fall) <= r) {
    throw Error(ErrorCode::invalid_window, "derived bounds on x fail for n = " + std::to_string(n));
  }
  return params;
}

namespace {

void check_star_degree(const CongruenceParams& params, std::int64_t j) {
  if (j < params.ceil_half_r() - 1 || j > params.n - 1) {
    throw Error(ErrorCode::invalid_degree, "j = " + std::to_string(j) + " outside [ceil(r/2)-1, n-1] = [" +
                                               std::to_string(params.ceil_half_r() - 1) + ", " +
                                               std::to_string(params.n - 1) + "]");
  }
}

Integer sign(std::int64_t e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace

Rational star_full(const CongruenceParams& params, std::int64_t j) {
  check_star_degree(params, j);
  const std::int64_t p = params.p;
  const std::int64_t b = params.b;
  const std::int64_t n = params.n;
  const Rational pH = Rational(p) * harmonic(params.eps);
  const Integer fact = factorial(b + 1);
  const Integer outer_sign = sign(b + 1);

  Rational bracket = Rational(outer_sign * stirling2(n - j, b + 1) * fact);
  bracket += pH * Rational(outer_sign * stirling2(n - j + 1, b + 1) * fact);
  bracket -= Rational(outer_sign * ipow(b + 1, n - j));
  bracket -= pH * Rational(outer_sign * ipow(b + 1, n - j + 1));

  Rational out = Rational(binom((b + 1) * p - 1, n) * sign(n)) * bracket - Rational(ipow(b + 1, n - j));
  out.canonicalize();
  return out;
}

std::int64_t star_mod_p2(const CongruenceParams& params, std::int64_t j) {
  check_star_degree(params, j);
  const std::int64_t p = params.p;
  const std::int64_t b = params.b;
  const std::int64_t n = params.n;
  const Integer fact = factorial(b + 1);
  Rational value = -Rational(stirling2(n - j, b + 1) * fact);
  value -= Rational(p) * harmonic(params.eps) * Rational(stirling2(n - j, b) * fact);
  return residue(value, p * p);
}

namespace {

CongruenceTerm make_term(const CongruenceParams& params, std::int64_t a, std::int64_t j, Rational coefficient) {
  coefficient.canonicalize();
  CongruenceTerm t;
  t.a = a;
  t.j = j;
  t.slack = vp_total(coefficient, params.p) - Rational(params.v_fall);
  t.total_val = t.slack + ValP(Rational(params.half_r() - j));
  t.unit_residue = unit_part_residue(coefficient, params.p, params.p * params.p);
  t.coefficient = std::move(coefficient);
  return t;
}

}  // namespace

std::vector<CongruenceTerm> master_terms(const CongruenceParams& params) {
  if (params.mode != BoundMode::strict) {
    throw Error(ErrorCode::vl_bound, "the master congruence needs strict-mode parameters");
  }
  const std::int64_t p = params.p;
  const std::int64_t b = params.b;
  const std::int64_t n = params.n;
  const std::int64_t lo = params.ceil_half_r();
  std::vector<CongruenceTerm> terms;

  const Integer shared = binom((b + 1) * p, n + 1) * (n + 1) * factorial(b);
  for (std::int64_t a = 1; a <= params.eps; ++a) {
    for (std::int64_t j = lo; j <= n - 1; ++j) {
      Rational c(Integer(binom(n, j) * binom(params.eps, a) * sign(a + j + b + 1) * shared * stirling2(n - j, b)),
                 Integer(a));
      terms.push_back(make_term(params, a, j, std::move(c)));
    }
  }
  for (std::int64_t j = lo - 1; j <= n - 1; ++j) {
    Rational c = Rational(binom(n, j) * sign(n - j)) * star_full(params, j);
    terms.push_back(make_term(params, 0, j, std::move(c)));
  }
  return terms;
}

}  // namespace ssred
