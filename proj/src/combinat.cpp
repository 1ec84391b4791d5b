#include "ssred/combinat.hpp"

#include <algorithm>
#include <string>

#include "ssred/error.hpp"

namespace ssred {

std::int64_t lucas_mod_p(std::int64_t N, std::int64_t K, std::int64_t p) {
  require_prime(p);
  if (N < 0 || K < 0) throw Error(ErrorCode::invalid_argument, "lucas_mod_p requires N, K >= 0");
  std::int64_t out = 1;
  while (N > 0 || K > 0) {
    std::int64_t nd = N % p;
    std::int64_t kd = K % p;
    if (kd > nd) return 0;
    out = out * binom_mod(nd, kd, p) % p;
    N /= p;
    K /= p;
  }
  return out;
}

BinomModP2 binom_mod_p2(std::int64_t N, std::int64_t K, std::int64_t p) {
  require_prime(p);
  if (N < 0 || K < 0) throw Error(ErrorCode::invalid_argument, "binom_mod_p2 requires N, K >= 0");
  const std::int64_t p2 = p * p;
  const std::int64_t a = N / p;
  const std::int64_t r = N % p;
  const std::int64_t b = K / p;
  const std::int64_t s = K % p;
  if (s > r) return {binom_mod(N, K, p2), false};

  Rational correction = 1;
  correction += Rational(p * a) * (harmonic(r) - harmonic(r - s));
  correction += Rational(p * b) * (harmonic(r - s) - harmonic(s));
  Rational value = Rational(binom(a, b) * binom(r, s)) * correction;
  return {residue(value, p2), true};
}

Integer stirling2(std::int64_t t, std::int64_t s) {
  if (t < 0) throw Error(ErrorCode::invalid_argument, "stirling2 requires t >= 0");
  if (s < 0 || s > t) return 0;
  // row[k] holds {m brace k} for the current m.
  std::vector<Integer> row(static_cast<std::size_t>(s) + 1, 0);
  row[0] = 1;
  for (std::int64_t m = 1; m <= t; ++m) {
    for (std::int64_t k = std::min(m, s); k >= 1; --k) {
      row[k] = k * row[k] + row[k - 1];
    }
    row[0] = 0;
  }
  return row[s];
}

Integer stirling2_by_definition(std::int64_t t, std::int64_t s) {
  if (t < 0) throw Error(ErrorCode::invalid_argument, "stirling2 requires t >= 0");
  if (s < 0) return 0;
  Integer sum = 0;
  for (std::int64_t j = 0; j <= s; ++j) {
    Integer term = binom(s, j) * ipow(s - j, t);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Integer fact = factorial(s);
  if (sum % fact != 0) throw Error(ErrorCode::invalid_argument, "Stirling definition sum not divisible by s!");
  return sum / fact;
}

StirlingTable::StirlingTable(std::int64_t p, std::int64_t t_max, int precision) : p_(p), t_max_(t_max) {
  require_prime(p);
  if (t_max < 0 || precision < 1) throw Error(ErrorCode::invalid_argument, "bad StirlingTable shape");
  modulus_ = 1;
  for (int k = 0; k < precision; ++k) modulus_ *= p;

  rows_.resize(static_cast<std::size_t>(t_max) + 1);
  residues_.resize(rows_.size());
  rows_[0] = {Integer(1)};
  for (std::int64_t t = 1; t <= t_max; ++t) {
    auto& row = rows_[t];
    const auto& prev = rows_[t - 1];
    row.assign(static_cast<std::size_t>(t) + 1, 0);
    for (std::int64_t s = 1; s <= t; ++s) {
      Integer above = s < t ? prev[s] : Integer(0);
      row[s] = s * above + prev[s - 1];
    }
  }
  for (std::int64_t t = 0; t <= t_max; ++t) {
    residues_[t].reserve(rows_[t].size());
    for (const auto& v : rows_[t]) residues_[t].push_back(ssred::residue(v, modulus_));
  }
}

const Integer& StirlingTable::value(std::int64_t t, std::int64_t s) const {
  if (t < 0 || t > t_max_) {
    throw Error(ErrorCode::invalid_argument, "Stirling table does not cover t = " + std::to_string(t));
  }
  if (s < 0 || s > t) return zero_;
  return rows_[t][s];
}

std::int64_t StirlingTable::residue(std::int64_t t, std::int64_t s) const {
  if (t < 0 || t > t_max_) {
    throw Error(ErrorCode::invalid_argument, "Stirling table does not cover t = " + std::to_string(t));
  }
  if (s < 0 || s > t) return 0;
  return residues_[t][s];
}

bool StirlingTable::verify_recurrence() const {
  if (value(0, 0) != 1) return false;
  for (std::int64_t t = 1; t <= t_max_; ++t) {
    for (std::int64_t s = -1; s <= t + 1; ++s) {
      if (value(t, s) != s * value(t - 1, s) + value(t - 1, s - 1)) return false;
    }
    if (value(t, t) != 1) return false;
  }
  return true;
}

namespace {

template <typename Lookup>
std::pair<std::int64_t, std::int64_t> stirling_lucas_sides(Lookup&& mod_p, std::int64_t y, std::int64_t x,
                                                           std::int64_t i, std::int64_t p) {
  if (y < 0 || x < 0 || i < 0) throw Error(ErrorCode::invalid_argument, "stirling_lucas_check requires y, x, i >= 0");
  std::int64_t pj = 1;
  for (std::int64_t k = 0; k < i; ++k) pj *= p;
  std::int64_t lhs = mod_p(y + pj, x);
  std::int64_t rhs = mod_p(y + 1, x);
  std::int64_t pw = 1;
  for (std::int64_t j = 1; j <= i; ++j) {
    pw *= p;
    rhs = (rhs + mod_p(y, x - pw)) % p;
  }
  return {lhs, rhs};
}

}  // namespace

std::pair<std::int64_t, std::int64_t> stirling_lucas_check(std::int64_t y, std::int64_t x, std::int64_t i,
                                                           std::int64_t p) {
  require_prime(p);
  auto mod_p = [p](std::int64_t t, std::int64_t s) { return residue(stirling2(t, s), p); };
  return stirling_lucas_sides(mod_p, y, x, i, p);
}

std::pair<std::int64_t, std::int64_t> stirling_lucas_check(const StirlingTable& table, std::int64_t y,
                                                           std::int64_t x, std::int64_t i) {
  const std::int64_t p = table.prime();
  auto mod_p = [&table, p](std::int64_t t, std::int64_t s) { return table.residue(t, s) % p; };
  return stirling_lucas_sides(mod_p, y, x, i, p);
}

}  // namespace ssred
