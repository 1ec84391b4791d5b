#include <string>

#include "ssred/congruence.hpp"
#include "ssred/error.hpp"

namespace ssred {

bool InequalityReport::passed() const {
  if (families.empty()) return false;
  for (const auto& f : families) {
    if (!f.passed()) return false;
  }
  return true;
}

namespace {

std::string s(std::int64_t v) { return std::to_string(v); }

/// p^e compared against `rhs` for a possibly negative integer exponent:
/// returns sign(p^e - rhs) without leaving the integers.
int cmp_power(std::int64_t p, std::int64_t e, const Integer& rhs) {
  if (e >= 0) return cmp(ipow(p, e), rhs);
  // p^e < 1 <= rhs whenever rhs >= 1.
  if (rhs >= 1) return -1;
  return cmp(Integer(1), rhs * ipow(p, -e));
}

}  // namespace

InequalityReport inequality_suite(std::int64_t p, std::int64_t r, std::int64_t n) {
  // The weakest admissible valuation, vL = r/2 - n, is the weak-mode boundary.
  const CongruenceParams params = make_params(p, r, n, make_rational(r, 2) - n, BoundMode::weak);
  const std::int64_t b = params.b;
  const std::int64_t vf = params.v_fall;
  InequalityReport rep{p, r, n, {}};

  // Near z_0: p^{-vFall + 2(n - r/2) + l} > n + l for l >= 1.
  {
    const std::int64_t e = 2 * n - r - vf;
    InequalityFamily f{"telescoping-near", false, false, ""};
    f.base_ok = cmp_power(p, e + 1, Integer(n + 1)) > 0 && e + 1 >= 2;
    // Forward difference of the left side, p^{e+l}(p-1), grows with l; the
    // right side grows by exactly 1.
    f.step_ok = cmp(Integer(ipow(p, e + 1) * (p - 1)), Integer(1)) > 0;
    for (std::int64_t l = 1; l <= 8 && f.base_ok; ++l) f.base_ok = cmp_power(p, e + l, Integer(n + l)) > 0;
    f.witness = "p^" + s(e + 1) + " > " + s(n + 1);
    rep.families.push_back(std::move(f));
  }

  // Far from z_0: 2(n - 1 - r/2 + l) - vFall > (n - 1 + l)/(p - 1), halves cleared.
  {
    InequalityFamily f{"telescoping-far", false, false, ""};
    f.base_ok = (2 * n - r - vf) * (p - 1) > n;
    f.step_ok = 2 * (p - 1) > 1;
    f.witness = "(" + s(2 * n - r - vf) + ")(p-1) = " + s((2 * n - r - vf) * (p - 1)) + " > " + s(n);
    rep.families.push_back(std::move(f));
  }
  {
    // Reduced via n - r/2 >= b + 1, keeping vFall: (2b + 2 - vFall)(p-1) > n.
    // With vFall = 1 this is 2b + 1 > n/(p-1); that printed form bounds vFall
    // by 1 and fails at b = 0, n = p - 1, where vFall = 0.
    InequalityFamily f{"telescoping-far-reduced", false, false, ""};
    f.base_ok = (2 * b + 2 - vf) * (p - 1) > n;
    f.step_ok = 2 * p - 3 > 0;
    f.witness = "2b+2-vFall = " + s(2 * b + 2 - vf) + " > n/(p-1) = " + s(n) + "/" + s(p - 1);
    if ((2 * b + 1) * (p - 1) <= n) f.witness += "; 2b+1 > n/(p-1) alone fails";
    rep.families.push_back(std::move(f));
  }

  // Locally polynomial part: p^{-1 + r/2 - n + m + l - v_p(j!)} > l for
  // l >= n - m + 1. The base exponent is r/2 - v_p(j!); the right side is
  // largest at m = 0. Squared to clear r/2.
  {
    InequalityFamily f{"qp-zp", true, true, ""};
    const std::int64_t chain = r - 2 * vp_factorial(r, p);
    bool chain_ok = cmp_power(p, chain, Integer((r + 1) * (r + 1))) > 0;
    for (std::int64_t j = 0; j <= n - 1; ++j) {
      const std::int64_t e2 = r - 2 * vp_factorial(j, p);
      if (cmp_power(p, e2, Integer((n + 1) * (n + 1))) <= 0) {
        f.base_ok = false;
        f.witness = "fails at j = " + s(j);
      }
      if (e2 < 0 || cmp(Integer(ipow(p, e2) * (p - 1) * (p - 1)), Integer(1)) <= 0) f.step_ok = false;
    }
    f.base_ok = f.base_ok && chain_ok;
    if (f.witness.empty()) f.witness = "p^(r - 2 v_p(r!)) = " + s(p) + "^" + s(chain) + " > (r+1)^2";
    rep.families.push_back(std::move(f));
  }

  // Master congruence, i != a mod p: p^{-r/2 + j - vFall + l} >= l for
  // l >= n - j + 1, compared as printed (>=). Base exponent n - r/2 + 1 - vFall.
  {
    InequalityFamily f{"proposition", false, false, ""};
    const std::int64_t e2 = 2 * n - r + 2 - 2 * vf;
    const bool squared = cmp_power(p, e2, Integer((n + 1) * (n + 1))) >= 0;
    const bool chain_exp = 2 * n - r >= 2 * b + 2;
    const bool chain_pow = cmp_power(p, b + 2 - vf, Integer(r + 1)) >= 0;
    f.base_ok = squared && chain_exp && chain_pow && r + 1 >= n + 1;
    f.step_ok = e2 >= 0 && cmp(Integer(ipow(p, e2) * (p - 1) * (p - 1)), Integer(1)) > 0;
    f.witness = "p^(b+2-vFall) = " + s(p) + "^" + s(b + 2 - vf) + " >= r+1 = " + s(r + 1);
    rep.families.push_back(std::move(f));
  }

  // Consequences of the hypotheses on x and n.
  {
    InequalityFamily f{"bound-on-x", false, true, "no inductive step"};
    f.base_ok = params.x >= -vf && vf <= 1 && 2 * (n - vf) > r && r >= 2 * (b + 1);
    rep.families.push_back(std::move(f));
  }

  // v_p(H_n) >= -floor(log_p n) >= -1 >= r/2 - n.
  {
    InequalityFamily f{"harmonic-bound", false, true, "no inductive step"};
    std::int64_t log_floor = 0;
    for (std::int64_t q = n / p; q > 0; q /= p) ++log_floor;
    const ValP vh = vp_total(harmonic(n), p);
    f.base_ok = vh >= ValP(-log_floor) && log_floor <= 1 && -2 >= r - 2 * n;
    f.witness = "v_p(H_n) = " + vh.str();
    rep.families.push_back(std::move(f));
  }
  return rep;
}

}  // namespace ssred
