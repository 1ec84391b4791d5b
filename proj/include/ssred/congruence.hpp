#pragma once

// Coefficients and valuations of the master congruence, the kill audits
// built on it, and the exact inequality suites that support it.
//
// The L-invariant never appears as a field element: only its valuation vL
// enters, and every surviving coefficient is linear in L. A term is
//   p^{x + n - j} * C * L * (z - a)^j  on  a + pZ_p
// and everything is phrased through its slack
//   slack = totalVal - (r/2 - j) = v_p(C) - v_p([n]_{b+1}),
// which does not depend on vL.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssred/exactnum.hpp"

namespace ssred {

enum class BoundMode {
  strict,  ///< vL <  r/2 - n
  weak,    ///< vL <= r/2 - n
};

std::string_view to_string(BoundMode m) noexcept;

struct CongruenceParams {
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;
  std::int64_t b = 0;    ///< floor(n / p)
  std::int64_t eps = 0;  ///< n - bp
  Rational vL;
  Rational x;                 ///< x + vL = r/2 - n - vFall
  std::int64_t v_fall = 0;    ///< v_p(n (n-1) ... (n-b))
  BoundMode mode = BoundMode::strict;

  Rational half_r() const { return make_rational(r, 2); }
  /// ceil(r/2): the lowest degree with a nontrivial sub-quotient.
  std::int64_t ceil_half_r() const { return (r + 1) / 2; }

  friend bool operator==(const CongruenceParams&, const CongruenceParams&) = default;
};

/// Validates the hypotheses p >= 5 prime, p <= r <= p^2 - p - 1,
/// r/2 + b + 1 <= n <= r, b <= p - 2 and the vL bound for `mode`.
CongruenceParams make_params(std::int64_t p, std::int64_t r, std::int64_t n, const Rational& vL,
                             BoundMode mode = BoundMode::strict);

/// Exact *_j from its defining formula. Needs ceil(r/2) - 1 <= j <= n - 1.
Rational star_full(const CongruenceParams& params, std::int64_t j);

/// -{n-j, b+1} (b+1)! - p H_eps {n-j, b} (b+1)!  reduced mod p^2.
std::int64_t star_mod_p2(const CongruenceParams& params, std::int64_t j);

struct CongruenceTerm {
  std::int64_t a = 0;  ///< support a + pZ_p; a = 0 is the second line
  std::int64_t j = 0;
  Rational coefficient;  ///< the L-free constant C
  ValP total_val;        ///< (r/2 - j - vFall) + v_p(C)
  ValP slack;            ///< v_p(C) - vFall
  std::int64_t unit_residue = 0;  ///< unit part of C mod p^2

  friend bool operator==(const CongruenceTerm&, const CongruenceTerm&) = default;
};

/// Every term of the master congruence for strict-mode parameters: the
/// a = 1..eps, ceil(r/2) <= j <= n-1 first line, then the a = 0 line with
/// ceil(r/2) - 1 <= j <= n - 1.
std::vector<CongruenceTerm> master_terms(const CongruenceParams& params);

// ---------------------------------------------------------------------------
// Kill audits

enum class KillMethod { trivial, shallow, good, bad, ugly };

std::string_view to_string(KillMethod m) noexcept;
KillMethod parse_kill_method(std::string_view s);

enum class Disposition {
  dead,             ///< slack > 0
  generator,        ///< the target, slack 0 with unit residue
  deeper_integral,  ///< below the target, slack >= 0
  below_range,      ///< j < ceil(r/2), slack >= 0
  residual,         ///< ugly phase one: integral term at degree cp, removed by phase two
  offending,        ///< violates the audit
};

std::string_view to_string(Disposition d) noexcept;
Disposition parse_disposition(std::string_view s);

struct TermDisposition {
  CongruenceTerm term;
  Disposition disposition = Disposition::offending;

  friend bool operator==(const TermDisposition&, const TermDisposition&) = default;
};

/// A named divisibility or valuation fact re-derived by an audit.
struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const AuditCheck&, const AuditCheck&) = default;
};

struct AuditPhase {
  CongruenceParams params;
  std::int64_t target_j = 0;
  std::vector<TermDisposition> terms;

  const TermDisposition* generator() const;
  friend bool operator==(const AuditPhase&, const AuditPhase&) = default;
};

struct KillAudit {
  KillMethod method = KillMethod::good;
  std::int64_t target_j = 0;  ///< j*
  std::int64_t target_i = 0;  ///< i* = r - j*
  std::vector<AuditPhase> phases;
  std::vector<AuditCheck> checks;
  bool passed = false;

  /// Human-readable reasons for a failed audit.
  std::vector<std::string> failures() const;

  friend bool operator==(const KillAudit&, const KillAudit&) = default;
};

/// Good method: vFall = 0 at n; kills i* = r - (n - b - 1).
KillAudit audit_good(std::int64_t p, std::int64_t r, std::int64_t n, const Rational& vL);
/// Bad method: n = 2p + 1 for 2p + 4 <= r <= 3p - 1; kills i* = r - 2p + 2.
KillAudit audit_bad(std::int64_t p, std::int64_t r, const Rational& vL);
/// Ugly method: n = cp + c then n' = cp + c + 1 for c in {1, 2} and
/// cp + c + 2 <= r <= (c+1)p - 1; kills i* = r - cp + 1.
KillAudit audit_ugly(std::int64_t p, std::int64_t r, const Rational& vL, std::int64_t c);

// ---------------------------------------------------------------------------
// Inequality suites

struct InequalityFamily {
  std::string name;
  bool base_ok = false;
  bool step_ok = false;
  std::string witness;

  bool passed() const { return base_ok && step_ok; }
  friend bool operator==(const InequalityFamily&, const InequalityFamily&) = default;
};

struct InequalityReport {
  std::int64_t p = 0, r = 0, n = 0;
  std::vector<InequalityFamily> families;

  bool passed() const;
};

/// Checks every valuation inequality family used by the telescoping and
/// locally-polynomial arguments for weak-mode admissible (p, r, n).
InequalityReport inequality_suite(std::int64_t p, std::int64_t r, std::int64_t n);

/// True when (p, r, n) satisfies every hypothesis except the vL bound.
bool is_admissible(std::int64_t p, std::int64_t r, std::int64_t n) noexcept;

}  // namespace ssred
