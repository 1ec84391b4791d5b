#pragma once

// The elimination procedure over the sub-quotients F_{2i, 2i+1}: trivial and
// shallow kills, then good / bad / ugly audits on the deeper ones, leaving a
// single survivor whose index fixes the predicted reduction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssred/congruence.hpp"
#include "ssred/exactnum.hpp"
#include "ssred/fp_poly.hpp"

namespace ssred {

/// Sub-quotient F_{2i, 2i+1}; its generator on pZ_p has degree j = r - i.
struct SubquotientIndex {
  std::int64_t i = 0;
  std::int64_t j = 0;
};

enum class SubquotientStatus { trivial, shallow, good, bad, ugly, survivor };

std::string_view to_string(SubquotientStatus s) noexcept;
SubquotientStatus parse_status(std::string_view s);

/// One way a sub-quotient was eliminated, with its evidence.
struct KillRecord {
  KillMethod method = KillMethod::trivial;
  std::vector<std::int64_t> witness_n;   ///< n for good/bad, (n, n') for ugly
  std::optional<KillAudit> audit;        ///< good / bad / ugly
  std::optional<ShallowReport> shallow;  ///< shallow

  std::string label() const;  ///< e.g. "good(8)", "ugly(6,7)"
  friend bool operator==(const KillRecord&, const KillRecord&) = default;
};

struct SubquotientEntry {
  SubquotientIndex index;
  SubquotientStatus status = SubquotientStatus::survivor;
  /// All kills in the order they were applied; the first one sets `status`.
  std::vector<KillRecord> kills;

  const KillRecord* primary() const { return kills.empty() ? nullptr : &kills.front(); }
  friend bool operator==(const SubquotientEntry& a, const SubquotientEntry& b) {
    return a.index.i == b.index.i && a.index.j == b.index.j && a.status == b.status && a.kills == b.kills;
  }
};

struct KillTrace {
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t c = 0;  ///< floor(r / p)
  Rational vL;
  std::vector<SubquotientEntry> entries;  ///< i = 0..r

  std::optional<std::int64_t> survivor() const;
  /// Indices killed by more than one method.
  std::vector<std::int64_t> duplicate_kills() const;

  friend bool operator==(const KillTrace&, const KillTrace&) = default;
};

struct IrreducibilityCheck {
  std::int64_t modulus = 0;  ///< p - 1
  std::int64_t residue = 0;  ///< (r - 2c) mod (p - 1)
  std::vector<std::int64_t> excluded;  ///< {1, p - 2}
  bool ok = false;

  friend bool operator==(const IrreducibilityCheck&, const IrreducibilityCheck&) = default;
};

struct ReductionResult {
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t weight = 0;  ///< k = r + 2
  std::int64_t survivor = 0;
  std::int64_t exponent = 0;  ///< r + 1
  std::string label;          ///< "ind omega2^{r+1}"
  IrreducibilityCheck irreducibility;
  KillTrace trace;

  std::string pretty_label() const;  ///< with the Unicode omega
  friend bool operator==(const ReductionResult&, const ReductionResult&) = default;
};

struct CandidateRow {
  std::int64_t d = 0;
  std::vector<std::int64_t> degrees;  ///< dp - d - 1, ..., dp - 1
  std::int64_t flagged = 0;           ///< first entry: also reached with vFall = 0
  bool flag_verified = false;         ///< n = dp - 1 really has vFall = 0
};

/// Degrees n - b - 1 with vFall(n) = 1, one row per d = c, c-1, ..., 1.
/// Requires 1 <= c <= p - 3.
std::vector<CandidateRow> bad_candidate_table(std::int64_t p, std::int64_t c);

/// -(r + 1)/2: the default valuation, just below -r/2.
Rational default_vL(std::int64_t r);

/// True when r lies in [p+3, 2p-1] or [2p+4, 3p-1].
bool in_elimination_range(std::int64_t p, std::int64_t r) noexcept;
/// True when r lies in [p+3, 2p-2] or [2p+4, 3p-1].
bool in_prediction_range(std::int64_t p, std::int64_t r) noexcept;

/// Runs every kill and certifies the survivor c = floor(r/p). Requires p >= 5
/// prime, r in the elimination range and vL < -r/2. Throws
/// elimination_incomplete when an audit fails or an index is left uncovered.
KillTrace run_elimination(std::int64_t p, std::int64_t r, const Rational& vL);
KillTrace run_elimination(std::int64_t p, std::int64_t r);

/// The predicted reduction ind omega2^{r+1}. Throws prediction_unavailable
/// for r = 2p - 1 and invalid_range outside the theorem range.
ReductionResult predict(std::int64_t p, std::int64_t r);
ReductionResult predict(std::int64_t p, std::int64_t r, const Rational& vL);

}  // namespace ssred
