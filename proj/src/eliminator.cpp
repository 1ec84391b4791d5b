#include "ssred/eliminator.hpp"

#include <string>

#include "ssred/error.hpp"

namespace ssred {

std::string_view to_string(SubquotientStatus s) noexcept {
  switch (s) {
    case SubquotientStatus::trivial: return "trivial";
    case SubquotientStatus::shallow: return "shallow";
    case SubquotientStatus::good: return "good";
    case SubquotientStatus::bad: return "bad";
    case SubquotientStatus::ugly: return "ugly";
    case SubquotientStatus::survivor: return "survivor";
  }
  return "unknown";
}

SubquotientStatus parse_status(std::string_view s) {
  for (auto st : {SubquotientStatus::trivial, SubquotientStatus::shallow, SubquotientStatus::good,
                  SubquotientStatus::bad, SubquotientStatus::ugly, SubquotientStatus::survivor}) {
    if (to_string(st) == s) return st;
  }
  throw Error(ErrorCode::invalid_argument, "unknown sub-quotient status '" + std::string(s) + "'");
}

std::string KillRecord::label() const {
  std::string out(to_string(method));
  if (witness_n.empty()) return out;
  out += "(";
  for (std::size_t k = 0; k < witness_n.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(witness_n[k]);
  }
  return out + ")";
}

std::optional<std::int64_t> KillTrace::survivor() const {
  std::optional<std::int64_t> found;
  for (const auto& e : entries) {
    if (e.status == SubquotientStatus::survivor) {
      if (found) return std::nullopt;
      found = e.index.i;
    }
  }
  return found;
}

std::vector<std::int64_t> KillTrace::duplicate_kills() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries) {
    if (e.kills.size() > 1) out.push_back(e.index.i);
  }
  return out;
}

std::string ReductionResult::pretty_label() const { return "ind ω₂^" + std::to_string(exponent); }

std::vector<CandidateRow> bad_candidate_table(std::int64_t p, std::int64_t c) {
  require_prime(p, 5);
  if (c < 1 || c > p - 3) {
    throw Error(ErrorCode::invalid_range, "candidate table needs 1 <= c <= p-3, got c = " + std::to_string(c));
  }
  std::vector<CandidateRow> rows;
  for (std::int64_t d = c; d >= 1; --d) {
    CandidateRow row;
    row.d = d;
    for (std::int64_t deg = d * p - d - 1; deg <= d * p - 1; ++deg) row.degrees.push_back(deg);
    row.flagged = row.degrees.front();
    // n = dp - 1 has b = d - 1 and reaches the same degree with vFall = 0.
    const std::int64_t n = d * p - 1;
    const std::int64_t b = n / p;
    row.flag_verified = n - b - 1 == row.flagged && vp(falling_factorial(Integer(n), b + 1), p) == 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational default_vL(std::int64_t r) { return make_rational(-(r + 1), 2); }

bool in_elimination_range(std::int64_t p, std::int64_t r) noexcept {
  return (r >= p + 3 && r <= 2 * p - 1) || (r >= 2 * p + 4 && r <= 3 * p - 1);
}

bool in_prediction_range(std::int64_t p, std::int64_t r) noexcept {
  return (r >= p + 3 && r <= 2 * p - 2) || (r >= 2 * p + 4 && r <= 3 * p - 1);
}

namespace {

void add_kill(KillTrace& trace, std::int64_t i, KillRecord rec) {
  if (i < 0 || i > trace.r) {
    throw Error(ErrorCode::elimination_incomplete, "kill targets index " + std::to_string(i) + " outside [0, r]");
  }
  auto& entry = trace.entries[i];
  if (entry.kills.empty()) {
    entry.status = static_cast<SubquotientStatus>(static_cast<int>(rec.method));
  }
  entry.kills.push_back(std::move(rec));
}

KillRecord audit_record(KillAudit audit, std::vector<std::int64_t> witness) {
  if (!audit.passed) {
    std::string why;
    for (const auto& f : audit.failures()) why += "; " + f;
    throw Error(ErrorCode::elimination_incomplete,
                std::string(to_string(audit.method)) + " audit failed for index " + std::to_string(audit.target_i) + why);
  }
  KillRecord rec{audit.method, std::move(witness), std::move(audit), std::nullopt};
  return rec;
}

}  // namespace

KillTrace run_elimination(std::int64_t p, std::int64_t r, const Rational& vL) {
  require_prime(p, 5);
  if (!in_elimination_range(p, r)) {
    throw Error(ErrorCode::invalid_range, "r = " + std::to_string(r) + " outside [p+3, 2p-1] u [2p+4, 3p-1] for p = " +
                                              std::to_string(p));
  }
  if (vL >= make_rational(-r, 2)) {
    throw Error(ErrorCode::vl_bound, "vL = " + to_string(vL) + " must be < -r/2");
  }
  KillTrace trace;
  trace.p = p;
  trace.r = r;
  trace.c = r / p;
  trace.vL = vL;
  trace.vL.canonicalize();
  for (std::int64_t i = 0; i <= r; ++i) trace.entries.push_back({{i, r - i}, SubquotientStatus::survivor, {}});

  const std::int64_t half = r / 2;
  const std::int64_t c = trace.c;

  for (std::int64_t i = half + 1; i <= r; ++i) add_kill(trace, i, {KillMethod::trivial, {}, std::nullopt, std::nullopt});

  for (std::int64_t i = 0; i <= c - 1; ++i) {
    ShallowReport rep = shallow_kill_check(p, r, i + 1);
    if (!rep.passed) {
      throw Error(ErrorCode::elimination_incomplete, "shallow check failed for index " + std::to_string(i));
    }
    add_kill(trace, i, {KillMethod::shallow, {}, std::nullopt, std::move(rep)});
  }

  for (std::int64_t n = half + 1; n <= r; ++n) {
    if (!is_admissible(p, r, n)) continue;
    if (vp(falling_factorial(Integer(n), n / p + 1), p) != 0) continue;
    KillAudit audit = audit_good(p, r, n, vL);
    const std::int64_t target = audit.target_i;
    add_kill(trace, target, audit_record(std::move(audit), {n}));
  }
  if (c == 2) {
    KillAudit audit = audit_bad(p, r, vL);
    const std::int64_t target = audit.target_i;
    add_kill(trace, target, audit_record(std::move(audit), {2 * p + 1}));
  }
  // At r = 2p - 1 the ugly target i = p already lies above r/2, and its first
  // phase degree n = p + 1 is outside the window; nothing is left for it to do.
  if (c * p - 1 >= (r + 1) / 2) {
    KillAudit audit = audit_ugly(p, r, vL, c);
    const std::int64_t target = audit.target_i;
    add_kill(trace, target, audit_record(std::move(audit), {c * p + c, c * p + c + 1}));
  }

  for (const auto& e : trace.entries) {
    if (e.index.i == c) {
      if (!e.kills.empty()) {
        throw Error(ErrorCode::elimination_incomplete,
                    "the expected survivor " + std::to_string(c) + " was killed by " + e.kills.front().label());
      }
    } else if (e.kills.empty()) {
      throw Error(ErrorCode::elimination_incomplete, "coverage gap at index " + std::to_string(e.index.i));
    }
  }
  return trace;
}

KillTrace run_elimination(std::int64_t p, std::int64_t r) { return run_elimination(p, r, default_vL(r)); }

ReductionResult predict(std::int64_t p, std::int64_t r) { return predict(p, r, default_vL(r)); }

ReductionResult predict(std::int64_t p, std::int64_t r, const Rational& vL) {
  require_prime(p, 5);
  if (!in_elimination_range(p, r)) {
    throw Error(ErrorCode::invalid_range, "r = " + std::to_string(r) + " outside [p+3, 2p-2] u [2p+4, 3p-1] for p = " +
                                              std::to_string(p));
  }
  ReductionResult out;
  out.p = p;
  out.r = r;
  out.weight = r + 2;
  out.trace = run_elimination(p, r, vL);
  out.survivor = *out.trace.survivor();

  // The surviving sub-quotient is a quotient of ind a^c d^{r-c} = ind d^{r-2c} (x) det^c;
  // it is irreducible unless r - 2c = 1 or p - 2 mod p - 1.
  auto& irr = out.irreducibility;
  irr.modulus = p - 1;
  irr.residue = mod_floor(r - 2 * out.survivor, p - 1);
  irr.excluded = {1, p - 2};
  irr.ok = irr.residue != 1 && irr.residue != p - 2;
  if (!irr.ok) {
    throw Error(ErrorCode::prediction_unavailable,
                r == 2 * p - 1 ? "r = 2p-1"
                               : "r - 2c = " + std::to_string(irr.residue) + " is excluded mod p-1");
  }
  out.exponent = r + 1;
  out.label = "ind omega2^" + std::to_string(out.exponent);
  return out;
}

}  // namespace ssred
