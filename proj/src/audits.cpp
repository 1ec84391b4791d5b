#include <string>

#include "ssred/combinat.hpp"
#include "ssred/congruence.hpp"
#include "ssred/error.hpp"

namespace ssred {

std::string_view to_string(KillMethod m) noexcept {
  switch (m) {
    case KillMethod::trivial: return "trivial";
    case KillMethod::shallow: return "shallow";
    case KillMethod::good: return "good";
    case KillMethod::bad: return "bad";
    case KillMethod::ugly: return "ugly";
  }
  return "unknown";
}

KillMethod parse_kill_method(std::string_view s) {
  for (auto m : {KillMethod::trivial, KillMethod::shallow, KillMethod::good, KillMethod::bad, KillMethod::ugly}) {
    if (to_string(m) == s) return m;
  }
  throw Error(ErrorCode::invalid_argument, "unknown kill method '" + std::string(s) + "'");
}

std::string_view to_string(Disposition d) noexcept {
  switch (d) {
    case Disposition::dead: return "dead";
    case Disposition::generator: return "generator";
    case Disposition::deeper_integral: return "deeper-integral";
    case Disposition::below_range: return "below-range";
    case Disposition::residual: return "residual";
    case Disposition::offending: return "offending";
  }
  return "unknown";
}

Disposition parse_disposition(std::string_view s) {
  for (auto d : {Disposition::dead, Disposition::generator, Disposition::deeper_integral, Disposition::below_range,
                 Disposition::residual, Disposition::offending}) {
    if (to_string(d) == s) return d;
  }
  throw Error(ErrorCode::invalid_argument, "unknown disposition '" + std::string(s) + "'");
}

const TermDisposition* AuditPhase::generator() const {
  for (const auto& t : terms) {
    if (t.disposition == Disposition::generator) return &t;
  }
  return nullptr;
}

std::vector<std::string> KillAudit::failures() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < phases.size(); ++k) {
    const auto& ph = phases[k];
    if (ph.generator() == nullptr) {
      out.push_back("phase " + std::to_string(k + 1) + ": no generator at j = " + std::to_string(ph.target_j));
    }
    for (const auto& t : ph.terms) {
      if (t.disposition == Disposition::offending) {
        out.push_back("phase " + std::to_string(k + 1) + ": term a=" + std::to_string(t.term.a) +
                      " j=" + std::to_string(t.term.j) + " slack=" + t.term.slack.str());
      }
    }
  }
  for (const auto& c : checks) {
    if (!c.passed) out.push_back("check failed: " + c.name + " (" + c.detail + ")");
  }
  return out;
}

namespace {

const ValP kZero{0};

struct PhaseRule {
  std::int64_t target_j = 0;
  /// An integral (slack >= 0) degree above the target that a later phase removes.
  std::optional<std::int64_t> residual_j;
  /// Terms at target_j - 1 must be dead, not merely integral.
  bool predecessor_must_die = false;
};

Disposition classify(const CongruenceParams& params, const CongruenceTerm& t, const PhaseRule& rule) {
  const bool dead = t.slack > kZero;
  if (t.a == 0 && t.j == rule.target_j) {
    const bool unit = t.unit_residue % params.p != 0;
    return t.slack == kZero && unit ? Disposition::generator : Disposition::offending;
  }
  if (t.j >= rule.target_j) {
    if (dead) return Disposition::dead;
    if (rule.residual_j && t.j == *rule.residual_j && t.slack >= kZero) return Disposition::residual;
    return Disposition::offending;
  }
  if (t.slack < kZero) return Disposition::offending;
  if (rule.predecessor_must_die && t.j == rule.target_j - 1 && !dead) return Disposition::offending;
  if (t.j < params.ceil_half_r()) return Disposition::below_range;
  return dead ? Disposition::dead : Disposition::deeper_integral;
}

AuditPhase run_phase(const CongruenceParams& params, const PhaseRule& rule) {
  AuditPhase phase{params, rule.target_j, {}};
  for (auto& t : master_terms(params)) {
    Disposition d = classify(params, t, rule);
    phase.terms.push_back({std::move(t), d});
  }
  return phase;
}

bool phase_ok(const AuditPhase& ph) {
  if (ph.generator() == nullptr) return false;
  for (const auto& t : ph.terms) {
    if (t.disposition == Disposition::offending) return false;
  }
  return true;
}

void finish(KillAudit& audit) {
  bool ok = !audit.phases.empty();
  for (const auto& ph : audit.phases) ok = ok && phase_ok(ph);
  for (const auto& c : audit.checks) ok = ok && c.passed;
  audit.passed = ok;
}

std::string int_str(std::int64_t v) { return std::to_string(v); }

AuditCheck valuation_check(std::string name, const Integer& value, std::int64_t p, std::int64_t expected) {
  const ValP v = vp_total(Rational(value), p);
  return {std::move(name), v == ValP(expected), "v_p(" + value.get_str() + ") = " + v.str()};
}

AuditCheck divisible_check(std::string name, const Integer& value, std::int64_t p) {
  return {std::move(name), residue(value, p) == 0, value.get_str() + " mod " + int_str(p) + " = " + int_str(residue(value, p))};
}

/// *_j = -(b+1)! mod p at the generator degree.
AuditCheck star_generator_check(const CongruenceParams& params, std::int64_t j) {
  const std::int64_t got = residue(star_full(params, j), params.p);
  const std::int64_t want = residue(Integer(-factorial(params.b + 1)), params.p);
  return {"*_" + int_str(j) + " = -(b+1)! mod p", got == want,
          "*_" + int_str(j) + " = " + int_str(got) + ", -(b+1)! = " + int_str(want) + " mod " + int_str(params.p)};
}

}  // namespace

KillAudit audit_good(std::int64_t p, std::int64_t r, std::int64_t n, const Rational& vL) {
  const CongruenceParams params = make_params(p, r, n, vL, BoundMode::strict);
  if (params.v_fall != 0) {
    throw Error(ErrorCode::not_good_candidate,
                "v_p([n]_{b+1}) = " + int_str(params.v_fall) + " for n = " + int_str(n) + "; the good method needs 0");
  }
  KillAudit audit;
  audit.method = KillMethod::good;
  audit.target_j = n - params.b - 1;
  audit.target_i = r - audit.target_j;
  audit.phases.push_back(run_phase(params, {audit.target_j, std::nullopt, false}));

  bool first_line_dead = true;
  bool high_star_dead = true;
  for (const auto& t : audit.phases[0].terms) {
    if (t.term.a != 0) first_line_dead = first_line_dead && t.term.slack >= ValP(1);
    if (t.term.a == 0 && t.term.j >= n - params.b) high_star_dead = high_star_dead && t.term.slack >= ValP(1);
  }
  audit.checks.push_back({"first-line slack >= 1", first_line_dead, "every a != 0 term"});
  audit.checks.push_back({"second-line slack >= 1 for j >= n-b", high_star_dead, "j >= " + int_str(n - params.b)});
  audit.checks.push_back(valuation_check("p does not divide C(n, n-b-1)", binom(n, audit.target_j), p, 0));
  audit.checks.push_back(star_generator_check(params, audit.target_j));
  finish(audit);
  return audit;
}

KillAudit audit_bad(std::int64_t p, std::int64_t r, const Rational& vL) {
  require_prime(p, 5);
  if (r < 2 * p + 4 || r > 3 * p - 1) {
    throw Error(ErrorCode::invalid_range, "bad method needs 2p+4 <= r <= 3p-1, got r = " + int_str(r));
  }
  const std::int64_t n = 2 * p + 1;
  const CongruenceParams params = make_params(p, r, n, vL, BoundMode::strict);
  KillAudit audit;
  audit.method = KillMethod::bad;
  audit.target_j = 2 * p - 2;
  audit.target_i = r - audit.target_j;
  audit.phases.push_back(run_phase(params, {audit.target_j, std::nullopt, false}));

  audit.checks.push_back({"v_p([2p+1]_3) = 1", params.v_fall == 1, "vFall = " + int_str(params.v_fall)});
  audit.checks.push_back(valuation_check("v_p(C(2p+1, 3)) = 1", binom(n, 3), p, 1));
  audit.checks.push_back(divisible_check("p | C(2p+1, 2p-1)", binom(n, 2 * p - 1), p));
  audit.checks.push_back(divisible_check("p | C(2p+1, 2p-2)", binom(n, 2 * p - 2), p));
  audit.checks.push_back(star_generator_check(params, audit.target_j));
  if (r == 2 * p + 4) {
    // The j = p + 1 term sits just below range; Lucas for Stirling numbers
    // gives {p brace b} = {1 brace b} = 0 and {p brace b+1} = {1 brace b+1} = 0 mod p.
    for (std::int64_t s : {params.b, params.b + 1}) {
      auto [lhs, rhs] = stirling_lucas_check(0, s, 1, p);
      audit.checks.push_back({"{p brace " + int_str(s) + "} = 0 mod p", lhs == 0 && rhs == 0,
                              "{p brace " + int_str(s) + "} = " + int_str(lhs) + ", {1 brace " + int_str(s) +
                                  "} = " + int_str(rhs) + " mod p"});
    }
    bool below = false;
    for (const auto& t : audit.phases[0].terms) {
      if (t.term.a == 0 && t.term.j == p + 1) below = t.disposition == Disposition::below_range;
    }
    audit.checks.push_back({"j = p+1 term below range", below, "ceil(r/2) = " + int_str(params.ceil_half_r())});
  }
  finish(audit);
  return audit;
}

KillAudit audit_ugly(std::int64_t p, std::int64_t r, const Rational& vL, std::int64_t c) {
  require_prime(p, 5);
  if (c != 1 && c != 2) throw Error(ErrorCode::invalid_range, "ugly method needs c in {1, 2}, got " + int_str(c));
  if (r < c * p + c + 2 || r > (c + 1) * p - 1) {
    throw Error(ErrorCode::invalid_range, "ugly method needs cp+c+2 <= r <= (c+1)p-1, got r = " + int_str(r) +
                                              " with c = " + int_str(c));
  }
  const std::int64_t n1 = c * p + c;
  const std::int64_t n2 = n1 + 1;
  const Rational bound = make_rational(r, 2) - n2;
  if (vL >= bound) {
    throw Error(ErrorCode::vl_bound, "vL = " + to_string(vL) + " must be < r/2 - (cp+c+1) = " + to_string(bound));
  }
  const CongruenceParams first = make_params(p, r, n1, vL, BoundMode::strict);
  const CongruenceParams second = make_params(p, r, n2, vL, BoundMode::strict);

  KillAudit audit;
  audit.method = KillMethod::ugly;
  audit.target_j = c * p - 1;
  audit.target_i = r - audit.target_j;
  audit.phases.push_back(run_phase(first, {audit.target_j, c * p, false}));
  audit.phases.push_back(run_phase(second, {c * p, std::nullopt, true}));

  audit.checks.push_back({"v_p([cp+c]_{c+1}) = 1", first.v_fall == 1, "vFall = " + int_str(first.v_fall)});
  audit.checks.push_back({"v_p([cp+c+1]_{c+1}) = 0", second.v_fall == 0, "vFall = " + int_str(second.v_fall)});
  audit.checks.push_back(valuation_check("v_p(C(cp+c, c+1)) = 1", binom(n1, c + 1), p, 1));
  audit.checks.push_back(divisible_check("p | C(cp+c+1, cp-1)", binom(n2, c * p - 1), p));
  audit.checks.push_back(star_generator_check(first, audit.target_j));
  audit.checks.push_back(star_generator_check(second, c * p));
  finish(audit);
  return audit;
}

}  // namespace ssred
