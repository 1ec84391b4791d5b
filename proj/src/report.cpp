#include "ssred/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "ssred/error.hpp"

namespace ssred {

using json = nlohmann::ordered_json;

std::string_view to_string(EmitFormat f) noexcept {
  switch (f) {
    case EmitFormat::table: return "table";
    case EmitFormat::json: return "json";
    case EmitFormat::tsv: return "tsv";
  }
  return "table";
}

EmitFormat parse_format(std::string_view s) {
  for (auto f : {EmitFormat::table, EmitFormat::json, EmitFormat::tsv}) {
    if (to_string(f) == s) return f;
  }
  throw Error(ErrorCode::invalid_argument, "unknown output format '" + std::string(s) + "'");
}

namespace {

// ---- JSON writers ---------------------------------------------------------

json params_json(const CongruenceParams& p) {
  return {{"p", p.p},          {"r", p.r},   {"n", p.n},          {"b", p.b},
          {"eps", p.eps},      {"vL", to_string(p.vL)},           {"x", to_string(p.x)},
          {"v_fall", p.v_fall}, {"mode", std::string(to_string(p.mode))}};
}

json term_json(const CongruenceTerm& t) {
  return {{"a", t.a},
          {"j", t.j},
          {"coefficient", to_string(t.coefficient)},
          {"total_val", t.total_val.str()},
          {"slack", t.slack.str()},
          {"unit_residue", t.unit_residue}};
}

json audit_json(const KillAudit& a) {
  json phases = json::array();
  for (const auto& ph : a.phases) {
    json terms = json::array();
    for (const auto& t : ph.terms) {
      json tj = term_json(t.term);
      tj["disposition"] = std::string(to_string(t.disposition));
      terms.push_back(std::move(tj));
    }
    phases.push_back({{"params", params_json(ph.params)}, {"target_j", ph.target_j}, {"terms", std::move(terms)}});
  }
  json checks = json::array();
  for (const auto& c : a.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"method", std::string(to_string(a.method))},
          {"target_j", a.target_j},
          {"target_i", a.target_i},
          {"passed", a.passed},
          {"phases", std::move(phases)},
          {"checks", std::move(checks)}};
}

json shallow_json(const ShallowReport& s) {
  json out = {{"p", s.p},
              {"r", s.r},
              {"i", s.i},
              {"action_convention", s.action_convention},
              {"generator_coefficient", s.generator_coefficient},
              {"generator_is_unit", s.generator_is_unit},
              {"generator_min_x_degree", s.generator_min_x_degree},
              {"summand_min_x_degree", s.summand_min_x_degree},
              {"action_matches_summand", s.action_matches_summand},
              {"pure_y_cancels", nullptr},
              {"passed", s.passed}};
  if (s.pure_y_cancels) out["pure_y_cancels"] = *s.pure_y_cancels;
  return out;
}

json kill_json(const KillRecord& k) {
  json out = {{"method", std::string(to_string(k.method))},
              {"witness_n", k.witness_n},
              {"audit", nullptr},
              {"shallow", nullptr}};
  if (k.audit) out["audit"] = audit_json(*k.audit);
  if (k.shallow) out["shallow"] = shallow_json(*k.shallow);
  return out;
}

/// Flattened slack view of the primary kill: one row per term and phase.
json slack_table(const SubquotientEntry& e) {
  json rows = json::array();
  const KillRecord* k = e.primary();
  if (k == nullptr || !k->audit) return rows;
  for (std::size_t ph = 0; ph < k->audit->phases.size(); ++ph) {
    for (const auto& t : k->audit->phases[ph].terms) {
      rows.push_back({{"phase", ph + 1},
                      {"n", k->audit->phases[ph].params.n},
                      {"a", t.term.a},
                      {"j", t.term.j},
                      {"slack", t.term.slack.str()},
                      {"total_val", t.term.total_val.str()},
                      {"disposition", std::string(to_string(t.disposition))}});
    }
  }
  return rows;
}

json trace_json(const KillTrace& trace) {
  json subs = json::array();
  for (const auto& e : trace.entries) {
    const KillRecord* k = e.primary();
    json kills = json::array();
    for (const auto& rec : e.kills) kills.push_back(kill_json(rec));
    subs.push_back({{"i", e.index.i},
                    {"j", e.index.j},
                    {"status", std::string(to_string(e.status))},
                    {"method", k ? json(std::string(to_string(k->method))) : json(nullptr)},
                    {"witness_n", k ? json(k->witness_n) : json::array()},
                    {"slack_table", slack_table(e)},
                    {"kills", std::move(kills)}});
  }
  return {{"p", trace.p},
          {"r", trace.r},
          {"c", trace.c},
          {"vL", to_string(trace.vL)},
          {"subquotients", std::move(subs)},
          {"survivor", trace.survivor() ? json(*trace.survivor()) : json(nullptr)},
          {"duplicates", trace.duplicate_kills()}};
}

json prediction_json(const ReductionResult& r) {
  json out = trace_json(r.trace);
  const auto& irr = r.irreducibility;
  out["prediction"] = {{"label", r.label},
                       {"exponent", r.exponent},
                       {"weight", r.weight},
                       {"survivor", r.survivor},
                       {"irreducibility",
                        {{"modulus", irr.modulus},
                         {"residue", irr.residue},
                         {"excluded", json::array({1, "p-2"})},
                         {"excluded_values", irr.excluded},
                         {"ok", irr.ok}}}};
  return out;
}

// ---- JSON readers ---------------------------------------------------------

Rational rational_field(const json& j, const char* key) { return parse_rational(j.at(key).get<std::string>()); }
ValP valp_field(const json& j, const char* key) { return ValP::parse(j.at(key).get<std::string>()); }

CongruenceParams params_from(const json& j) {
  CongruenceParams p;
  p.p = j.at("p");
  p.r = j.at("r");
  p.n = j.at("n");
  p.b = j.at("b");
  p.eps = j.at("eps");
  p.vL = rational_field(j, "vL");
  p.x = rational_field(j, "x");
  p.v_fall = j.at("v_fall");
  p.mode = j.at("mode").get<std::string>() == "weak" ? BoundMode::weak : BoundMode::strict;
  return p;
}

KillAudit audit_from(const json& j) {
  KillAudit a;
  a.method = parse_kill_method(j.at("method").get<std::string>());
  a.target_j = j.at("target_j");
  a.target_i = j.at("target_i");
  a.passed = j.at("passed");
  for (const auto& ph : j.at("phases")) {
    AuditPhase phase;
    phase.params = params_from(ph.at("params"));
    phase.target_j = ph.at("target_j");
    for (const auto& t : ph.at("terms")) {
      CongruenceTerm term;
      term.a = t.at("a");
      term.j = t.at("j");
      term.coefficient = rational_field(t, "coefficient");
      term.total_val = valp_field(t, "total_val");
      term.slack = valp_field(t, "slack");
      term.unit_residue = t.at("unit_residue");
      phase.terms.push_back({std::move(term), parse_disposition(t.at("disposition").get<std::string>())});
    }
    a.phases.push_back(std::move(phase));
  }
  for (const auto& c : j.at("checks")) {
    a.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  }
  return a;
}

ShallowReport shallow_from(const json& j) {
  ShallowReport s;
  s.p = j.at("p");
  s.r = j.at("r");
  s.i = j.at("i");
  s.action_convention = j.at("action_convention").get<std::string>();
  s.generator_coefficient = j.at("generator_coefficient");
  s.generator_is_unit = j.at("generator_is_unit");
  s.generator_min_x_degree = j.at("generator_min_x_degree");
  s.summand_min_x_degree = j.at("summand_min_x_degree").get<std::vector<std::int64_t>>();
  s.action_matches_summand = j.at("action_matches_summand");
  if (!j.at("pure_y_cancels").is_null()) s.pure_y_cancels = j.at("pure_y_cancels").get<bool>();
  s.passed = j.at("passed");
  return s;
}

KillTrace trace_from(const json& j) {
  KillTrace t;
  t.p = j.at("p");
  t.r = j.at("r");
  t.c = j.at("c");
  t.vL = rational_field(j, "vL");
  for (const auto& s : j.at("subquotients")) {
    SubquotientEntry e;
    e.index = {s.at("i").get<std::int64_t>(), s.at("j").get<std::int64_t>()};
    e.status = parse_status(s.at("status").get<std::string>());
    for (const auto& k : s.at("kills")) {
      KillRecord rec;
      rec.method = parse_kill_method(k.at("method").get<std::string>());
      rec.witness_n = k.at("witness_n").get<std::vector<std::int64_t>>();
      if (!k.at("audit").is_null()) rec.audit = audit_from(k.at("audit"));
      if (!k.at("shallow").is_null()) rec.shallow = shallow_from(k.at("shallow"));
      e.kills.push_back(std::move(rec));
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("unexpected JSON shape: ") + e.what());
  }
}

// ---- tables ---------------------------------------------------------------

std::string evidence(const SubquotientEntry& e) {
  std::string out;
  for (std::size_t k = 0; k < e.kills.size(); ++k) {
    if (k > 0) out += ", ";
    out += e.kills[k].label();
  }
  return out;
}

void trace_table(std::ostream& os, const KillTrace& trace) {
  os << "p = " << trace.p << ", r = " << trace.r << ", c = " << trace.c << ", vL = " << to_string(trace.vL) << "\n";
  os << std::setw(4) << "i" << std::setw(5) << "j" << "  " << std::left << std::setw(10) << "status" << "kills"
     << std::right << "\n";
  for (const auto& e : trace.entries) {
    os << std::setw(4) << e.index.i << std::setw(5) << e.index.j << "  " << std::left << std::setw(10)
       << to_string(e.status) << evidence(e) << std::right << "\n";
  }
  const auto dups = trace.duplicate_kills();
  if (!dups.empty()) {
    os << "duplicate kills at i =";
    for (auto i : dups) os << " " << i;
    os << "\n";
  }
}

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_trace(const KillTrace& trace, EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::json: return dump(trace_json(trace));
    case EmitFormat::tsv:
      os << "i\tj\tstatus\tmethod\twitness_n\tkills\n";
      for (const auto& e : trace.entries) {
        const KillRecord* k = e.primary();
        os << e.index.i << "\t" << e.index.j << "\t" << to_string(e.status) << "\t"
           << (k ? std::string(to_string(k->method)) : "") << "\t" << (k ? join(k->witness_n, ",") : "") << "\t"
           << evidence(e) << "\n";
      }
      return os.str();
    case EmitFormat::table: trace_table(os, trace); return os.str();
  }
  return {};
}

std::string emit_prediction(const ReductionResult& result, EmitFormat format) {
  std::ostringstream os;
  const auto& irr = result.irreducibility;
  switch (format) {
    case EmitFormat::json: return dump(prediction_json(result));
    case EmitFormat::tsv:
      os << "p\tr\tk\tc\texponent\tlabel\tresidue\n";
      os << result.p << "\t" << result.r << "\t" << result.weight << "\t" << result.survivor << "\t" << result.exponent
         << "\t" << result.label << "\t" << irr.residue << "\n";
      return os.str();
    case EmitFormat::table:
      trace_table(os, result.trace);
      os << "survivor: F_{" << 2 * result.survivor << "," << 2 * result.survivor + 1 << "}\n";
      os << "r - 2c = " << irr.residue << " mod " << irr.modulus << " (excluded: 1, " << result.p - 2 << ")\n";
      os << "prediction (k = " << result.weight << "): " << result.pretty_label() << "\n";
      return os.str();
  }
  return {};
}

KillTrace parse_trace_json(std::string_view text) {
  const json j = parse_document(text);
  return guarded([&] { return trace_from(j); });
}

ReductionResult parse_prediction_json(std::string_view text) {
  const json j = parse_document(text);
  return guarded([&] {
    ReductionResult r;
    r.trace = trace_from(j);
    r.p = r.trace.p;
    r.r = r.trace.r;
    const json& pr = j.at("prediction");
    r.label = pr.at("label").get<std::string>();
    r.exponent = pr.at("exponent");
    r.weight = pr.at("weight");
    r.survivor = pr.at("survivor");
    const json& irr = pr.at("irreducibility");
    r.irreducibility.modulus = irr.at("modulus");
    r.irreducibility.residue = irr.at("residue");
    r.irreducibility.excluded = irr.at("excluded_values").get<std::vector<std::int64_t>>();
    r.irreducibility.ok = irr.at("ok");
    return r;
  });
}

std::string emit_sweep(const std::vector<SweepRow>& rows, EmitFormat format) {
  std::ostringstream os;
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  switch (format) {
    case EmitFormat::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"p", r.p},
                       {"r", r.r},
                       {"c", r.c},
                       {"status", r.status},
                       {"survivor", r.survivor ? json(*r.survivor) : json(nullptr)},
                       {"exponent", r.exponent ? json(*r.exponent) : json(nullptr)},
                       {"label", r.label},
                       {"duplicates", r.duplicates},
                       {"detail", r.detail}});
      }
      return dump(json{{"rows", std::move(arr)}});
    }
    case EmitFormat::tsv:
      os << "p\tr\tc\tstatus\tsurvivor\texponent\tlabel\tduplicates\tdetail\n";
      for (const auto& r : rows) {
        os << r.p << "\t" << r.r << "\t" << r.c << "\t" << r.status << "\t" << opt(r.survivor) << "\t"
           << opt(r.exponent) << "\t" << r.label << "\t" << join(r.duplicates, ",") << "\t" << r.detail << "\n";
      }
      return os.str();
    case EmitFormat::table:
      os << std::setw(4) << "p" << std::setw(5) << "r" << std::setw(3) << "c" << "  " << std::left << std::setw(12)
         << "status" << std::setw(18) << "label" << "detail" << std::right << "\n";
      for (const auto& r : rows) {
        os << std::setw(4) << r.p << std::setw(5) << r.r << std::setw(3) << r.c << "  " << std::left << std::setw(12)
           << r.status << std::setw(18) << r.label << r.detail << std::right << "\n";
      }
      return os.str();
  }
  return {};
}

std::string emit_lambda(const LambdaVector& v, const BulletReport& rep, EmitFormat format) {
  std::ostringstream os;
  const auto idx = v.index_set();
  switch (format) {
    case EmitFormat::json: {
      json entries = json::array();
      for (auto i : idx) entries.push_back({{"i", i}, {"lambda", to_string(v.at(i))}});
      json failures = json::array();
      for (const auto& w : rep.class_sum_failures) failures.push_back({{"a", w.a}, {"j", w.j}, {"residue", w.residue}});
      return dump(json{{"p", v.p},
                       {"b", v.b},
                       {"n", v.n},
                       {"entries", std::move(entries)},
                       {"bullets",
                        {{"integral", rep.integral},
                         {"top_is_minus_one", rep.top_is_minus_one},
                         {"exact_vanishing", std::string(to_string(rep.exact_vanishing))},
                         {"class_sums_mod_p2", std::string(to_string(rep.class_sums_mod_p2))},
                         {"multiples_of_p", std::string(to_string(rep.multiples_of_p))},
                         {"non_multiples", std::string(to_string(rep.non_multiples))},
                         {"bullet_three_forms_agree", rep.bullet_three_forms_agree},
                         {"class_sum_failures", std::move(failures)}}},
                       {"passed", rep.passed()}});
    }
    case EmitFormat::tsv:
      os << "i\tlambda\n";
      for (auto i : idx) os << i << "\t" << to_string(v.at(i)) << "\n";
      return os.str();
    case EmitFormat::table:
      os << "p = " << v.p << ", b = " << v.b << ", n = " << v.n << "\n";
      for (auto i : idx) os << std::setw(6) << i << "  " << to_string(v.at(i)) << "\n";
      os << "exact vanishing:      " << to_string(rep.exact_vanishing) << "\n";
      os << "class sums mod p^2:   " << to_string(rep.class_sums_mod_p2) << "\n";
      os << "multiples of p:       " << to_string(rep.multiples_of_p) << "\n";
      os << "non-multiples of p:   " << to_string(rep.non_multiples) << "\n";
      for (const auto& w : rep.class_sum_failures) {
        os << "  class a = " << w.a << ", j = " << w.j << ": sum = " << w.residue << " mod p^2\n";
      }
      return os.str();
  }
  return {};
}

std::string emit_congruence(const CongruenceParams& params, const std::vector<CongruenceTerm>& terms,
                            EmitFormat format) {
  std::ostringstream os;
  switch (format) {
    case EmitFormat::json: {
      json arr = json::array();
      for (const auto& t : terms) arr.push_back(term_json(t));
      return dump(json{{"params", params_json(params)}, {"terms", std::move(arr)}});
    }
    case EmitFormat::tsv:
      os << "a\tj\tcoefficient\ttotal_val\tslack\tunit_residue\n";
      for (const auto& t : terms) {
        os << t.a << "\t" << t.j << "\t" << to_string(t.coefficient) << "\t" << t.total_val.str() << "\t"
           << t.slack.str() << "\t" << t.unit_residue << "\n";
      }
      return os.str();
    case EmitFormat::table:
      os << "p = " << params.p << ", r = " << params.r << ", n = " << params.n << ", b = " << params.b
         << ", eps = " << params.eps << ", vFall = " << params.v_fall << ", vL = " << to_string(params.vL)
         << ", x = " << to_string(params.x) << "\n";
      os << std::setw(4) << "a" << std::setw(5) << "j" << std::setw(10) << "totalVal" << std::setw(8) << "slack"
         << "  coefficient\n";
      for (const auto& t : terms) {
        os << std::setw(4) << t.a << std::setw(5) << t.j << std::setw(10) << t.total_val.str() << std::setw(8)
           << t.slack.str() << "  " << to_string(t.coefficient) << "\n";
      }
      return os.str();
  }
  return {};
}

}  // namespace ssred
