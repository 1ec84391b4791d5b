#include "ssred/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssred/congruence.hpp"
#include "ssred/eliminator.hpp"
#include "ssred/error.hpp"
#include "ssred/lambda_solver.hpp"
#include "ssred/parallel.hpp"
#include "ssred/report.hpp"
#include "ssred/verify.hpp"

namespace ssred {

namespace {

struct Options {
  std::string lemma;
  std::vector<std::int64_t> p;
  std::string p_range;
  std::string r_range;
  std::int64_t r = -1;
  std::int64_t b = -1;
  std::int64_t n = -1;
  std::string vL;
  std::string emit = "table";
  unsigned jobs = 0;
};

/// Inclusive range "a:b", "a..b", a comma list, or a single integer.
std::vector<std::int64_t> parse_range(const std::string& text, const char* what) {
  auto to_int = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, std::string("cannot read ") + what + " '" + text + "'");
    }
  };
  std::vector<std::int64_t> out;
  std::string lo, hi;
  if (auto pos = text.find(".."); pos != std::string::npos) {
    lo = text.substr(0, pos);
    hi = text.substr(pos + 2);
  } else if (auto colon = text.find(':'); colon != std::string::npos) {
    lo = text.substr(0, colon);
    hi = text.substr(colon + 1);
  }
  if (!lo.empty() || !hi.empty()) {
    for (std::int64_t v = to_int(lo), end = to_int(hi); v <= end; ++v) out.push_back(v);
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) out.push_back(to_int(item));
    }
  }
  if (out.empty()) throw Error(ErrorCode::invalid_range, std::string("empty ") + what + " '" + text + "'");
  return out;
}

/// Primes >= 5 selected by --p / --p-range, or `fallback` when neither is given.
std::vector<std::int64_t> select_primes(const Options& o, std::vector<std::int64_t> fallback) {
  std::vector<std::int64_t> candidates = o.p;
  if (!o.p_range.empty()) {
    auto more = parse_range(o.p_range, "p-range");
    candidates.insert(candidates.end(), more.begin(), more.end());
  }
  if (o.p.empty() && o.p_range.empty()) return fallback;
  for (auto p : o.p) require_prime(p, 5);
  std::vector<std::int64_t> out;
  for (auto p : candidates) {
    if (p >= 5 && is_prime(p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error(ErrorCode::invalid_range, "no primes p >= 5 in the requested range");
  return out;
}

std::int64_t single_prime(const Options& o) {
  if (o.p.size() != 1) throw Error(ErrorCode::invalid_argument, "exactly one --p is required");
  return o.p.front();
}

Rational vl_or_default(const Options& o, std::int64_t r) {
  return o.vL.empty() ? default_vL(r) : parse_rational(o.vL);
}

unsigned jobs_of(const Options& o) { return o.jobs > 0 ? o.jobs : default_jobs(); }

std::string emit_summary(const VerifySummary& s, EmitFormat format) {
  std::ostringstream os;
  if (format == EmitFormat::json) {
    nlohmann::ordered_json j = {{"lemma", s.name},        {"cases", s.cases},   {"failures", s.failure_count},
                                {"passed", s.passed()},   {"listed_failures", s.failures},
                                {"notes", s.notes}};
    return j.dump(2) + "\n";
  }
  if (format == EmitFormat::tsv) {
    os << "lemma\tcases\tfailures\tpassed\n"
       << s.name << "\t" << s.cases << "\t" << s.failure_count << "\t" << (s.passed() ? "yes" : "no") << "\n";
    return os.str();
  }
  os << s.name << ": " << s.cases << " cases, " << s.failure_count << " failures -> "
     << (s.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : s.failures) os << "  failure: " << f << "\n";
  for (const auto& n : s.notes) os << "  observed: " << n << "\n";
  return os.str();
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const EmitFormat format = parse_format(o.emit);
  const unsigned jobs = jobs_of(o);
  VerifySummary summary;
  if (o.lemma == "lucas2") {
    summary = sweep_lucas2(select_primes(o, {5, 7, 11}), jobs);
  } else if (o.lemma == "stirling-lucas") {
    summary = sweep_stirling_lucas(select_primes(o, {5, 7}), {1, 2}, jobs);
  } else if (o.lemma == "lambda") {
    summary = sweep_lambda(select_primes(o, {5, 7, 11, 13}), jobs);
  } else if (o.lemma == "shallow") {
    summary = sweep_shallow(select_primes(o, {5, 7, 11}), jobs);
  } else if (o.lemma == "star") {
    summary = sweep_star(select_primes(o, {5, 7}), jobs);
  } else if (o.lemma == "inequalities") {
    summary = sweep_inequalities(select_primes(o, {5, 7, 11}), jobs);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown lemma '" + o.lemma + "'");
  }
  out << emit_summary(summary, format);
  if (!summary.passed()) {
    err << "verify " << o.lemma << ": " << summary.failure_count << " failures\n";
    for (const auto& f : summary.failures) err << "  " << f << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out, std::ostream& err) {
  const EmitFormat format = parse_format(o.emit);
  const LambdaVector v = solve_lambda(single_prime(o), o.b, o.n);
  const BulletReport rep = verify_lambda(v);
  out << emit_lambda(v, rep, format);
  if (!rep.passed()) {
    err << "lambda: bullet checks failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_congruence(const Options& o, std::ostream& out, std::ostream&) {
  const EmitFormat format = parse_format(o.emit);
  const std::int64_t p = single_prime(o);
  const Rational vL = o.vL.empty() ? make_rational(o.r - 2 * o.n - 1, 2) : parse_rational(o.vL);
  const CongruenceParams params = make_params(p, o.r, o.n, vL, BoundMode::strict);
  out << emit_congruence(params, master_terms(params), format);
  return kExitOk;
}

int cmd_eliminate(const Options& o, std::ostream& out, std::ostream&) {
  const EmitFormat format = parse_format(o.emit);
  const KillTrace trace = run_elimination(single_prime(o), o.r, vl_or_default(o, o.r));
  out << emit_trace(trace, format);
  return kExitOk;
}

int cmd_predict(const Options& o, std::ostream& out, std::ostream&) {
  const EmitFormat format = parse_format(o.emit);
  const ReductionResult result = predict(single_prime(o), o.r, vl_or_default(o, o.r));
  out << emit_prediction(result, format);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const EmitFormat format = parse_format(o.emit);
  if (o.p_range.empty() && o.p.empty()) throw Error(ErrorCode::invalid_argument, "--p-range is required");
  const auto primes = select_primes(o, {});
  std::vector<std::pair<std::int64_t, std::int64_t>> items;
  for (auto p : primes) {
    if (o.r_range.empty()) {
      for (std::int64_t r = p + 3; r <= 3 * p - 1; ++r) {
        if (in_prediction_range(p, r)) items.emplace_back(p, r);
      }
    } else {
      for (auto r : parse_range(o.r_range, "r-range")) {
        if (in_elimination_range(p, r)) items.emplace_back(p, r);
      }
    }
  }
  if (items.empty()) throw Error(ErrorCode::invalid_range, "the sweep range contains no (p, r) in the theorem range");

  auto rows = parallel_map(items.size(), jobs_of(o), [&](std::size_t k) {
    const auto [p, r] = items[k];
    SweepRow row;
    row.p = p;
    row.r = r;
    row.c = r / p;
    try {
      const ReductionResult res = predict(p, r);
      row.status = "ok";
      row.survivor = res.survivor;
      row.exponent = res.exponent;
      row.label = res.label;
      row.duplicates = res.trace.duplicate_kills();
    } catch (const Error& e) {
      row.status = e.code() == ErrorCode::prediction_unavailable ? "unavailable" : "incomplete";
      row.detail = e.what();
    }
    return row;
  });
  out << emit_sweep(rows, format);
  int code = kExitOk;
  for (const auto& row : rows) {
    if (row.status == "incomplete") {
      err << "p = " << row.p << ", r = " << row.r << ": " << row.detail << "\n";
      code = kExitCheckFailed;
    }
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact elimination engine for reductions of semi-stable representations", "ssred"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"table", "json", "tsv"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--jobs", o.jobs, "Worker threads (default: SSRED_JOBS or all cores)");
  };

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  verify->add_option("lemma", o.lemma, "lucas2 | stirling-lucas | lambda | shallow | star | inequalities")
      ->required()
      ->check(CLI::IsMember({"lucas2", "stirling-lucas", "lambda", "shallow", "star", "inequalities"}));
  verify->add_option("--p", o.p, "Prime(s) to sweep");
  verify->add_option("--p-range", o.p_range, "Primes in an inclusive range a:b");
  common(verify);

  auto* lambda = app.add_subcommand("lambda", "Solve for the lambda vector and check its bullets");
  lambda->add_option("--p", o.p)->required()->expected(1);
  lambda->add_option("--b", o.b)->required();
  lambda->add_option("--n", o.n)->required();
  common(lambda);

  auto* congruence = app.add_subcommand("congruence", "List the master congruence terms");
  congruence->add_option("--p", o.p)->required()->expected(1);
  congruence->add_option("--r", o.r)->required();
  congruence->add_option("--n", o.n)->required();
  congruence->add_option("--vL", o.vL, "Exact rational a/b (default: r/2 - n - 1/2)");
  common(congruence);

  auto* eliminate = app.add_subcommand("eliminate", "Run the elimination and print the kill trace");
  eliminate->add_option("--p", o.p)->required()->expected(1);
  eliminate->add_option("--r", o.r)->required();
  eliminate->add_option("--vL", o.vL, "Exact rational a/b (default: -(r+1)/2)");
  common(eliminate);

  auto* predict_cmd = app.add_subcommand("predict", "Predict the reduction");
  predict_cmd->add_option("--p", o.p)->required()->expected(1);
  predict_cmd->add_option("--r", o.r)->required();
  predict_cmd->add_option("--vL", o.vL, "Exact rational a/b (default: -(r+1)/2)");
  common(predict_cmd);

  auto* sweep = app.add_subcommand("sweep", "Predict over ranges of (p, r)");
  sweep->add_option("--p-range", o.p_range, "Inclusive range a:b or list a,b,c");
  sweep->add_option("--r-range", o.r_range, "Inclusive range of r (default: the theorem range)");
  common(sweep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ssred: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (lambda->parsed()) return cmd_lambda(o, out, err);
    if (congruence->parsed()) return cmd_congruence(o, out, err);
    if (eliminate->parsed()) return cmd_eliminate(o, out, err);
    if (predict_cmd->parsed()) return cmd_predict(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::prediction_unavailable) {
      const std::string what = e.what();
      err << "prediction unavailable: " << what.substr(what.find(": ") + 2) << "\n";
      return kExitInvalidInput;
    }
    err << "ssred: " << e.what() << "\n";
    return e.is_input_error() ? kExitInvalidInput : kExitCheckFailed;
  }
  return kExitInvalidInput;
}

}  // namespace ssred
