#pragma once

// Rendering of traces, predictions and sweeps as human tables, JSON and TSV,
// plus the JSON readers used to round-trip a trace.
//
// Rationals are written as exact "a/b" text (or "a" when integral);
// valuations are rationals or "inf".

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssred/eliminator.hpp"
#include "ssred/lambda_solver.hpp"

namespace ssred {

enum class EmitFormat { table, json, tsv };

std::string_view to_string(EmitFormat f) noexcept;
EmitFormat parse_format(std::string_view s);

std::string emit_trace(const KillTrace& trace, EmitFormat format);
std::string emit_prediction(const ReductionResult& result, EmitFormat format);

/// Inverse of emit_trace(..., json); also accepts a prediction document.
KillTrace parse_trace_json(std::string_view text);
ReductionResult parse_prediction_json(std::string_view text);

/// One (p, r) row of a sweep.
struct SweepRow {
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::string status;  ///< "ok", "unavailable" or "incomplete"
  std::optional<std::int64_t> survivor;
  std::optional<std::int64_t> exponent;
  std::string label;
  std::vector<std::int64_t> duplicates;
  std::string detail;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

std::string emit_sweep(const std::vector<SweepRow>& rows, EmitFormat format);

std::string emit_lambda(const LambdaVector& v, const BulletReport& report, EmitFormat format);

/// Master congruence terms with their slack for one parameter set.
std::string emit_congruence(const CongruenceParams& params, const std::vector<CongruenceTerm>& terms,
                            EmitFormat format);

}  // namespace ssred
