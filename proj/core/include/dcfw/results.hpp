#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dcfw/common.hpp"
#include "dcfw/dca.hpp"

namespace dcfw {

// One row of results.csv.
struct BenchResult {
  std::string instance;
  std::string variant;
  Index n = 0;
  uint64_t seed = 0;
  bool solved = false;
  int64_t outer_iterations = 0;
  double wall_seconds = 0.0;
  int64_t lmo_calls = 0;
  double final_objective = 0.0;
  std::string reason;
};

// One row of a per-run trace file.
struct TraceRow {
  int64_t t = 0;
  double dc_gap_lb = 0.0;
  double dc_gap_ub = 0.0;
  double objective = 0.0;
  int64_t lmo_calls_cum = 0;
  int64_t inner_iters = 0;
  double elapsed_seconds = 0.0;
};

inline constexpr std::string_view kResultsHeader =
    "instance,variant,n,seed,solved,outer_iters,wall_s,lmo_calls,final_obj,"
    "reason";
inline constexpr std::string_view kTraceHeader =
    "t,dc_gap_lb,dc_gap_ub,objective,lmo_calls_cum,inner_iters,elapsed_s";

// traces/<instance>__<variant>.csv, relative to a results directory.
std::filesystem::path trace_path(std::string_view instance,
                                 std::string_view variant);

// Splits one CSV line; double-quoted fields may contain commas and "".
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_field(std::string_view field);

void write_result_row(std::ostream& out, const BenchResult& result);
std::vector<BenchResult> parse_results_csv(std::istream& in);
// Throws IoError when the file is missing or malformed.
std::vector<BenchResult> read_results_csv(const std::filesystem::path& path);

std::vector<TraceRow> trace_rows(const RunRecord& record);
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows);
void write_trace_file(const std::filesystem::path& path,
                      const std::vector<TraceRow>& rows);
std::vector<TraceRow> parse_trace_csv(std::istream& in);
std::vector<TraceRow> read_trace_file(const std::filesystem::path& path);

// Formats with round-trip precision.
std::string format_double(double value);

}  // namespace dcfw
