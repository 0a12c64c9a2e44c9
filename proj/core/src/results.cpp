#include "dcfw/results.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

namespace dcfw {
namespace {

template <typename T>
T parse_field(const std::string& field, std::string_view what) {
  T value{};
  const char* first = field.data();
  const char* last = first + field.size();
  const auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || end != last) {
    throw IoError("bad " + std::string(what) + " field '" + field + "'");
  }
  return value;
}

double parse_double_field(const std::string& field, std::string_view what) {
  if (field == "inf") return INFINITY;
  if (field == "-inf") return -INFINITY;
  if (field == "nan") return NAN;
  return parse_field<double>(field, what);
}

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

void expect_header(std::istream& in, std::string_view header) {
  std::string line;
  if (!next_data_line(in, line)) throw IoError("CSV file is empty");
  if (line != header) {
    throw IoError("unexpected CSV header '" + line + "', expected '" +
                  std::string(header) + "'");
  }
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw InternalError("cannot format number");
  return std::string(buffer, end);
}

std::filesystem::path trace_path(std::string_view instance,
                                 std::string_view variant) {
  std::string file = std::string(instance) + "__" + std::string(variant) + ".csv";
  for (char& c : file) {
    if (c == '/' || c == '\\' || c == ':') c = '_';
  }
  return std::filesystem::path("traces") / file;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw IoError("unterminated quote in CSV line");
  return fields;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '\n' || c == '\r') {
      out += ' ';
    } else {
      if (c == '"') out += '"';
      out += c;
    }
  }
  return out + "\"";
}

void write_result_row(std::ostream& out, const BenchResult& r) {
  out << csv_field(r.instance) << ',' << csv_field(r.variant) << ',' << r.n
      << ',' << r.seed << ',' << (r.solved ? 1 : 0) << ',' << r.outer_iterations
      << ',' << format_double(r.wall_seconds) << ',' << r.lmo_calls << ','
      << format_double(r.final_objective) << ',' << csv_field(r.reason) << '\n';
}

std::vector<BenchResult> parse_results_csv(std::istream& in) {
  expect_header(in, kResultsHeader);
  std::vector<BenchResult> results;
  std::string line;
  while (next_data_line(in, line)) {
    const auto f = split_csv_line(line);
    if (f.size() != 10) {
      throw IoError("results row has " + std::to_string(f.size()) +
                    " fields, expected 10: " + line);
    }
    BenchResult r;
    r.instance = f[0];
    r.variant = f[1];
    r.n = parse_field<Index>(f[2], "n");
    r.seed = parse_field<uint64_t>(f[3], "seed");
    const int solved = parse_field<int>(f[4], "solved");
    if (solved != 0 && solved != 1) throw IoError("solved must be 0 or 1");
    r.solved = solved == 1;
    r.outer_iterations = parse_field<int64_t>(f[5], "outer_iters");
    r.wall_seconds = parse_double_field(f[6], "wall_s");
    r.lmo_calls = parse_field<int64_t>(f[7], "lmo_calls");
    r.final_objective = parse_double_field(f[8], "final_obj");
    r.reason = f[9];
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<BenchResult> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_results_csv(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::vector<TraceRow> trace_rows(const RunRecord& record) {
  std::vector<TraceRow> rows;
  rows.reserve(record.iterations.size());
  for (const OuterIteration& it : record.iterations) {
    rows.push_back({it.t, it.dc_gap_lb, it.dc_gap_ub, it.objective,
                    it.lmo_calls_cum, it.inner_iters, it.elapsed_seconds});
  }
  return rows;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << kTraceHeader << '\n';
  for (const TraceRow& r : rows) {
    out << r.t << ',' << format_double(r.dc_gap_lb) << ','
        << format_double(r.dc_gap_ub) << ',' << format_double(r.objective)
        << ',' << r.lmo_calls_cum << ',' << r.inner_iters << ','
        << format_double(r.elapsed_seconds) << '\n';
  }
}

void write_trace_file(const std::filesystem::path& path,
                      const std::vector<TraceRow>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot create " + path.string());
  write_trace_csv(out, rows);
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<TraceRow> parse_trace_csv(std::istream& in) {
  expect_header(in, kTraceHeader);
  std::vector<TraceRow> rows;
  std::string line;
  while (next_data_line(in, line)) {
    const auto f = split_csv_line(line);
    if (f.size() != 7) {
      throw IoError("trace row has " + std::to_string(f.size()) +
                    " fields, expected 7: " + line);
    }
    rows.push_back({parse_field<int64_t>(f[0], "t"),
                    parse_double_field(f[1], "dc_gap_lb"),
                    parse_double_field(f[2], "dc_gap_ub"),
                    parse_double_field(f[3], "objective"),
                    parse_field<int64_t>(f[4], "lmo_calls_cum"),
                    parse_field<int64_t>(f[5], "inner_iters"),
                    parse_double_field(f[6], "elapsed_s")});
  }
  return rows;
}

std::vector<TraceRow> read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_trace_csv(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace dcfw
