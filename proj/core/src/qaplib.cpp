#include "dcfw/qaplib.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace dcfw {
namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

std::string quoted(std::string_view token) {
  constexpr std::size_t kMax = 32;
  std::string out = "'";
  for (char c : token.substr(0, kMax)) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) {
      out += c;
    } else {
      out += '?';
    }
  }
  if (token.size() > kMax) out += "...";
  return out + "'";
}

double parse_number(const Token& token) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [end, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(ParseErrorKind::kNonFinite, token.offset,
                     "number out of range: " + quoted(token.text));
  }
  if (ec != std::errc() || end != last) {
    throw ParseError(ParseErrorKind::kNonNumeric, token.offset,
                     "not a number: " + quoted(token.text));
  }
  if (!std::isfinite(value)) {
    throw ParseError(ParseErrorKind::kNonFinite, token.offset,
                     "non-finite value: " + quoted(token.text));
  }
  return value;
}

Index parse_dimension(const Token& token) {
  long long n = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [end, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || end != last || n <= 0) {
    throw ParseError(ParseErrorKind::kBadDimension, token.offset,
                     "size must be a positive integer, got " +
                         quoted(token.text));
  }
  return static_cast<Index>(n);
}

std::string format_number(double value) {
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw InternalError("cannot format number");
  return std::string(buffer, end);
}

std::vector<std::filesystem::path> dat_files(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) {
    throw IoError("cannot list directory " + dir.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> files;
  for (; it != std::filesystem::directory_iterator(); it.increment(ec)) {
    if (ec) {
      throw IoError("cannot list directory " + dir.string() + ": " +
                    ec.message());
    }
    const auto& entry = *it;
    if (entry.path().extension() == ".dat" && entry.is_regular_file(ec)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) {
              return a.filename().string() < b.filename().string();
            });
  return files;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kEmpty:
      return "empty";
    case ParseErrorKind::kNonNumeric:
      return "non_numeric";
    case ParseErrorKind::kNonFinite:
      return "non_finite";
    case ParseErrorKind::kBadDimension:
      return "bad_dimension";
    case ParseErrorKind::kTokenCount:
      return "token_count";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset,
                       const std::string& detail)
    : Error(std::string(to_string(kind)) + " at byte " +
            std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset) {}

QapInstance parse_qaplib(std::string_view text, std::string name) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError(ParseErrorKind::kEmpty, 0, "no tokens");
  }
  const Index n = parse_dimension(tokens.front());

  // Compare without forming 2 n^2 when n is absurdly large.
  const std::size_t available = tokens.size() - 1;
  const auto un = static_cast<std::size_t>(n);
  const bool too_big = un > std::numeric_limits<std::size_t>::max() / 2 / un;
  const std::size_t expected = too_big ? 0 : 2 * un * un;
  if (too_big || available != expected) {
    const std::size_t offset =
        !too_big && available > expected ? tokens[expected + 1].offset
                                         : text.size();
    throw ParseError(ParseErrorKind::kTokenCount, offset,
                     "size " + std::to_string(n) + " needs " +
                         (too_big ? std::string("more") : std::to_string(expected)) +
                         " matrix entries, found " + std::to_string(available));
  }

  QapInstance instance;
  instance.name = std::move(name);
  instance.n = n;
  instance.A.resize(n, n);
  instance.B.resize(n, n);
  std::size_t next = 1;
  for (Matrix* m : {&instance.A, &instance.B}) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) (*m)(i, j) = parse_number(tokens[next++]);
    }
  }
  return instance;
}

std::string serialize_qaplib(const QapInstance& instance) {
  validate(instance);
  std::string out = std::to_string(instance.n) + "\n";
  for (const Matrix* m : {&instance.A, &instance.B}) {
    out += '\n';
    for (Index i = 0; i < instance.n; ++i) {
      for (Index j = 0; j < instance.n; ++j) {
        if (j > 0) out += ' ';
        out += format_number((*m)(i, j));
      }
      out += '\n';
    }
  }
  return out;
}

QapInstance read_qaplib_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return parse_qaplib(buffer.str(), path.stem().string());
}

LoadedDirectory load_directory(const std::filesystem::path& dir) {
  LoadedDirectory loaded;
  for (const auto& file : dat_files(dir)) {
    const std::string name = file.stem().string();
    try {
      loaded.instances.push_back(read_qaplib_file(file));
      loaded.report.valid.push_back(name);
    } catch (const ParseError& e) {
      loaded.report.invalid.emplace_back(name, e.what());
    } catch (const IoError& e) {
      loaded.report.invalid.emplace_back(name, e.what());
    }
  }
  return loaded;
}

ParseReport scan_directory(const std::filesystem::path& dir) {
  return load_directory(dir).report;
}

}  // namespace dcfw
