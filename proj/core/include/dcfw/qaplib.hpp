#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcfw/common.hpp"
#include "dcfw/problems.hpp"

namespace dcfw {

enum class ParseErrorKind { kEmpty, kNonNumeric, kNonFinite, kBadDimension, kTokenCount };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  // Byte offset of the offending token (end of input for count errors).
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

// QAPLIB text: n, then the n*n entries of A, then the n*n entries of B, all
// separated by whitespace. Exactly 1 + 2 n^2 tokens are accepted.
QapInstance parse_qaplib(std::string_view text, std::string name = {});

// Writes the same format, one matrix row per line, with round-trip precision.
std::string serialize_qaplib(const QapInstance& instance);

// Instance name is the file stem. Throws IoError if the file cannot be read
// and ParseError if it is malformed.
QapInstance read_qaplib_file(const std::filesystem::path& path);

struct ParseReport {
  std::vector<std::string> valid;
  std::vector<std::pair<std::string, std::string>> invalid;  // (name, reason)
};

struct LoadedDirectory {
  std::vector<QapInstance> instances;  // same order as report.valid
  ParseReport report;
};

// Parses every regular *.dat file in `dir`, ordered by file name. Names are
// file stems. Throws IoError if the directory cannot be listed.
LoadedDirectory load_directory(const std::filesystem::path& dir);
ParseReport scan_directory(const std::filesystem::path& dir);

}  // namespace dcfw
