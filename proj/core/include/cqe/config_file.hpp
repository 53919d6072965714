// Text formats: configuration files, query lists, transcripts.
//
// Configuration file:
//
//   # comment
//   [kb]
//   a
//   [ak]
//   box(c -> a) -> box(~c) | box(a)
//   [sec]
//   a
//
// One formula per line; an optional trailing '.' is ignored.

#ifndef CQE_CONFIG_FILE_HPP_
#define CQE_CONFIG_FILE_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cqe/privacy.hpp"

namespace cqe {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedConfig {
  PrivacyConfiguration config;
  ValidationReport report;
};

// Throws ParseError.
PrivacyConfiguration parse_config(std::string_view text);
// Parses and validates; an invalid configuration is returned with its report.
// Throws IoError or ParseError.
LoadedConfig load_config(const std::filesystem::path& path);

// One formula per line, '#' comments and blank lines skipped. Throws ParseError.
std::vector<LFormula> parse_query_lines(std::string_view text);
// Formulas separated by ';'. Throws ParseError.
std::vector<LFormula> parse_query_list(std::string_view text);
std::vector<LFormula> load_queries(const std::filesystem::path& path);

// "<formula>\t<answer>" per line, preceded by a comment header.
void write_transcript(std::ostream& os, const Transcript& tr);

std::string read_file(const std::filesystem::path& path);

}  // namespace cqe

#endif  // CQE_CONFIG_FILE_HPP_
