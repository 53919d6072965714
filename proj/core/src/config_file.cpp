#include "cqe/config_file.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "cqe/parser.hpp"
#include "cqe/printer.hpp"

namespace cqe {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Calls fn(line_text, line_number) for every non-blank, non-comment line.
template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (true) {
    ++line_no;
    auto nl = text.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') fn(line, line_no);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

std::string_view strip_period(std::string_view line) {
  if (!line.empty() && line.back() == '.') line.remove_suffix(1);
  return trim(line);
}

// '.' is not part of the formula grammar, so a line may hold several
// period-terminated formulas. `offset` is the column of body[0] minus one.
template <class Parse>
void for_each_item(std::string_view body, std::size_t line_no, std::size_t offset, Parse parse) {
  std::size_t start = 0;
  while (start < body.size()) {
    auto dot = body.find('.', start);
    std::size_t end = dot == std::string_view::npos ? body.size() : dot;
    std::string_view item = body.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < item.size() && (item[lead] == ' ' || item[lead] == '\t')) ++lead;
    if (!trim(item).empty()) {
      try {
        parse(trim(item));
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.column() + offset + start + lead, e.expected(), e.excerpt());
      }
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
}

}  // namespace

PrivacyConfiguration parse_config(std::string_view text) {
  enum class Section { None, Kb, Ak, Sec };
  Section section = Section::None;
  PrivacyConfiguration config;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    std::size_t offset = 0;
    if (line.front() == '[') {
      auto close = line.find(']');
      std::string_view header = line.substr(0, close == std::string_view::npos ? line.size() : close + 1);
      if (header == "[kb]") {
        section = Section::Kb;
      } else if (header == "[ak]") {
        section = Section::Ak;
      } else if (header == "[sec]") {
        section = Section::Sec;
      } else {
        throw ParseError(line_no, 1, "one of [kb], [ak], [sec]", std::string(line));
      }
      offset = header.size();
      line.remove_prefix(header.size());
      if (trim(line).empty()) return;
    }
    if (section == Section::None) {
      throw ParseError(line_no, 1, "a section header before the first formula", std::string(line));
    }
    for_each_item(line, line_no, offset, [&](std::string_view item) {
      if (section == Section::Kb) config.kb.insert(parse_l(item, line_no));
      if (section == Section::Ak) config.ak.insert(parse_m(item, line_no));
      if (section == Section::Sec) config.sec.insert(parse_l(item, line_no));
    });
  });
  return config;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedConfig load_config(const std::filesystem::path& path) {
  PrivacyConfiguration config = parse_config(read_file(path));
  ValidationReport report = validate(config);
  return {std::move(config), std::move(report)};
}

std::vector<LFormula> parse_query_lines(std::string_view text) {
  std::vector<LFormula> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    out.push_back(parse_l(strip_period(line), line_no));
  });
  return out;
}

std::vector<LFormula> parse_query_list(std::string_view text) {
  std::vector<LFormula> out;
  while (true) {
    auto semi = text.find(';');
    std::string_view item = trim(text.substr(0, semi));
    if (!item.empty()) out.push_back(parse_l(item));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return out;
}

std::vector<LFormula> load_queries(const std::filesystem::path& path) { return parse_query_lines(read_file(path)); }

void write_transcript(std::ostream& os, const Transcript& tr) {
  os << "# query\tanswer\n";
  for (std::size_t i = 0; i < tr.size(); ++i) os << to_string(tr.queries[i]) << '\t' << to_char(tr.answers[i]) << '\n';
  for (const auto& e : tr.events) os << "# event at " << e.index + 1 << ": " << e.detail << '\n';
}

}  // namespace cqe
