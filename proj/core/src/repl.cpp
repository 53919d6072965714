#include "cqe/repl.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "cqe/config_file.hpp"
#include "cqe/parser.hpp"
#include "cqe/verifier.hpp"

namespace cqe {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Repl::Repl(PrivacyConfiguration config, Censor censor, Notation notation)
    : session_(std::move(config), std::move(censor)), notation_(notation) {}

void Repl::print_content(std::ostream& out) const {
  const auto& config = session_.config();
  const auto& tr = session_.transcript();
  MTheory content = session_.content();
  out << "content (" << content.size() << " formulas, " << config.ak.size() << " from a priori knowledge):\n";
  for (const auto& f : content) out << "  " << to_string(f, notation_) << '\n';
  out << check_effective(config, tr).to_line() << '\n';
  out << check_credible(config, tr).to_line() << '\n';
  out << check_truthful(config, tr).to_line() << '\n';
}

void Repl::print_report(std::ostream& out) const {
  const auto& config = session_.config();
  const auto& tr = session_.transcript();
  out << check_effective(config, tr).to_line() << '\n';
  out << check_credible(config, tr).to_line() << '\n';
  out << check_truthful(config, tr).to_line() << '\n';
  out << check_min_invasive(config, session_.censor(), tr.queries).to_line() << '\n';
  out << check_repudiating(config, session_.censor(), tr.queries).to_line() << '\n';
}

bool Repl::handle(std::string_view line, std::ostream& out) {
  line = trim(line);
  if (line.empty()) return true;
  if (line.front() == ':') {
    std::string_view cmd = line.substr(0, line.find(' '));
    std::string_view arg = line.size() > cmd.size() ? trim(line.substr(cmd.size())) : std::string_view{};
    if (cmd == ":quit" || cmd == ":q") return false;
    if (cmd == ":content") {
      print_content(out);
    } else if (cmd == ":report") {
      print_report(out);
    } else if (cmd == ":transcript") {
      write_transcript(out, transcript());
    } else if (cmd == ":save") {
      if (arg.empty()) {
        out << "error: :save needs a path\n";
        return true;
      }
      std::ofstream file{std::string(arg)};
      if (!file) {
        out << "error: cannot write '" << arg << "'\n";
        return true;
      }
      write_transcript(file, transcript());
      out << "saved " << transcript().size() << " answers to " << arg << '\n';
    } else if (cmd == ":help") {
      out << "enter a formula to query, or :content :report :transcript :save <path> :quit\n";
    } else {
      out << "error: unknown command " << cmd << '\n';
    }
    return true;
  }
  try {
    LFormula q = parse_l(line);
    Answer a = session_.ask(q);
    out << to_char(a) << '\n';
    const auto& events = transcript().events;
    if (!events.empty() && events.back().index + 1 == transcript().size()) {
      out << "warning: " << events.back().detail << '\n';
    }
  } catch (const ParseError& e) {
    out << "error: " << e.what() << '\n';
  }
  return true;
}

void Repl::run(std::istream& in, std::ostream& out, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out << "? " << std::flush;
    if (!std::getline(in, line)) break;
    if (!handle(line, out)) break;
  }
}

}  // namespace cqe
