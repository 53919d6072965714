// cqe: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a property violation was detected,
// 2 input or parse error.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cqe/config_file.hpp"
#include "cqe/parser.hpp"
#include "cqe/printer.hpp"
#include "cqe/repl.hpp"
#include "cqe/scenarios.hpp"
#include "cqe/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

cqe::Notation notation(bool unicode) { return unicode ? cqe::Notation::Unicode : cqe::Notation::Ascii; }

void print_config(const cqe::PrivacyConfiguration& config, cqe::Notation n) {
  std::cout << "kb  = " << cqe::to_string(config.kb, n) << '\n';
  std::cout << "ak  = " << cqe::to_string(config.ak, n) << '\n';
  std::cout << "sec = " << cqe::to_string(config.sec, n) << '\n';
}

void print_validation(const cqe::ValidationReport& r) {
  auto line = [](const char* condition, bool ok, const std::string& witness) {
    std::cout << "condition=" << condition << " verdict=" << (ok ? "pass" : "fail")
              << " witness=" << (witness.empty() ? "-" : witness) << '\n';
  };
  line("consistency", r.consistent, "");
  line("truthful-start", r.truthful_start, r.false_ak ? cqe::to_string(*r.false_ak) : "");
  line("hidden-secrets", r.hidden_secrets, r.exposed_secret ? cqe::to_string(*r.exposed_secret) : "");
}

std::vector<cqe::LFormula> read_queries(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return cqe::load_queries(arg);
  return cqe::parse_query_list(arg);
}

cqe::TieBreak tie_break(const std::string& name) {
  return name == "lie" ? cqe::TieBreak::Lie : cqe::TieBreak::Honest;
}

int cmd_check(const std::string& path, bool unicode) {
  auto loaded = cqe::load_config(path);
  print_config(loaded.config, notation(unicode));
  print_validation(loaded.report);
  std::cout << (loaded.report.valid() ? "valid" : "invalid") << '\n';
  return loaded.report.valid() ? kOk : kViolation;
}

int cmd_run(const std::string& path, const std::string& censor_name, const std::string& tie, const std::string& queries,
            bool unicode) {
  auto loaded = cqe::load_config(path);
  if (!loaded.report.valid()) {
    print_validation(loaded.report);
    std::cerr << "error: invalid configuration\n";
    return kInputError;
  }
  auto censor = cqe::censor_by_name(censor_name, tie_break(tie));
  auto qs = read_queries(queries);
  const auto& config = loaded.config;
  auto tr = cqe::run(censor, config, qs);

  for (std::size_t i = 0; i < tr.size(); ++i) {
    std::cout << i + 1 << ". " << cqe::to_string(tr.queries[i], notation(unicode)) << " => "
              << cqe::to_char(tr.answers[i]) << '\n';
  }
  for (const auto& e : tr.events) std::cout << "event at " << e.index + 1 << ": " << e.detail << '\n';

  std::vector<cqe::PropertyReport> reports{
      cqe::check_effective(config, tr),
      cqe::check_credible(config, tr),
      cqe::check_truthful(config, tr),
      cqe::check_min_invasive(config, censor, qs),
      cqe::check_repudiating(config, censor, qs),
  };
  bool any_violation = false;
  for (const auto& r : reports) {
    std::cout << r.to_line() << '\n';
    any_violation |= r.violated();
  }
  return any_violation ? kViolation : kOk;
}

int cmd_repl(const std::string& path, const std::string& censor_name, const std::string& tie, bool unicode,
             bool quiet) {
  auto loaded = cqe::load_config(path);
  if (!loaded.report.valid()) {
    print_validation(loaded.report);
    std::cerr << "error: invalid configuration\n";
    return kInputError;
  }
  cqe::Repl repl(loaded.config, cqe::censor_by_name(censor_name, tie_break(tie)), notation(unicode));
  if (!quiet) std::cout << "censor " << censor_name << "; :help for commands\n";
  repl.run(std::cin, std::cout, !quiet);
  return kOk;
}

int cmd_demo(const std::string& name, bool unicode) {
  auto report = cqe::demo_by_name(name);
  if (!report) {
    std::cerr << "error: unknown demo '" << name << "' (nogo1, nogo2, nogo2-fixed)\n";
    return kInputError;
  }
  report->print(std::cout, notation(unicode));
  return report->passed() ? kOk : kViolation;
}

int cmd_fuzz(const cqe::FuzzOptions& options) {
  auto result = cqe::fuzz(options);
  result.report.print(std::cout);
  for (const auto& c : result.counterexamples) {
    std::cout << "counterexample: " << c.check << " strategy=" << c.strategy << " (" << c.instance.origin << ") "
              << c.detail << '\n';
    if (!c.instance.queries.empty()) {
      std::cout << "  kb=" << cqe::to_string(c.instance.config.kb) << " ak=" << cqe::to_string(c.instance.config.ak)
                << " sec=" << cqe::to_string(c.instance.config.sec) << '\n';
      std::cout << "  queries:";
      for (const auto& q : c.instance.queries) std::cout << ' ' << cqe::to_string(q) << ';';
      std::cout << '\n';
    }
  }
  return result.report.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Controlled query evaluation: censors, property checkers and impossibility demos"};
  app.require_subcommand(1);
  bool unicode = false;
  app.add_flag("--unicode", unicode, "Print formulas with Unicode connectives");

  std::string path;
  std::string censor_name = "truthful-min";
  std::string tie = "honest";
  std::string queries;

  auto* check = app.add_subcommand("check", "Parse and validate a configuration file");
  check->add_option("file", path, "Configuration file")->required();

  auto* run = app.add_subcommand("run", "Answer a query sequence and check the censor properties");
  run->add_option("file", path, "Configuration file")->required();
  run->add_option("--censor", censor_name, "all-refuse | truthful-min | lying | honest | refuse-secret-atoms");
  run->add_option("--tie-break", tie, "Lying censor when both answers leak: honest | lie")
      ->check(CLI::IsMember({"honest", "lie"}));
  run->add_option("--queries", queries, "Query file (one per line) or inline list separated by ';'")->required();

  auto* repl = app.add_subcommand("repl", "Interactive query session");
  bool quiet = false;
  repl->add_option("file", path, "Configuration file")->required();
  repl->add_option("--censor", censor_name, "Censor name");
  repl->add_option("--tie-break", tie, "honest | lie")->check(CLI::IsMember({"honest", "lie"}));
  repl->add_flag("--quiet", quiet, "No banner or prompt");

  auto* demo = app.add_subcommand("demo", "Run a scripted demonstration");
  std::string demo_name;
  demo->add_option("name", demo_name, "nogo1 | nogo2 | nogo2-fixed")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Seeded property fuzzing of the censors");
  cqe::FuzzOptions options;
  fuzz->add_option("--seed", options.seed, "RNG seed");
  fuzz->add_option("--instances", options.instances, "Random instances")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-atoms", options.max_atoms, "Atoms per instance")->check(CLI::Range(1, 4));
  fuzz->add_option("--max-queries", options.max_queries, "Queries per instance")->check(CLI::Range(1, 6));
  fuzz->add_option("--threads", options.threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(path, unicode);
    if (*run) return cmd_run(path, censor_name, tie, queries, unicode);
    if (*repl) return cmd_repl(path, censor_name, tie, unicode, quiet);
    if (*demo) return cmd_demo(demo_name, unicode);
    if (*fuzz) return cmd_fuzz(options);
  } catch (const cqe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const cqe::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
