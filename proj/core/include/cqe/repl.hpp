// Interactive query session over a censor.

#ifndef CQE_REPL_HPP_
#define CQE_REPL_HPP_

#include <iosfwd>
#include <string_view>

#include "cqe/censor.hpp"
#include "cqe/printer.hpp"

namespace cqe {

// Each input line is either a query formula or a command:
//   :content          content set and effective/credible/truthful verdicts
//   :report           all property verdicts, including min-invasive and repudiating
//   :transcript       queries and answers so far
//   :save <path>      export the transcript
//   :help, :quit
class Repl {
 public:
  // Throws InvalidConfiguration.
  Repl(PrivacyConfiguration config, Censor censor, Notation notation = Notation::Ascii);

  // Returns false once the session should end.
  bool handle(std::string_view line, std::ostream& out);
  // Prompt loop until :quit or end of input.
  void run(std::istream& in, std::ostream& out, bool prompt = true);

  const Transcript& transcript() const noexcept { return session_.transcript(); }

 private:
  void print_content(std::ostream& out) const;
  void print_report(std::ostream& out) const;

  Session session_;
  Notation notation_;
};

}  // namespace cqe

#endif  // CQE_REPL_HPP_
