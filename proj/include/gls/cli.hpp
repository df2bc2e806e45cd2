#ifndef GLS_CLI_HPP
#define GLS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "gls/countermodel.hpp"
#include "gls/search.hpp"

namespace gls {

enum class OutputFormat { Text, Json, Latex, Dot };

/// The answer to one query: a proof or a countermodel, never both.
struct Verdict {
  Sequent query;
  Logic logic = Logic::GLS;
  bool provable = false;
  ProofPtr proof;
  std::optional<std::variant<CoreModel, ChainModel>> countermodel;
  /// Principal formulas of the (□L) steps; set iff GLS and provable.
  std::optional<FormulaSet> sigma;
};

/// Decides ⇒ f (GL) or ⇛ f (GLS).
Verdict decide(const Formula& f, Logic logic);
/// Decides a sequent; the logic follows its level.
Verdict decide(const Sequent& s);

std::string render(const Verdict& v, OutputFormat format);

/// Entry point of the command line tool. Exit status: 0 provable / true /
/// pass, 1 refuted / false, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gls

#endif  // GLS_CLI_HPP
