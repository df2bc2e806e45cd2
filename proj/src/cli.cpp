#include "gls/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "gls/calculus.hpp"
#include "gls/crosscheck.hpp"
#include "gls/proof_io.hpp"
#include "gls/semantics.hpp"

namespace gls {

namespace {

std::string_view logic_name(Logic logic) { return logic == Logic::GL ? "GL" : "GLS"; }

}  // namespace

Verdict decide(const Sequent& s) {
  Verdict v;
  v.query = s;
  v.logic = s.level == Level::First ? Logic::GL : Logic::GLS;
  Prover prover;
  const auto outcome = prover.prove(s);
  if (const auto* p = std::get_if<Proved>(&outcome)) {
    v.provable = true;
    v.proof = p->tree;
    if (v.logic == Logic::GLS) v.sigma = p->box_l_principals;
    return v;
  }
  const auto& witness = std::get<Refuted>(outcome).witness;
  if (v.logic == Logic::GL) {
    v.countermodel = build_core(witness, prover);
  } else {
    v.countermodel = build_chain(witness, prover);
  }
  return v;
}

Verdict decide(const Formula& f, Logic logic) { return decide(query(f, logic)); }

namespace {

std::string latex_model(const CoreModel& m) {
  std::ostringstream os;
  os << "\\begin{itemize}\n";
  for (KripkeModel::World w = 0; w < m.model.size(); ++w) {
    os << "\\item $w_{" << w << "}$" << (w == m.designated ? " (designated)" : "") << ": $"
       << latex(m.sequents[w]) << "$; true: $\\{";
    bool first = true;
    for (const auto& v : m.model.true_vars(w)) {
      os << (first ? "" : ", ") << v;
      first = false;
    }
    os << "\\}$; sees: $\\{";
    first = true;
    for (auto s : m.model.successors(w)) {
      os << (first ? "" : ", ") << "w_{" << s << "}";
      first = false;
    }
    os << "\\}$\n";
  }
  os << "\\end{itemize}\n";
  return os.str();
}

std::string render_sigma_text(const FormulaSet& sigma) { return "{" + print(sigma) + "}"; }

}  // namespace

std::string render(const Verdict& v, OutputFormat format) {
  const std::string header = std::string(logic_name(v.logic)) + (v.provable ? " ⊢ " : " ⊬ ") +
                             print(v.query);
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json j = {{"query", to_json(v.query)},
                          {"logic", std::string(logic_name(v.logic))},
                          {"provable", v.provable}};
      if (v.proof) j["proof"] = to_json(*v.proof);
      if (v.sigma) {
        nlohmann::json sigma = nlohmann::json::array();
        for (const auto& f : *v.sigma) sigma.push_back(f.text());
        j["sigma"] = sigma;
      }
      if (v.countermodel) {
        if (const auto* core = std::get_if<CoreModel>(&*v.countermodel)) {
          j["countermodel"] = {{"kind", "core"},
                               {"model", to_json(*core)},
                               {"designated", core->model.id(core->designated)}};
        } else {
          nlohmann::json chain = to_json(std::get<ChainModel>(*v.countermodel));
          chain["kind"] = "chain";
          j["countermodel"] = chain;
        }
      }
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Text:
      os << header << "\n";
      if (v.proof) os << render_text(*v.proof);
      if (v.sigma) os << "Σ = " << render_sigma_text(*v.sigma) << "\n";
      if (v.countermodel) {
        if (const auto* core = std::get_if<CoreModel>(&*v.countermodel)) {
          os << "countermodel (falsified at the designated world *):\n" << render_text(*core);
        } else {
          os << "countermodel (falsified at every tail world):\n"
             << render_text(std::get<ChainModel>(*v.countermodel));
        }
      }
      break;
    case OutputFormat::Latex:
      os << "% " << header << "\n";
      if (v.proof) os << render_latex(*v.proof);
      if (v.sigma) {
        os << "$\\Sigma = \\{";
        bool first = true;
        for (const auto& f : *v.sigma) {
          os << (first ? "" : ", ") << latex(f);
          first = false;
        }
        os << "\\}$\n";
      }
      if (v.countermodel) {
        if (const auto* core = std::get_if<CoreModel>(&*v.countermodel)) {
          os << latex_model(*core);
        } else {
          const auto& chain = std::get<ChainModel>(*v.countermodel);
          os << latex_model(chain.core);
          os << "Tail worlds $1, 2, 3, \\ldots$ see $w_{" << chain.core.designated
             << "}$, its successors and every smaller tail world; true there: $\\{";
          bool first = true;
          for (const auto& p : chain.tail_valuation) {
            os << (first ? "" : ", ") << p;
            first = false;
          }
          os << "\\}$.\n";
        }
      }
      break;
    case OutputFormat::Dot:
      if (v.proof) os << to_dot(*v.proof);
      if (v.countermodel) {
        if (const auto* core = std::get_if<CoreModel>(&*v.countermodel)) {
          os << to_dot(*core);
        } else {
          os << to_dot(std::get<ChainModel>(*v.countermodel));
        }
      }
      break;
  }
  return os.str();
}

// {{{ Command line

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

bool looks_like_sequent(const std::string& text) {
  return text.find("=>") != std::string::npos || text.find("⇒") != std::string::npos ||
         text.find("⇛") != std::string::npos;
}

Sequent read_query(const std::string& text, Logic logic) {
  if (looks_like_sequent(text)) return parse_sequent(text);
  return query(parse(text), logic);
}

struct QueryOptions {
  std::string formula;
  std::string logic = "gls";
  std::string format = "text";
  std::size_t max_worlds = 4;
};

OutputFormat format_from(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  if (name == "dot") return OutputFormat::Dot;
  return OutputFormat::Text;
}

Logic logic_from(const std::string& name) { return name == "gl" ? Logic::GL : Logic::GLS; }

void add_query_options(CLI::App* cmd, QueryOptions& q) {
  cmd->add_option("formula", q.formula, "Formula, or a sequent written with => / =>>")->required();
  cmd->add_option("--logic", q.logic, "gl or gls")
      ->check(CLI::IsMember({"gl", "gls"}, CLI::ignore_case));
  cmd->add_option("--format", q.format, "text, json, latex or dot")
      ->check(CLI::IsMember({"text", "json", "latex", "dot"}, CLI::ignore_case));
  cmd->add_option("--max-worlds", q.max_worlds, "Enumeration bound for small countermodels")
      ->check(CLI::Range(1, 8));
}

int cmd_prove(const QueryOptions& q, std::ostream& out) {
  const Verdict v = decide(read_query(q.formula, logic_from(q.logic)));
  out << render(v, format_from(q.format));
  return v.provable ? kExitYes : kExitNo;
}

int cmd_countermodel(const QueryOptions& q, std::ostream& out) {
  const Sequent s = read_query(q.formula, logic_from(q.logic));
  const Verdict v = decide(s);
  if (v.provable) {
    out << print(s) << " is provable; it has no countermodel\n";
    return kExitYes;
  }
  Verdict only_model = v;
  only_model.proof = nullptr;
  const OutputFormat format = format_from(q.format);
  out << render(only_model, format);
  // A single formula at the second level also gets the smallest enumerated
  // model in which a reflexive world falsifies it.
  if (format == OutputFormat::Text && s.level == Level::Second && s.antecedent.empty() &&
      s.succedent.size() == 1) {
    const auto small = refute_by_enumeration(*s.succedent.begin(), q.max_worlds);
    if (small) {
      out << "smallest enumerated countermodel (world " << small->model.id(small->world)
          << "):\n"
          << to_json(small->model).dump() << "\n";
    } else {
      out << "no countermodel with at most " << q.max_worlds << " worlds\n";
    }
  }
  return kExitNo;
}

int cmd_check_model(const std::string& path, const std::string& world, const std::string& text,
                    std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open " << path << "\n";
    return kExitError;
  }
  KripkeModel m;
  try {
    m = model_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    err << "malformed model JSON: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "malformed model: " << e.what() << "\n";
    return kExitError;
  }
  if (const auto problems = frame_violations(m); !problems.empty()) {
    err << "not a GL-model:\n";
    for (const auto& p : problems) err << "  " << p << "\n";
    return kExitError;
  }
  const auto w = m.find(world);
  if (!w) {
    err << "unknown world '" << world << "'\n";
    return kExitError;
  }
  const bool value = eval(m, *w, parse(text));
  out << (value ? "true" : "false") << "\n";
  return value ? kExitYes : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedure, proofs and countermodels for the provability logics GL and GLS"};
  app.require_subcommand(1);

  QueryOptions prove_opts;
  auto* prove_cmd = app.add_subcommand("prove", "Decide a formula and print a proof or countermodel");
  add_query_options(prove_cmd, prove_opts);

  QueryOptions cm_opts;
  auto* cm_cmd = app.add_subcommand("countermodel", "Print only the countermodel of a formula");
  add_query_options(cm_cmd, cm_opts);

  std::string reduce_formula;
  auto* reduce_cmd = app.add_subcommand("reduce", "Print the GL formula equivalent to GLS provability");
  reduce_cmd->add_option("formula", reduce_formula)->required();

  std::string model_path, world, model_formula;
  auto* check_cmd = app.add_subcommand("check-model", "Evaluate a formula at a world of a JSON model");
  check_cmd->add_option("model", model_path, "Model JSON file")->required();
  check_cmd->add_option("world", world, "World id")->required();
  check_cmd->add_option("formula", model_formula)->required();

  CrosscheckOptions cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Random agreement checks between the procedures");
  cc_cmd->add_option("--count", cc.count, "Number of random formulas");
  cc_cmd->add_option("--max-depth", cc.max_depth, "Depth budget")->check(CLI::Range(0, 12));
  cc_cmd->add_option("--max-vars", cc.max_vars, "Variables p1..pN")->check(CLI::Range(1, 8));
  cc_cmd->add_option("--seed", cc.seed, "Generator seed");
  cc_cmd->add_option("--max-worlds", cc.max_worlds, "Enumeration bound")->check(CLI::Range(1, 6));

  std::vector<std::string> argv_storage{"gls"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*prove_cmd) return cmd_prove(prove_opts, out);
    if (*cm_cmd) return cmd_countermodel(cm_opts, out);
    if (*reduce_cmd) {
      out << reduce_to_gl(parse(reduce_formula)).text() << "\n";
      return kExitYes;
    }
    if (*check_cmd) return cmd_check_model(model_path, world, model_formula, out, err);
    if (*cc_cmd) {
      const auto report = run_crosscheck(cc);
      out << report.render();
      return report.ok() ? kExitYes : kExitNo;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

// }}}

}  // namespace gls
