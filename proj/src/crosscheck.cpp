#include "gls/crosscheck.hpp"

#include <sstream>

#include "gls/calculus.hpp"
#include "gls/random_formula.hpp"
#include "gls/search.hpp"
#include "gls/semantics.hpp"

namespace gls {

std::vector<std::string> validate_core(const CoreModel& m, const Formula& f) {
  std::vector<std::string> out = frame_violations(m.model);
  for (auto& msg : core_truth_lemma_failures(m)) out.push_back(std::move(msg));
  if (eval(m.model, m.designated, f)) out.push_back("designated world satisfies " + f.text());
  return out;
}

std::vector<std::string> validate_chain(const ChainModel& m, const Formula& f) {
  std::vector<std::string> out = frame_violations(m.core.model);
  for (auto& msg : core_truth_lemma_failures(m.core)) out.push_back(std::move(msg));
  for (auto& msg : chain_truth_lemma_failures(m)) out.push_back(std::move(msg));
  if (!eval_chain(m, {f}, f).always(false)) out.push_back("some tail world satisfies " + f.text());
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

CrosscheckReport run_crosscheck(const CrosscheckOptions& options) {
  CrosscheckReport report;
  report.options = options;
  if (options.count == 0) return report;
  FormulaGenerator gen(options.seed, options.max_depth, options.max_vars);

  for (std::size_t i = 0; i < options.count; ++i) {
    const Formula f = gen.next();
    ++report.formulas;
    auto fail = [&](std::string check, std::string detail) {
      report.failures.push_back({f.text(), std::move(check), std::move(detail)});
    };

    Prover prover;
    const auto gls = prover.prove_gls(query(f, Logic::GLS));
    const Formula reduced = reduce_to_gl(f);
    const auto gl = prover.prove_gl(query(reduced, Logic::GL));

    if (is_proved(gls) == is_proved(gl)) {
      ++report.reduction_agree;
    } else {
      fail("reduction", std::string("GLS says ") + (is_proved(gls) ? "provable" : "refuted") +
                            ", GL on the reduction says " + (is_proved(gl) ? "provable" : "refuted"));
    }

    if (const auto* r = std::get_if<Refuted>(&gls)) {
      ++report.countermodels;
      const auto problems = validate_chain(build_chain(r->witness, prover), f);
      if (problems.empty()) {
        ++report.countermodels_valid;
      } else {
        fail("countermodel", "chain model: " + join(problems));
      }
    }
    if (const auto* r = std::get_if<Refuted>(&gl)) {
      ++report.countermodels;
      const auto problems = validate_core(build_core(r->witness, prover), reduced);
      if (problems.empty()) {
        ++report.countermodels_valid;
      } else {
        fail("countermodel", "core model of the reduction: " + join(problems));
      }
    }

    const auto small = refute_by_enumeration(f, options.max_worlds);
    if (is_proved(gls)) {
      ++report.gls_provable;
      if (small) {
        fail("oracle", "enumeration refutes a proved formula at world " +
                           small->model.id(small->world) + " of " + to_json(small->model).dump());
      } else {
        ++report.oracle_consistent;
      }
    } else {
      ++report.oracle_consistent;
      if (!small) ++report.refuted_without_small_model;
    }
  }
  return report;
}

std::string CrosscheckReport::render() const {
  std::ostringstream os;
  os << "crosscheck count=" << options.count << " max-depth=" << options.max_depth
     << " max-vars=" << options.max_vars << " seed=" << options.seed
     << " max-worlds=" << options.max_worlds << "\n";
  os << "formulas: " << formulas << " (GLS-provable " << gls_provable << ", refuted "
     << formulas - gls_provable << ")\n";
  os << "(a) reduction agreement: " << reduction_agree << "/" << formulas << "\n";
  os << "(b) countermodels falsify: " << countermodels_valid << "/" << countermodels << "\n";
  os << "(c) oracle consistency: " << oracle_consistent << "/" << formulas << "\n";
  os << "refuted without a countermodel of <= " << options.max_worlds
     << " worlds: " << refuted_without_small_model << "\n";
  for (const auto& f : failures)
    os << "FAIL [" << f.check << "] " << f.formula << ": " << f.detail << "\n";
  os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace gls
