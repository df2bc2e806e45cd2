// Randomized agreement checks between the prover, the reduction to GL, the
// countermodel construction and the enumeration oracle.

#ifndef GLS_CROSSCHECK_HPP
#define GLS_CROSSCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gls/countermodel.hpp"
#include "gls/formula.hpp"

namespace gls {

struct CrosscheckOptions {
  std::size_t count = 100;
  std::size_t max_depth = 4;
  std::size_t max_vars = 2;
  std::uint64_t seed = 7;
  std::size_t max_worlds = 4;
};

struct CrosscheckFailure {
  std::string formula;
  std::string check;
  std::string detail;
};

struct CrosscheckReport {
  CrosscheckOptions options;
  std::size_t formulas = 0;
  std::size_t gls_provable = 0;
  /// (a) prove_gls(⇛ φ) agrees with prove_gl(⇒ reduce_to_gl(φ)).
  std::size_t reduction_agree = 0;
  /// (b) countermodels produced for refuted queries (GLS chain and GL core).
  std::size_t countermodels = 0;
  std::size_t countermodels_valid = 0;
  /// (c) GLS-provable formulas with no enumerated countermodel.
  std::size_t oracle_consistent = 0;
  /// Refuted formulas whose countermodel needs more than max_worlds worlds.
  std::size_t refuted_without_small_model = 0;
  std::vector<CrosscheckFailure> failures;

  bool ok() const { return failures.empty(); }
  /// Deterministic plain-text summary.
  std::string render() const;
};

/// Every problem found with a chain model built for the GLS query ⇛ f.
std::vector<std::string> validate_chain(const ChainModel& m, const Formula& f);
/// Every problem found with a core model built for the GL query ⇒ f.
std::vector<std::string> validate_core(const CoreModel& m, const Formula& f);

CrosscheckReport run_crosscheck(const CrosscheckOptions& options);

}  // namespace gls

#endif  // GLS_CROSSCHECK_HPP
