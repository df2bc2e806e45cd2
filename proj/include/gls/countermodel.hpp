// Countermodels read off failed proof searches.
//
// CoreModel is the finite model whose worlds are saturated, cut-free
// unprovable first level sequents, related by
//
//   (Γ ⇒ Δ) R (Γ' ⇒ Δ')  iff  unbox(Γ) ⊊ unbox(Γ') and unbox(Γ) ⊆ Γ'
//
// with p true at Γ ⇒ Δ iff p ∈ Γ. Only the part generated from the
// designated world is built.
//
// ChainModel adds an infinite descending tail 1, 2, 3, ... below a designated
// core world. Tail world n sees every m < n, the designated world and all of
// its successors; every tail world carries the designated world's valuation.
// The tail is never materialized.

#ifndef GLS_COUNTERMODEL_HPP
#define GLS_COUNTERMODEL_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gls/search.hpp"
#include "gls/semantics.hpp"

namespace gls {

struct CoreModel {
  /// World ids are the printed sequents.
  KripkeModel model;
  /// sequents[w] is the first level sequent behind world w.
  std::vector<Sequent> sequents;
  KripkeModel::World designated = 0;
};

struct ChainModel {
  CoreModel core;
  /// Variables true at every tail world.
  std::set<std::string> tail_valuation;

  KripkeModel::World designated_core() const { return core.designated; }
};

/// Builds the generated core model from witness.first_level_core. Throws
/// std::logic_error when the witness is not a saturated, non-axiom, unprovable
/// first level sequent.
CoreModel build_core(const SaturationWitness& witness, Prover& prover);
CoreModel build_core(const SaturationWitness& witness);

/// The chain model below the core built from witness.first_level_core.
ChainModel build_chain(const SaturationWitness& witness, Prover& prover);
ChainModel build_chain(const SaturationWitness& witness);

/// Truth of one formula along the tail. values[n-1] is the value at tail
/// world n for n up to the horizon; from stable_from on the value never
/// changes again.
struct TailProfile {
  std::vector<bool> values;
  bool stable_value = false;
  std::size_t stable_from = 1;

  /// Value at tail world n ≥ 1.
  bool at(std::size_t n) const {
    return n <= values.size() ? values[n - 1] : stable_value;
  }
  bool always(bool v) const { return stable_value == v && stable_from == 1; }
};

struct TailVerdict {
  /// Number of tail worlds computed; all formulas are constant beyond it.
  std::size_t horizon = 0;
  std::map<Formula, TailProfile> profiles;

  /// Throws std::out_of_range for formulas outside the evaluated closure.
  const TailProfile& operator[](const Formula& f) const { return profiles.at(f); }
};

/// Tail profiles of every formula in the subformula closure of formulas.
/// The computation stops once the set of formulas falsified somewhere on the
/// tail stops growing, which takes at most |closure| + 1 steps.
TailVerdict eval_chain(const ChainModel& m, const FormulaSet& formulas);
TailProfile eval_chain(const ChainModel& m, const FormulaSet& formulas, const Formula& f);

/// Violations of "φ ∈ Γ ⇒ true at Γ ⇒ Δ" and "φ ∈ Δ ⇒ false at Γ ⇒ Δ" over
/// every world. Empty when the truth lemma holds.
std::vector<std::string> core_truth_lemma_failures(const CoreModel& m);
/// The same for the tail, against the designated world's sequent.
std::vector<std::string> chain_truth_lemma_failures(const ChainModel& m);

nlohmann::json to_json(const CoreModel& m);
/// {"core": <model>, "designated": id, "tail_valuation": [vars]}
nlohmann::json to_json(const ChainModel& m);
std::string to_dot(const CoreModel& m);
/// Core plus a schematic three-world tail ending in an ellipsis node.
std::string to_dot(const ChainModel& m);
std::string render_text(const CoreModel& m);
std::string render_text(const ChainModel& m);

}  // namespace gls

#endif  // GLS_COUNTERMODEL_HPP
