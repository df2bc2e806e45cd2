// Finite Kripke models, evaluation, Σ-reflexivity and the bounded
// countermodel enumeration used as an oracle against the prover.
//
// On a finite frame, "transitive and converse well-founded" is the same as
// "transitive and irreflexive", which is what is_gl_model checks.

#ifndef GLS_SEMANTICS_HPP
#define GLS_SEMANTICS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gls/calculus.hpp"
#include "gls/formula.hpp"

namespace gls {

class KripkeModel {
 public:
  using World = std::size_t;

  /// Throws std::invalid_argument on a duplicate id.
  World add_world(std::string id);
  void add_edge(World from, World to);
  void add_edge(const std::string& from, const std::string& to);
  void set_true(World w, const std::string& var);
  void set_true(const std::string& w, const std::string& var);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& worlds() const { return ids_; }
  const std::string& id(World w) const { return ids_.at(w); }
  std::optional<World> find(const std::string& id) const;
  /// Throws std::out_of_range for an unknown id.
  World index(const std::string& id) const;

  const std::set<World>& successors(World w) const { return succ_.at(w); }
  bool related(World from, World to) const { return succ_.at(from).contains(to); }
  /// Unassigned variables are false.
  bool holds(World w, const std::string& var) const { return true_vars_.at(w).contains(var); }
  const std::set<std::string>& true_vars(World w) const { return true_vars_.at(w); }
  std::vector<std::pair<World, World>> edges() const;

 private:
  std::vector<std::string> ids_;
  std::map<std::string, World> index_;
  std::vector<std::set<World>> succ_;
  std::vector<std::set<std::string>> true_vars_;
};

/// Human-readable frame condition failures; empty for a GL-model.
std::vector<std::string> frame_violations(const KripkeModel& m);
bool is_gl_model(const KripkeModel& m);

/// Truth value of f at every world, indexed by world.
std::vector<bool> truth_set(const KripkeModel& m, const Formula& f);
bool eval(const KripkeModel& m, KripkeModel::World w, const Formula& f);
/// Throws std::out_of_range for an unknown world id.
bool eval(const KripkeModel& m, const std::string& world, const Formula& f);

/// Some γ ∈ Γ false or some δ ∈ Δ true. The level is ignored.
bool eval_sequent(const KripkeModel& m, KripkeModel::World w, const Sequent& s);
bool eval_sequent(const KripkeModel& m, const std::string& world, const Sequent& s);

/// Worlds where □α → α holds for every □α ∈ sigma; unboxed members of sigma
/// impose nothing.
std::vector<bool> reflexive_mask(const KripkeModel& m, const FormulaSet& sigma);
std::set<std::string> reflexive_worlds(const KripkeModel& m, const FormulaSet& sigma);

/// The sequent holds at every sigma-reflexive world.
bool check_c1(const KripkeModel& m, const FormulaSet& sigma, const Sequent& s);
/// check_c1 with sigma = every boxed subformula of the sequent.
bool check_c0(const KripkeModel& m, const Sequent& s);

/// A strict partial order on worlds 0..n-1. Bit k of relation encodes the
/// ordered pair (i, j), i ≠ j, at k = i*(n-1) + (j < i ? j : j-1).
struct SmallFrame {
  std::size_t worlds = 0;
  std::uint64_t relation = 0;
  std::vector<std::uint64_t> successors;  // bitmask per world
};

/// Every transitive irreflexive frame on n worlds (1 ≤ n ≤ 8), in increasing
/// relation bitmask order.
std::vector<SmallFrame> gl_frames(std::size_t n);

/// Calls visit on every GL-model with 1..max_worlds worlds over vars, ordered
/// by world count, relation bitmask, then valuation bitmask (bit i*|vars|+v is
/// variable v at world i). World ids are "w0", "w1", ... Stops early when
/// visit returns false.
void for_each_gl_model(std::size_t max_worlds, const std::set<std::string>& vars,
                       const std::function<bool(const KripkeModel&)>& visit);

struct ModelWorld {
  KripkeModel model;
  KripkeModel::World world = 0;
};

/// First model (in for_each_gl_model order) with a world that is
/// SF(f)-reflexive and falsifies f; the lowest such world is reported.
/// Absence within the bound is inconclusive.
std::optional<ModelWorld> refute_by_enumeration(const Formula& f, std::size_t max_worlds);

// {{{ I/O

/// {"worlds": [...], "relation": [[from, to], ...], "valuation": {id: [vars]}}
nlohmann::json to_json(const KripkeModel& m);
/// Throws std::invalid_argument on schema errors or unknown world ids.
KripkeModel model_from_json(const nlohmann::json& j);
std::string to_dot(const KripkeModel& m, const std::string& graph_name = "model");

// }}}

}  // namespace gls

#endif  // GLS_SEMANTICS_HPP
