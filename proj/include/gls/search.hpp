// Cut-free backward proof search for GL_seq (first level sequents) and
// GLS_seq (second level sequents).
//
// A query is first saturated: (→L), (→R) and, on the second level, (□L) are
// applied backwards while keeping their principal formulas, so every rule
// application only adds subformulas of the query. Saturated leaves that are
// not axioms are then attacked with (□_GL) on the first level, or lifted with
// (⇒⇛) and handed to the first level on the second. The result is either a
// cut-free proof or the saturated open leaf where search got stuck.

#ifndef GLS_SEARCH_HPP
#define GLS_SEARCH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "gls/calculus.hpp"

namespace gls {

enum class Logic { GL, GLS };

/// ⇒ f for GL, ⇛ f for GLS.
Sequent query(const Formula& f, Logic logic);

/// Γ∩Δ ≠ ∅ or ⊥ ∈ Γ.
bool is_axiom(const Sequent& s);
/// The saturation conditions of the sequent's level: (→L) and (→R), plus
/// (□L) on the second level.
bool is_saturated(const Sequent& s);

struct SaturationLeaf {
  Sequent sequent;
  bool closed = false;
};

/// Leaves of the exhaustive backward expansion of s, left branch of (→L)
/// first. The first unsaturated formula in canonical order is expanded at
/// every step; axioms are not expanded further and come back closed.
std::vector<SaturationLeaf> saturate(const Sequent& s);

/// Γ_□, □Γ_□, □ψ ⇒ ψ for a leaf Γ ⇒ Δ and □ψ ∈ Δ, where Γ_□ = unbox(Γ).
Sequent box_gl_premise(const Sequent& leaf, const Formula& boxed);

struct SaturationWitness {
  /// Saturated, non-axiom, same level as the query.
  Sequent root;
  /// root moved to the first level; for second level queries this is the
  /// unprovable premise of (⇒⇛).
  Sequent first_level_core;
};

struct Proved {
  ProofPtr tree;
  /// Principal formulas of every (□L) node in tree.
  FormulaSet box_l_principals;
};

struct Refuted {
  SaturationWitness witness;
};

using SearchOutcome = std::variant<Proved, Refuted>;

inline bool is_proved(const SearchOutcome& o) { return std::holds_alternative<Proved>(o); }

/// Proof search with a memo table of first level results. Reusing one Prover
/// across related queries shares that table.
class Prover {
 public:
  /// Precondition: s.level == Level::First (throws std::invalid_argument).
  SearchOutcome prove_gl(const Sequent& s);
  /// Precondition: s.level == Level::Second (throws std::invalid_argument).
  SearchOutcome prove_gls(const Sequent& s);
  SearchOutcome prove(const Sequent& s) {
    return s.level == Level::First ? prove_gl(s) : prove_gls(s);
  }

  /// Deepest nesting of backward (□_GL) steps seen so far.
  std::size_t max_box_depth() const { return max_box_depth_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct GlResult {
    ProofPtr proof;                      // null when refuted
    std::optional<Sequent> stuck_leaf;   // set when refuted
  };

  const GlResult& solve_gl(const Sequent& s, std::size_t depth);

  std::map<Sequent, GlResult> memo_;
  std::size_t max_box_depth_ = 0;
};

SearchOutcome prove_gl(const Sequent& s);
SearchOutcome prove_gls(const Sequent& s);
SearchOutcome prove(const Formula& f, Logic logic);

}  // namespace gls

#endif  // GLS_SEARCH_HPP
