// Two-level sequents, the rule set of GL_seq and GLS_seq, proof trees and an
// independent proof checker.

#ifndef GLS_CALCULUS_HPP
#define GLS_CALCULUS_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gls/formula.hpp"

namespace gls {

/// First level sequents are written with "⇒", second level with "⇛".
enum class Level { First, Second };

std::string_view arrow(Level level);
std::string_view level_name(Level level);  // "first" / "second"

struct Sequent {
  Level level = Level::First;
  FormulaSet antecedent;
  FormulaSet succedent;

  bool operator==(const Sequent&) const = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    if (auto c = a.antecedent <=> b.antecedent; c != 0) return c;
    return a.succedent <=> b.succedent;
  }
};

Sequent make_sequent(Level level, FormulaSet antecedent, FormulaSet succedent);
/// "p, q ⇒ r". Empty sides render as nothing.
std::string print(const Sequent& s);
/// Parses "Γ => Δ" (first level) or "Γ =>> Δ" (second level), with ⇒ and ⇛
/// accepted as aliases. Sides are comma-separated formulas.
Sequent parse_sequent(std::string_view text);

/// {φ | □φ ∈ s}
FormulaSet unbox(const FormulaSet& s);
/// {□φ | φ ∈ s}
FormulaSet box_all(const FormulaSet& s);

enum class RuleKind { InitId, InitBot, Cut, Weakening, ImpL, ImpR, BoxGL, BoxL, LevelLift };

std::string_view rule_name(RuleKind kind);
std::optional<RuleKind> rule_from_name(std::string_view name);
std::size_t arity(RuleKind kind);

struct Rule {
  RuleKind kind;
  /// Principal formula for ImpL, ImpR, BoxGL, BoxL; cut formula for Cut;
  /// the repeated formula for InitId. Absent otherwise.
  std::optional<Formula> principal;
};

struct ProofTree;
/// Subproofs may be shared between several parents.
using ProofPtr = std::shared_ptr<const ProofTree>;

struct ProofTree {
  Sequent conclusion;
  Rule rule;
  std::vector<ProofPtr> premises;
};

ProofPtr make_proof(Sequent conclusion, Rule rule, std::vector<ProofPtr> premises = {});

struct CheckResult {
  bool valid = true;
  /// Child indices from the root to the first failing node (pre-order,
  /// leftmost first).
  std::vector<std::size_t> path;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Checks that every node instantiates its rule exactly, with set semantics
/// for both sides of every sequent. Cut is accepted.
CheckResult check_proof(const ProofTree& tree);

bool contains_rule(const ProofTree& tree, RuleKind kind);
/// Principal formulas of every BoxL node.
FormulaSet box_l_principals(const ProofTree& tree);
/// Number of distinct nodes (shared subproofs counted once).
std::size_t node_count(const ProofTree& tree);

/// ⋀{□α→α | □α ∈ SF(f)} → f, conjuncts in canonical text order of □α and
/// left-nested. Returns f itself when it has no boxed subformula.
Formula reduce_to_gl(const Formula& f);

}  // namespace gls

#endif  // GLS_CALCULUS_HPP
