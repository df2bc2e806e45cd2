#include "gls/search.hpp"

#include <memory>
#include <stdexcept>

namespace gls {

Sequent query(const Formula& f, Logic logic) {
  return Sequent{logic == Logic::GL ? Level::First : Level::Second, {}, {f}};
}

bool is_axiom(const Sequent& s) {
  if (s.antecedent.contains(Formula::bot())) return true;
  for (const auto& f : s.antecedent)
    if (s.succedent.contains(f)) return true;
  return false;
}

namespace {

// The first formula (in canonical order across both sides) that violates its
// saturation condition, or nullopt when s is saturated.
std::optional<Formula> first_unsaturated(const Sequent& s) {
  std::optional<Formula> left;
  for (const auto& f : s.antecedent) {
    if (f.is_imp() && !s.succedent.contains(f.left()) && !s.antecedent.contains(f.right())) {
      left = f;
      break;
    }
    if (s.level == Level::Second && f.is_box() && !s.antecedent.contains(f.body())) {
      left = f;
      break;
    }
  }
  std::optional<Formula> right;
  for (const auto& f : s.succedent) {
    if (f.is_imp() && (!s.antecedent.contains(f.left()) || !s.succedent.contains(f.right()))) {
      right = f;
      break;
    }
  }
  if (left && right) return *right < *left ? right : left;
  return left ? left : right;
}

// One node of the backward expansion. Internal nodes carry the rule used to
// produce their children; leaves are either axioms or saturated.
struct SatNode {
  Sequent sequent;
  std::optional<Rule> rule;
  std::vector<std::unique_ptr<SatNode>> children;
  bool closed = false;
};

std::unique_ptr<SatNode> expand(Sequent s) {
  auto node = std::make_unique<SatNode>();
  if (is_axiom(s)) {
    node->sequent = std::move(s);
    node->closed = true;
    return node;
  }
  const auto f = first_unsaturated(s);
  if (!f) {
    node->sequent = std::move(s);
    return node;
  }
  if (s.antecedent.contains(*f) && f->is_imp()) {
    Sequent left = s;
    left.succedent.insert(f->left());
    Sequent right = s;
    right.antecedent.insert(f->right());
    node->rule = Rule{RuleKind::ImpL, *f};
    node->children.push_back(expand(std::move(left)));
    node->children.push_back(expand(std::move(right)));
  } else if (s.antecedent.contains(*f)) {
    Sequent next = s;
    next.antecedent.insert(f->body());
    node->rule = Rule{RuleKind::BoxL, *f};
    node->children.push_back(expand(std::move(next)));
  } else {
    Sequent next = s;
    next.antecedent.insert(f->left());
    next.succedent.insert(f->right());
    node->rule = Rule{RuleKind::ImpR, *f};
    node->children.push_back(expand(std::move(next)));
  }
  node->sequent = std::move(s);
  return node;
}

void collect_leaves(const SatNode& node, std::vector<const SatNode*>& out) {
  if (node.children.empty()) {
    out.push_back(&node);
    return;
  }
  for (const auto& c : node.children) collect_leaves(*c, out);
}

ProofPtr weaken_to(ProofPtr proof, const Sequent& target) {
  if (proof->conclusion == target) return proof;
  return make_proof(target, Rule{RuleKind::Weakening, std::nullopt}, {std::move(proof)});
}

ProofPtr axiom_proof(const Sequent& s) {
  for (const auto& f : s.antecedent) {
    if (s.succedent.contains(f)) {
      auto init = make_proof(Sequent{s.level, {f}, {f}}, Rule{RuleKind::InitId, f});
      return weaken_to(std::move(init), s);
    }
  }
  auto init = make_proof(Sequent{s.level, {Formula::bot()}, {}}, Rule{RuleKind::InitBot, std::nullopt});
  return weaken_to(std::move(init), s);
}

// Reassembles the expansion into a proof, given proofs for its leaves.
ProofPtr assemble(const SatNode& node, const std::map<const SatNode*, ProofPtr>& leaf_proofs) {
  if (node.children.empty()) return leaf_proofs.at(&node);
  std::vector<ProofPtr> premises;
  for (const auto& c : node.children) premises.push_back(assemble(*c, leaf_proofs));
  return make_proof(node.sequent, *node.rule, std::move(premises));
}

Sequent at_level(Sequent s, Level level) {
  s.level = level;
  return s;
}

}  // namespace

bool is_saturated(const Sequent& s) { return !first_unsaturated(s).has_value(); }

std::vector<SaturationLeaf> saturate(const Sequent& s) {
  const auto root = expand(s);
  std::vector<const SatNode*> leaves;
  collect_leaves(*root, leaves);
  std::vector<SaturationLeaf> out;
  out.reserve(leaves.size());
  for (const SatNode* leaf : leaves) out.push_back({leaf->sequent, leaf->closed});
  return out;
}

Sequent box_gl_premise(const Sequent& leaf, const Formula& boxed) {
  Sequent out{Level::First, unbox(leaf.antecedent), {boxed.body()}};
  for (const auto& f : leaf.antecedent)
    if (f.is_box()) out.antecedent.insert(f);
  out.antecedent.insert(boxed);
  return out;
}

const Prover::GlResult& Prover::solve_gl(const Sequent& s, std::size_t depth) {
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;
  if (depth > max_box_depth_) max_box_depth_ = depth;

  const auto root = expand(s);
  std::vector<const SatNode*> leaves;
  collect_leaves(*root, leaves);

  std::map<const SatNode*, ProofPtr> leaf_proofs;
  for (const SatNode* leaf : leaves) {
    if (leaf->closed) {
      leaf_proofs[leaf] = axiom_proof(leaf->sequent);
      continue;
    }
    const FormulaSet boxed_context = unbox(leaf->sequent.antecedent);
    ProofPtr found;
    for (const auto& f : leaf->sequent.succedent) {
      // ψ ∈ Γ_□ would make the leaf an axiom, so the guard only documents
      // that (□_GL) strictly grows the boxed context.
      if (!f.is_box() || boxed_context.contains(f.body())) continue;
      const Sequent premise = box_gl_premise(leaf->sequent, f);
      const GlResult& sub = solve_gl(premise, depth + 1);
      if (!sub.proof) continue;
      FormulaSet boxes;
      for (const auto& g : leaf->sequent.antecedent)
        if (g.is_box()) boxes.insert(g);
      auto step = make_proof(Sequent{Level::First, std::move(boxes), {f}},
                             Rule{RuleKind::BoxGL, f}, {sub.proof});
      found = weaken_to(std::move(step), leaf->sequent);
      break;
    }
    if (!found) return memo_.emplace(s, GlResult{nullptr, leaf->sequent}).first->second;
    leaf_proofs[leaf] = std::move(found);
  }
  return memo_.emplace(s, GlResult{assemble(*root, leaf_proofs), std::nullopt}).first->second;
}

SearchOutcome Prover::prove_gl(const Sequent& s) {
  if (s.level != Level::First) throw std::invalid_argument("prove_gl needs a first level sequent");
  const GlResult& r = solve_gl(s, 0);
  if (r.proof) return Proved{r.proof, {}};
  return Refuted{SaturationWitness{*r.stuck_leaf, *r.stuck_leaf}};
}

SearchOutcome Prover::prove_gls(const Sequent& s) {
  if (s.level != Level::Second)
    throw std::invalid_argument("prove_gls needs a second level sequent");
  const auto root = expand(s);
  std::vector<const SatNode*> leaves;
  collect_leaves(*root, leaves);

  std::map<const SatNode*, ProofPtr> leaf_proofs;
  for (const SatNode* leaf : leaves) {
    if (leaf->closed) {
      leaf_proofs[leaf] = axiom_proof(leaf->sequent);
      continue;
    }
    const Sequent lifted = at_level(leaf->sequent, Level::First);
    const GlResult& sub = solve_gl(lifted, 0);
    if (!sub.proof) {
      return Refuted{SaturationWitness{leaf->sequent, *sub.stuck_leaf}};
    }
    leaf_proofs[leaf] =
        make_proof(leaf->sequent, Rule{RuleKind::LevelLift, std::nullopt}, {sub.proof});
  }
  ProofPtr tree = assemble(*root, leaf_proofs);
  FormulaSet sigma = box_l_principals(*tree);
  return Proved{std::move(tree), std::move(sigma)};
}

SearchOutcome prove_gl(const Sequent& s) { return Prover{}.prove_gl(s); }
SearchOutcome prove_gls(const Sequent& s) { return Prover{}.prove_gls(s); }
SearchOutcome prove(const Formula& f, Logic logic) { return Prover{}.prove(query(f, logic)); }

}  // namespace gls
