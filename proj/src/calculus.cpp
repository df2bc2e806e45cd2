#include "gls/calculus.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace gls {

std::string_view arrow(Level level) { return level == Level::First ? "⇒" : "⇛"; }
std::string_view level_name(Level level) { return level == Level::First ? "first" : "second"; }

Sequent make_sequent(Level level, FormulaSet antecedent, FormulaSet succedent) {
  return Sequent{level, std::move(antecedent), std::move(succedent)};
}

std::string print(const Sequent& s) {
  std::string out = print(s.antecedent);
  if (!out.empty()) out += ' ';
  out += arrow(s.level);
  if (!s.succedent.empty()) {
    out += ' ';
    out += print(s.succedent);
  }
  return out;
}

namespace {

FormulaSet parse_side(std::string_view text, std::size_t offset) {
  FormulaSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view piece = text.substr(start, comma - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      try {
        out.insert(parse(piece));
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), offset + start + e.position());
      }
    } else if (comma != text.size() || start != 0) {
      throw ParseError("empty formula in sequent side", offset + start);
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text) {
  struct Arrow {
    std::string_view spelling;
    Level level;
  };
  constexpr std::array<Arrow, 4> kArrows = {{{"=>>", Level::Second},
                                             {"⇛", Level::Second},
                                             {"=>", Level::First},
                                             {"⇒", Level::First}}};
  for (const auto& a : kArrows) {
    const std::size_t at = text.find(a.spelling);
    if (at == std::string_view::npos) continue;
    const std::size_t rest = at + a.spelling.size();
    return Sequent{a.level, parse_side(text.substr(0, at), 0),
                   parse_side(text.substr(rest), rest)};
  }
  throw ParseError("expected '=>' or '=>>'", text.size());
}

FormulaSet unbox(const FormulaSet& s) {
  FormulaSet out;
  for (const auto& f : s)
    if (f.is_box()) out.insert(f.body());
  return out;
}

FormulaSet box_all(const FormulaSet& s) {
  FormulaSet out;
  for (const auto& f : s) out.insert(Formula::box(f));
  return out;
}

namespace {

constexpr std::array<std::string_view, 9> kRuleNames = {
    "InitId", "InitBot", "Cut", "Weakening", "ImpL", "ImpR", "BoxGL", "BoxL", "LevelLift"};

}  // namespace

std::string_view rule_name(RuleKind kind) { return kRuleNames[static_cast<std::size_t>(kind)]; }

std::optional<RuleKind> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<RuleKind>(i);
  return std::nullopt;
}

std::size_t arity(RuleKind kind) {
  switch (kind) {
    case RuleKind::InitId:
    case RuleKind::InitBot:
      return 0;
    case RuleKind::Cut:
    case RuleKind::ImpL:
      return 2;
    default:
      return 1;
  }
}

ProofPtr make_proof(Sequent conclusion, Rule rule, std::vector<ProofPtr> premises) {
  return std::make_shared<const ProofTree>(
      ProofTree{std::move(conclusion), std::move(rule), std::move(premises)});
}

// {{{ Proof checking

namespace {

FormulaSet with(FormulaSet s, const Formula& f) {
  s.insert(f);
  return s;
}

FormulaSet without(FormulaSet s, const Formula& f) {
  s.erase(f);
  return s;
}

bool subset(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Empty string when the node instantiates its rule; otherwise the reason.
std::string check_node(const ProofTree& node) {
  const Sequent& c = node.conclusion;
  const RuleKind kind = node.rule.kind;
  if (node.premises.size() != arity(kind)) return "wrong number of premises";
  for (const auto& p : node.premises)
    if (!p) return "null premise";

  const bool needs_principal = kind == RuleKind::Cut || kind == RuleKind::ImpL ||
                               kind == RuleKind::ImpR || kind == RuleKind::BoxGL ||
                               kind == RuleKind::BoxL;
  if (needs_principal && !node.rule.principal) return "missing principal formula";

  // Level discipline.
  if (kind == RuleKind::LevelLift) {
    if (c.level != Level::Second || node.premises[0]->conclusion.level != Level::First)
      return "level discipline";
  } else {
    if (kind == RuleKind::BoxGL && c.level != Level::First) return "level discipline";
    if (kind == RuleKind::BoxL && c.level != Level::Second) return "level discipline";
    for (const auto& p : node.premises)
      if (p->conclusion.level != c.level) return "level discipline";
  }

  switch (kind) {
    case RuleKind::InitId: {
      if (c.antecedent.size() != 1 || c.antecedent != c.succedent)
        return "InitId needs the same single formula on both sides";
      if (node.rule.principal && *node.rule.principal != *c.antecedent.begin())
        return "InitId principal does not match";
      return {};
    }
    case RuleKind::InitBot:
      if (c.antecedent != FormulaSet{Formula::bot()} || !c.succedent.empty())
        return "InitBot needs exactly _|_ on the left and nothing on the right";
      return {};
    case RuleKind::Weakening: {
      const Sequent& p = node.premises[0]->conclusion;
      if (!subset(p.antecedent, c.antecedent) || !subset(p.succedent, c.succedent))
        return "Weakening premise is not contained in the conclusion";
      return {};
    }
    case RuleKind::Cut: {
      const Formula& a = *node.rule.principal;
      const Sequent& left = node.premises[0]->conclusion;
      const Sequent& right = node.premises[1]->conclusion;
      if (left.antecedent != c.antecedent || left.succedent != with(c.succedent, a))
        return "Cut left premise must be Γ ▸ Δ, φ";
      if (right.antecedent != with(c.antecedent, a) || right.succedent != c.succedent)
        return "Cut right premise must be φ, Γ ▸ Δ";
      return {};
    }
    case RuleKind::ImpL: {
      const Formula& f = *node.rule.principal;
      if (!f.is_imp()) return "ImpL principal is not an implication";
      if (!c.antecedent.contains(f)) return "ImpL principal not in antecedent";
      const Sequent& left = node.premises[0]->conclusion;
      const Sequent& right = node.premises[1]->conclusion;
      const FormulaSet& gamma = left.antecedent;
      if (gamma != c.antecedent && gamma != without(c.antecedent, f))
        return "ImpL left premise antecedent must be Γ";
      if (left.succedent != with(c.succedent, f.left()))
        return "ImpL left premise succedent must be Δ, φ";
      if (right.antecedent != with(gamma, f.right()) || right.succedent != c.succedent)
        return "ImpL right premise must be ψ, Γ ▸ Δ";
      return {};
    }
    case RuleKind::ImpR: {
      const Formula& f = *node.rule.principal;
      if (!f.is_imp()) return "ImpR principal is not an implication";
      if (!c.succedent.contains(f)) return "ImpR principal not in succedent";
      const Sequent& p = node.premises[0]->conclusion;
      if (p.antecedent != with(c.antecedent, f.left()))
        return "ImpR premise antecedent must be φ, Γ";
      if (p.succedent != with(c.succedent, f.right()) &&
          p.succedent != with(without(c.succedent, f), f.right()))
        return "ImpR premise succedent must be Δ, ψ";
      return {};
    }
    case RuleKind::BoxGL: {
      const Formula& f = *node.rule.principal;
      if (!f.is_box()) return "BoxGL principal is not boxed";
      if (c.succedent != FormulaSet{f}) return "BoxGL conclusion succedent must be exactly □φ";
      for (const auto& g : c.antecedent)
        if (!g.is_box()) return "BoxGL conclusion antecedent must be boxed";
      const Sequent& p = node.premises[0]->conclusion;
      FormulaSet expected = unbox(c.antecedent);
      expected.insert(c.antecedent.begin(), c.antecedent.end());
      expected.insert(f);
      if (p.antecedent != expected) return "BoxGL premise antecedent must be Γ, □Γ, □φ";
      if (p.succedent != FormulaSet{f.body()}) return "BoxGL premise succedent must be φ";
      return {};
    }
    case RuleKind::BoxL: {
      const Formula& f = *node.rule.principal;
      if (!f.is_box()) return "BoxL principal is not boxed";
      if (!c.antecedent.contains(f)) return "BoxL principal not in antecedent";
      const Sequent& p = node.premises[0]->conclusion;
      if (p.succedent != c.succedent) return "BoxL premise succedent must be Δ";
      if (p.antecedent != with(c.antecedent, f.body()) &&
          p.antecedent != with(without(c.antecedent, f), f.body()))
        return "BoxL premise antecedent must be φ, Γ";
      return {};
    }
    case RuleKind::LevelLift: {
      const Sequent& p = node.premises[0]->conclusion;
      if (p.antecedent != c.antecedent || p.succedent != c.succedent)
        return "LevelLift must keep both sides unchanged";
      return {};
    }
  }
  return "unknown rule";
}

bool check_rec(const ProofTree& node, std::vector<std::size_t>& path,
               std::unordered_set<const ProofTree*>& verified, CheckResult& out) {
  if (verified.contains(&node)) return true;
  if (std::string reason = check_node(node); !reason.empty()) {
    out.valid = false;
    out.path = path;
    out.reason = std::move(reason);
    return false;
  }
  for (std::size_t i = 0; i < node.premises.size(); ++i) {
    path.push_back(i);
    if (!check_rec(*node.premises[i], path, verified, out)) return false;
    path.pop_back();
  }
  verified.insert(&node);
  return true;
}

template <typename Visit>
void for_each_node(const ProofTree& root, Visit&& visit) {
  std::unordered_set<const ProofTree*> seen;
  std::vector<const ProofTree*> stack{&root};
  while (!stack.empty()) {
    const ProofTree* node = stack.back();
    stack.pop_back();
    if (!seen.insert(node).second) continue;
    visit(*node);
    for (const auto& p : node->premises)
      if (p) stack.push_back(p.get());
  }
}

}  // namespace

CheckResult check_proof(const ProofTree& tree) {
  CheckResult out;
  std::vector<std::size_t> path;
  std::unordered_set<const ProofTree*> verified;
  check_rec(tree, path, verified, out);
  return out;
}

// }}}

bool contains_rule(const ProofTree& tree, RuleKind kind) {
  bool found = false;
  for_each_node(tree, [&](const ProofTree& n) { found = found || n.rule.kind == kind; });
  return found;
}

FormulaSet box_l_principals(const ProofTree& tree) {
  FormulaSet out;
  for_each_node(tree, [&](const ProofTree& n) {
    if (n.rule.kind == RuleKind::BoxL && n.rule.principal) out.insert(*n.rule.principal);
  });
  return out;
}

std::size_t node_count(const ProofTree& tree) {
  std::size_t n = 0;
  for_each_node(tree, [&](const ProofTree&) { ++n; });
  return n;
}

Formula reduce_to_gl(const Formula& f) {
  std::vector<Formula> reflections;
  for (const auto& g : subformulas(f))
    if (g.is_box()) reflections.push_back(Formula::imp(g, g.body()));
  if (reflections.empty()) return f;
  return Formula::imp(conj_all(reflections), f);
}

}  // namespace gls
