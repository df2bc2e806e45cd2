#include "gls/calculus.hpp"

#include <gtest/gtest.h>

#include "gls/proof_io.hpp"
#include "gls/random_formula.hpp"
#include "gls/search.hpp"

namespace gls {
namespace {

const Formula p = Formula::var("p");
const Formula q = Formula::var("q");
const Formula bot = Formula::bot();

Formula Imp(const Formula& a, const Formula& b) { return Formula::imp(a, b); }
Formula Box(const Formula& a) { return Formula::box(a); }

Sequent first(FormulaSet ant, FormulaSet suc) {
  return make_sequent(Level::First, std::move(ant), std::move(suc));
}
Sequent second(FormulaSet ant, FormulaSet suc) {
  return make_sequent(Level::Second, std::move(ant), std::move(suc));
}

ProofPtr leaf(Sequent s, RuleKind kind) { return make_proof(std::move(s), Rule{kind, std::nullopt}); }
ProofPtr node(Sequent s, RuleKind kind, Formula principal, std::vector<ProofPtr> premises) {
  return make_proof(std::move(s), Rule{kind, std::move(principal)}, std::move(premises));
}
ProofPtr plain(Sequent s, RuleKind kind, std::vector<ProofPtr> premises) {
  return make_proof(std::move(s), Rule{kind, std::nullopt}, std::move(premises));
}

TEST(Sequent, PrintAndParse) {
  EXPECT_EQ(print(first({p, q}, {Box(p)})), "p, q ⇒ []p");
  EXPECT_EQ(print(second({}, {Imp(Box(p), p)})), "⇛ []p -> p");
  EXPECT_EQ(parse_sequent("p, q => []p"), first({p, q}, {Box(p)}));
  EXPECT_EQ(parse_sequent("=>> []p -> p"), second({}, {Imp(Box(p), p)}));
  EXPECT_EQ(parse_sequent("[]p ⇛ p"), second({Box(p)}, {p}));
  EXPECT_EQ(parse_sequent("p ⇒"), first({p}, {}));
  EXPECT_THROW(parse_sequent("p, q"), ParseError);
}

TEST(Unbox, Examples) {
  EXPECT_EQ(unbox({Box(p), q, Box(Box(q))}), (FormulaSet{p, Box(q)}));
  EXPECT_TRUE(unbox({p, q}).empty());
  EXPECT_EQ(box_all({p, Box(q)}), (FormulaSet{Box(p), Box(Box(q))}));
}

TEST(Rules, NamesAndArities) {
  for (auto kind : {RuleKind::InitId, RuleKind::InitBot, RuleKind::Cut, RuleKind::Weakening,
                    RuleKind::ImpL, RuleKind::ImpR, RuleKind::BoxGL, RuleKind::BoxL,
                    RuleKind::LevelLift})
    EXPECT_EQ(rule_from_name(rule_name(kind)), kind);
  EXPECT_FALSE(rule_from_name("Modus"));
  EXPECT_EQ(arity(RuleKind::InitBot), 0u);
  EXPECT_EQ(arity(RuleKind::Cut), 2u);
  EXPECT_EQ(arity(RuleKind::ImpL), 2u);
  EXPECT_EQ(arity(RuleKind::LevelLift), 1u);
}

TEST(CheckProof, InitId) {
  EXPECT_TRUE(check_proof(*node(first({p}, {p}), RuleKind::InitId, p, {})));
  EXPECT_FALSE(check_proof(*leaf(first({p, q}, {p}), RuleKind::InitId)));
  EXPECT_FALSE(check_proof(*leaf(first({p}, {q}), RuleKind::InitId)));
}

TEST(CheckProof, InitBot) {
  EXPECT_TRUE(check_proof(*leaf(first({bot}, {}), RuleKind::InitBot)));
  EXPECT_TRUE(check_proof(*leaf(second({bot}, {}), RuleKind::InitBot)));
  EXPECT_FALSE(check_proof(*leaf(first({bot}, {p}), RuleKind::InitBot)));
}

TEST(CheckProof, BoxLThenImpRAtSecondLevel) {
  // p ⇛ p, then □p ⇛ p by (□L), then ⇛ □p → p by (→R).
  const auto ax = node(second({p}, {p}), RuleKind::InitId, p, {});
  const auto box_l = node(second({Box(p)}, {p}), RuleKind::BoxL, Box(p), {ax});
  const auto root = node(second({}, {Imp(Box(p), p)}), RuleKind::ImpR, Imp(Box(p), p), {box_l});
  EXPECT_TRUE(check_proof(*root));
  EXPECT_EQ(box_l_principals(*root), (FormulaSet{Box(p)}));
  EXPECT_FALSE(contains_rule(*root, RuleKind::Cut));
  EXPECT_EQ(node_count(*root), 3u);
}

TEST(CheckProof, BoxLIsNotAFirstLevelRule) {
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  const auto bad = node(first({Box(p)}, {p}), RuleKind::BoxL, Box(p), {ax});
  const auto r = check_proof(*bad);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.reason, "level discipline");
}

TEST(CheckProof, LevelLiftOnlyGoesUp) {
  const auto ax = node(second({p}, {p}), RuleKind::InitId, p, {});
  const auto bad = plain(second({p}, {p}), RuleKind::LevelLift, {ax});
  const auto r = check_proof(*bad);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.reason, "level discipline");
  EXPECT_TRUE(r.path.empty());

  const auto ok = plain(second({p}, {p}), RuleKind::LevelLift,
                        {node(first({p}, {p}), RuleKind::InitId, p, {})});
  EXPECT_TRUE(check_proof(*ok));
  const auto changed = plain(second({p, q}, {p}), RuleKind::LevelLift,
                             {node(first({p}, {p}), RuleKind::InitId, p, {})});
  EXPECT_FALSE(check_proof(*changed));
}

TEST(CheckProof, PremisesMustShareTheLevel) {
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  const auto bad = plain(second({p, q}, {p}), RuleKind::Weakening, {ax});
  EXPECT_EQ(check_proof(*bad).reason, "level discipline");
}

TEST(CheckProof, BoxGLLob) {
  // □(□p→p), □p ⇒ □p and □(□p→p), p ⇒ p give □(□p→p), □p→p, □p ⇒ p by (→L),
  // then (□_GL) concludes □(□p→p) ⇒ □p.
  const Formula a = Imp(Box(p), p);
  const auto left_ok = plain(first({Box(a), Box(p)}, {p, Box(p)}), RuleKind::Weakening,
                             {node(first({Box(p)}, {Box(p)}), RuleKind::InitId, Box(p), {})});
  const auto right = plain(first({Box(a), Box(p), p}, {p}), RuleKind::Weakening,
                           {node(first({p}, {p}), RuleKind::InitId, p, {})});
  const auto imp_l = node(first({Box(a), Box(p), a}, {p}), RuleKind::ImpL, a, {left_ok, right});
  const auto root = node(first({Box(a)}, {Box(p)}), RuleKind::BoxGL, Box(p), {imp_l});
  EXPECT_TRUE(check_proof(*root)) << check_proof(*root).reason;

  // The conclusion antecedent must be fully boxed.
  const auto bad = node(first({Box(a), q}, {Box(p)}), RuleKind::BoxGL, Box(p), {imp_l});
  EXPECT_FALSE(check_proof(*bad));
  // And BoxGL is a first level rule.
  const auto bad2 = node(second({Box(a)}, {Box(p)}), RuleKind::BoxGL, Box(p), {imp_l});
  EXPECT_EQ(check_proof(*bad2).reason, "level discipline");
}

TEST(CheckProof, ImpRAndImpLSchemas) {
  // p ⇒ p gives ⇒ p → p.
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  EXPECT_TRUE(check_proof(*node(first({}, {Imp(p, p)}), RuleKind::ImpR, Imp(p, p), {ax})));
  // Wrong principal.
  EXPECT_FALSE(check_proof(*node(first({}, {Imp(p, q)}), RuleKind::ImpR, Imp(p, q), {ax})));
  // ImpL: p → q, p ⇒ q from p ⇒ p, q and q, p ⇒ q (after weakening).
  const Formula pq = Imp(p, q);
  const auto l = plain(first({p}, {q, p}), RuleKind::Weakening, {ax});
  const auto r = plain(first({p, q}, {q}), RuleKind::Weakening,
                       {node(first({q}, {q}), RuleKind::InitId, q, {})});
  EXPECT_TRUE(check_proof(*node(first({pq, p}, {q}), RuleKind::ImpL, pq, {l, r})));
  // Swapped premises fail.
  EXPECT_FALSE(check_proof(*node(first({pq, p}, {q}), RuleKind::ImpL, pq, {r, l})));
}

TEST(CheckProof, WeakeningNeedsContainment) {
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  EXPECT_TRUE(check_proof(*plain(first({p, q}, {p, q}), RuleKind::Weakening, {ax})));
  EXPECT_FALSE(check_proof(*plain(first({q}, {p}), RuleKind::Weakening, {ax})));
}

TEST(CheckProof, ArityAndPrincipalChecked) {
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  EXPECT_FALSE(check_proof(*plain(first({p}, {p}), RuleKind::Weakening, {ax, ax})));
  EXPECT_EQ(check_proof(*plain(first({}, {Imp(p, p)}), RuleKind::ImpR, {ax})).reason,
            "missing principal formula");
}

TEST(CheckProof, ReportsPathOfFirstFailure) {
  const auto good = node(first({p}, {p}), RuleKind::InitId, p, {});
  const auto bad = leaf(first({p}, {q}), RuleKind::InitId);
  const auto l = plain(first({p}, {q, p}), RuleKind::Weakening, {good});
  const auto r = plain(first({p, q}, {q}), RuleKind::Weakening, {bad});
  const Formula pq = Imp(p, q);
  const auto root = node(first({pq, p}, {q}), RuleKind::ImpL, pq, {l, r});
  const auto res = check_proof(*root);
  EXPECT_FALSE(res);
  EXPECT_EQ(res.path, (std::vector<std::size_t>{1, 0}));
}

TEST(CheckProof, AcceptsCut) {
  // Cut on q: ⇒ p → p, q from ⇒ p → p, and q ⇒ p → p from ⇒ p → p.
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  const auto pp = node(first({}, {Imp(p, p)}), RuleKind::ImpR, Imp(p, p), {ax});
  const auto l = plain(first({}, {Imp(p, p), q}), RuleKind::Weakening, {pp});
  const auto r = plain(first({q}, {Imp(p, p)}), RuleKind::Weakening, {pp});
  const auto cut = node(first({}, {Imp(p, p)}), RuleKind::Cut, q, {l, r});
  EXPECT_TRUE(check_proof(*cut));
  EXPECT_TRUE(contains_rule(*cut, RuleKind::Cut));
  // Cut with the formula on the wrong side.
  EXPECT_FALSE(check_proof(*node(first({}, {Imp(p, p)}), RuleKind::Cut, q, {r, l})));
}

TEST(CheckProof, SharedSubproofsCountedOnce) {
  const auto ax = node(first({p}, {p}), RuleKind::InitId, p, {});
  const auto pp = node(first({}, {Imp(p, p)}), RuleKind::ImpR, Imp(p, p), {ax});
  const auto l = plain(first({}, {Imp(p, p), q}), RuleKind::Weakening, {pp});
  const auto r = plain(first({q}, {Imp(p, p)}), RuleKind::Weakening, {pp});
  const auto cut = node(first({}, {Imp(p, p)}), RuleKind::Cut, q, {l, r});
  EXPECT_EQ(node_count(*cut), 5u);
}

TEST(ReduceToGl, NoBoxesLeavesFormulaAlone) {
  EXPECT_EQ(reduce_to_gl(Imp(p, q)), Imp(p, q));
}

TEST(ReduceToGl, SingleBox) {
  EXPECT_EQ(reduce_to_gl(Imp(Box(p), p)), Imp(Imp(Box(p), p), Imp(Box(p), p)));
}

TEST(ReduceToGl, TwoBoxesInCanonicalOrder) {
  // Boxed subformulas of □(□p→p)→□p are □(□p→p) and □p; "[]([]p -> p)"
  // sorts before "[]p". The conjunction a ∧ b is (a → (b → ⊥)) → ⊥.
  const Formula a = Imp(Box(Imp(Box(p), p)), Imp(Box(p), p));
  const Formula b = Imp(Box(p), p);
  const Formula conj_ab = Imp(Imp(a, Imp(b, bot)), bot);
  const Formula lob = Imp(Box(Imp(Box(p), p)), Box(p));
  EXPECT_EQ(reduce_to_gl(lob), Imp(conj_ab, lob));
}

TEST(ProofJson, RoundTripsProverOutput) {
  FormulaGenerator gen(21, 4, 2);
  int proved = 0;
  for (int i = 0; i < 200; ++i) {
    const auto outcome = prove(gen.next(), i % 2 == 0 ? Logic::GL : Logic::GLS);
    const auto* pr = std::get_if<Proved>(&outcome);
    if (!pr) continue;
    ++proved;
    const auto back = proof_from_json(to_json(*pr->tree));
    ASSERT_TRUE(check_proof(*back));
    ASSERT_EQ(to_json(*back), to_json(*pr->tree));
  }
  EXPECT_GT(proved, 10);
}

TEST(ProofJson, RejectsUnknownRules) {
  nlohmann::json j = to_json(*node(first({p}, {p}), RuleKind::InitId, p, {}));
  j["rule"] = "Magic";
  EXPECT_THROW(proof_from_json(j), std::invalid_argument);
  j["rule"] = "InitId";
  j["conclusion"]["level"] = "third";
  EXPECT_THROW(proof_from_json(j), std::invalid_argument);
}

TEST(ProofRender, TextAndLatex) {
  const auto ax = node(second({p}, {p}), RuleKind::InitId, p, {});
  const auto box_l = node(second({Box(p)}, {p}), RuleKind::BoxL, Box(p), {ax});
  const std::string text = render_text(*box_l);
  EXPECT_NE(text.find("(BoxL: []p)"), std::string::npos);
  EXPECT_NE(text.find("[]p ⇛ p"), std::string::npos);
  const std::string tex = render_latex(*box_l);
  EXPECT_NE(tex.find("\\infer[\\mbox{(BoxL)}]{\\Box p \\Rrightarrow p}"), std::string::npos);
  EXPECT_NE(to_dot(*box_l).find("digraph proof"), std::string::npos);
}

TEST(UnboxProperty, UnboxInvertsBoxAll) {
  FormulaGenerator gen(31, 4, 3);
  for (int i = 0; i < 500; ++i) {
    const FormulaSet s = gen.next_set(5, 3);
    ASSERT_EQ(unbox(box_all(s)), s);
    for (const auto& f : unbox(s)) ASSERT_TRUE(s.contains(Box(f)));
  }
}

}  // namespace
}  // namespace gls
