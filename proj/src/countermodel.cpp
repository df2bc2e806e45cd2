#include "gls/countermodel.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace gls {

namespace {

bool r0(const Sequent& from, const Sequent& to) {
  const FormulaSet a = unbox(from.antecedent);
  const FormulaSet b = unbox(to.antecedent);
  const bool proper_subset =
      a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  return proper_subset &&
         std::includes(to.antecedent.begin(), to.antecedent.end(), a.begin(), a.end());
}

void require_world(const Sequent& s) {
  if (s.level != Level::First)
    throw std::logic_error("malformed witness: core world is not a first level sequent");
  if (is_axiom(s)) throw std::logic_error("malformed witness: " + print(s) + " is an axiom");
  if (!is_saturated(s)) throw std::logic_error("malformed witness: " + print(s) + " is not saturated");
}

}  // namespace

CoreModel build_core(const SaturationWitness& witness, Prover& prover) {
  const Sequent& root = witness.first_level_core;
  require_world(root);
  if (is_proved(prover.prove_gl(root)))
    throw std::logic_error("malformed witness: " + print(root) + " is provable");

  CoreModel out;
  std::map<Sequent, KripkeModel::World> known;
  std::deque<KripkeModel::World> queue;
  auto intern = [&](const Sequent& s) {
    if (auto it = known.find(s); it != known.end()) return it->second;
    const auto w = out.model.add_world(print(s));
    out.sequents.push_back(s);
    known.emplace(s, w);
    queue.push_back(w);
    return w;
  };
  out.designated = intern(root);

  while (!queue.empty()) {
    const Sequent world = out.sequents[queue.front()];
    queue.pop_front();
    // One child per □ψ ∈ Δ, in order of ψ.
    for (const auto& body : unbox(world.succedent)) {
      const Formula boxed = Formula::box(body);
      const auto outcome = prover.prove_gl(box_gl_premise(world, boxed));
      if (is_proved(outcome))
        throw std::logic_error("malformed witness: " + print(world) + " proves " + boxed.text());
      const Sequent& child = std::get<Refuted>(outcome).witness.root;
      require_world(child);
      intern(child);
    }
  }

  for (KripkeModel::World a = 0; a < out.sequents.size(); ++a) {
    for (KripkeModel::World b = 0; b < out.sequents.size(); ++b)
      if (a != b && r0(out.sequents[a], out.sequents[b])) out.model.add_edge(a, b);
    for (const auto& f : out.sequents[a].antecedent)
      if (f.is_var()) out.model.set_true(a, f.name());
  }
  return out;
}

CoreModel build_core(const SaturationWitness& witness) {
  Prover prover;
  return build_core(witness, prover);
}

ChainModel build_chain(const SaturationWitness& witness, Prover& prover) {
  ChainModel out{build_core(witness, prover), {}};
  for (const auto& f : witness.first_level_core.antecedent)
    if (f.is_var()) out.tail_valuation.insert(f.name());
  return out;
}

ChainModel build_chain(const SaturationWitness& witness) {
  Prover prover;
  return build_chain(witness, prover);
}

TailVerdict eval_chain(const ChainModel& m, const FormulaSet& formulas) {
  const FormulaSet closure = subformula_closure(formulas);
  std::vector<Formula> order(closure.begin(), closure.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Formula& a, const Formula& b) { return a.size() < b.size(); });
  std::map<Formula, std::size_t> slot;
  for (std::size_t i = 0; i < order.size(); ++i) slot.emplace(order[i], i);

  // Whether each formula holds at the designated world and all of its
  // successors, i.e. at every core world a tail world sees.
  const auto& model = m.core.model;
  const auto d = m.core.designated;
  std::vector<bool> core_ok(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto truth = truth_set(model, order[i]);
    bool ok = truth[d];
    for (auto w : model.successors(d)) ok = ok && truth[w];
    core_ok[i] = ok;
  }

  std::vector<std::vector<bool>> rows;
  std::vector<bool> falsified_before(order.size(), false);
  while (true) {
    std::vector<bool> row(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Formula& f = order[i];
      switch (f.kind()) {
        case Connective::Var:
          row[i] = m.tail_valuation.contains(f.name());
          break;
        case Connective::Bot:
          row[i] = false;
          break;
        case Connective::Imp:
          row[i] = !row[slot.at(f.left())] || row[slot.at(f.right())];
          break;
        case Connective::Box: {
          const std::size_t b = slot.at(f.body());
          row[i] = !falsified_before[b] && core_ok[b];
          break;
        }
      }
    }
    std::vector<bool> next = falsified_before;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (!row[i]) next[i] = true;
    rows.push_back(std::move(row));
    if (next == falsified_before) break;
    falsified_before = std::move(next);
  }

  TailVerdict out;
  out.horizon = rows.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    TailProfile p;
    for (const auto& row : rows) p.values.push_back(row[i]);
    p.stable_value = p.values.back();
    p.stable_from = p.values.size();
    while (p.stable_from > 1 && p.values[p.stable_from - 2] == p.stable_value) --p.stable_from;
    out.profiles.emplace(order[i], std::move(p));
  }
  return out;
}

TailProfile eval_chain(const ChainModel& m, const FormulaSet& formulas, const Formula& f) {
  FormulaSet all = formulas;
  all.insert(f);
  return eval_chain(m, all)[f];
}

std::vector<std::string> core_truth_lemma_failures(const CoreModel& m) {
  std::vector<std::string> out;
  for (KripkeModel::World w = 0; w < m.sequents.size(); ++w) {
    const Sequent& s = m.sequents[w];
    for (const auto& f : s.antecedent)
      if (!eval(m.model, w, f))
        out.push_back(f.text() + " is in the antecedent of " + m.model.id(w) + " but false there");
    for (const auto& f : s.succedent)
      if (eval(m.model, w, f))
        out.push_back(f.text() + " is in the succedent of " + m.model.id(w) + " but true there");
  }
  return out;
}

std::vector<std::string> chain_truth_lemma_failures(const ChainModel& m) {
  std::vector<std::string> out;
  const Sequent& s = m.core.sequents[m.core.designated];
  FormulaSet all = s.antecedent;
  all.insert(s.succedent.begin(), s.succedent.end());
  const TailVerdict verdict = eval_chain(m, all);
  for (const auto& f : s.antecedent)
    if (!verdict[f].always(true))
      out.push_back(f.text() + " is in the antecedent but fails on the tail");
  for (const auto& f : s.succedent)
    if (!verdict[f].always(false))
      out.push_back(f.text() + " is in the succedent but holds on the tail");
  return out;
}

nlohmann::json to_json(const CoreModel& m) { return to_json(m.model); }

nlohmann::json to_json(const ChainModel& m) {
  return {{"core", to_json(m.core.model)},
          {"designated", m.core.model.id(m.core.designated)},
          {"tail_valuation", m.tail_valuation}};
}

std::string to_dot(const CoreModel& m) { return to_dot(m.model, "core"); }

std::string to_dot(const ChainModel& m) {
  std::string core = to_dot(m.core.model, "chain");
  core.erase(core.rfind('}'));
  std::string vars;
  for (const auto& v : m.tail_valuation) vars += (vars.empty() ? "" : ", ") + v;
  std::ostringstream os;
  os << core;
  os << "  n" << m.core.designated << " [peripheries=2];\n";
  for (int n = 1; n <= 3; ++n)
    os << "  t" << n << " [shape=box, label=\"" << n << "\\n{" << vars << "}\"];\n";
  os << "  tdots [shape=plaintext, label=\"...\"];\n";
  os << "  tdots -> t3;\n  t3 -> t2;\n  t2 -> t1;\n";
  os << "  t1 -> n" << m.core.designated << ";\n";
  os << "}\n";
  return os.str();
}

std::string render_text(const CoreModel& m) {
  std::ostringstream os;
  for (KripkeModel::World w = 0; w < m.model.size(); ++w) {
    os << (w == m.designated ? "* " : "  ") << "w" << w << ": " << m.model.id(w) << "\n";
    os << "      true: {";
    bool first = true;
    for (const auto& v : m.model.true_vars(w)) {
      os << (first ? "" : ", ") << v;
      first = false;
    }
    os << "}  sees: {";
    first = true;
    for (auto v : m.model.successors(w)) {
      os << (first ? "" : ", ") << "w" << v;
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

std::string render_text(const ChainModel& m) {
  std::ostringstream os;
  os << "core:\n" << render_text(m.core);
  os << "tail: ... R 3 R 2 R 1, each seeing w" << m.core.designated
     << " and its successors\n";
  os << "      true at every tail world: {";
  bool first = true;
  for (const auto& v : m.tail_valuation) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  os << "}\n";
  return os.str();
}

}  // namespace gls
