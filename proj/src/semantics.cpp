#include "gls/semantics.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gls {

KripkeModel::World KripkeModel::add_world(std::string id) {
  if (index_.contains(id)) throw std::invalid_argument("duplicate world '" + id + "'");
  const World w = ids_.size();
  index_.emplace(id, w);
  ids_.push_back(std::move(id));
  succ_.emplace_back();
  true_vars_.emplace_back();
  return w;
}

void KripkeModel::add_edge(World from, World to) { succ_.at(from).insert(to); }

void KripkeModel::add_edge(const std::string& from, const std::string& to) {
  add_edge(index(from), index(to));
}

void KripkeModel::set_true(World w, const std::string& var) { true_vars_.at(w).insert(var); }

void KripkeModel::set_true(const std::string& w, const std::string& var) {
  set_true(index(w), var);
}

std::optional<KripkeModel::World> KripkeModel::find(const std::string& id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

KripkeModel::World KripkeModel::index(const std::string& id) const {
  if (auto w = find(id)) return *w;
  throw std::out_of_range("unknown world '" + id + "'");
}

std::vector<std::pair<KripkeModel::World, KripkeModel::World>> KripkeModel::edges() const {
  std::vector<std::pair<World, World>> out;
  for (World w = 0; w < size(); ++w)
    for (World v : succ_[w]) out.emplace_back(w, v);
  return out;
}

std::vector<std::string> frame_violations(const KripkeModel& m) {
  std::vector<std::string> out;
  for (KripkeModel::World w = 0; w < m.size(); ++w)
    if (m.related(w, w)) out.push_back("not irreflexive: " + m.id(w) + " sees itself");

  bool transitive = true;
  for (KripkeModel::World a = 0; a < m.size() && transitive; ++a)
    for (KripkeModel::World b : m.successors(a)) {
      for (KripkeModel::World c : m.successors(b)) {
        if (!m.related(a, c)) {
          out.push_back("not transitive: " + m.id(a) + " -> " + m.id(b) + " -> " + m.id(c) +
                        " without " + m.id(a) + " -> " + m.id(c));
          transitive = false;
          break;
        }
      }
      if (!transitive) break;
    }

  // A cycle in the transitive closure is an infinite ascending chain.
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : m.edges()) reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i][i] && !m.related(i, i)) {
      out.push_back("not converse well-founded: " + m.id(i) +
                    " lies on a cycle (irreflexivity fails after transitive closure)");
      break;
    }
  }
  return out;
}

bool is_gl_model(const KripkeModel& m) { return frame_violations(m).empty(); }

namespace {

class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(m) {}

  const std::vector<bool>& operator()(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::vector<bool> out(m_.size(), false);
    switch (f.kind()) {
      case Connective::Var:
        for (std::size_t w = 0; w < m_.size(); ++w) out[w] = m_.holds(w, f.name());
        break;
      case Connective::Bot:
        break;
      case Connective::Imp: {
        const std::vector<bool> a = (*this)(f.left());
        const std::vector<bool>& b = (*this)(f.right());
        for (std::size_t w = 0; w < m_.size(); ++w) out[w] = !a[w] || b[w];
        break;
      }
      case Connective::Box: {
        const std::vector<bool>& body = (*this)(f.body());
        for (std::size_t w = 0; w < m_.size(); ++w)
          out[w] = std::all_of(m_.successors(w).begin(), m_.successors(w).end(),
                               [&](std::size_t v) { return body[v]; });
        break;
      }
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

 private:
  const KripkeModel& m_;
  std::unordered_map<Formula, std::vector<bool>> memo_;
};

}  // namespace

std::vector<bool> truth_set(const KripkeModel& m, const Formula& f) { return Evaluator(m)(f); }

bool eval(const KripkeModel& m, KripkeModel::World w, const Formula& f) {
  if (w >= m.size()) throw std::out_of_range("unknown world index " + std::to_string(w));
  return truth_set(m, f)[w];
}

bool eval(const KripkeModel& m, const std::string& world, const Formula& f) {
  return eval(m, m.index(world), f);
}

bool eval_sequent(const KripkeModel& m, KripkeModel::World w, const Sequent& s) {
  if (w >= m.size()) throw std::out_of_range("unknown world index " + std::to_string(w));
  Evaluator ev(m);
  for (const auto& g : s.antecedent)
    if (!ev(g)[w]) return true;
  for (const auto& d : s.succedent)
    if (ev(d)[w]) return true;
  return false;
}

bool eval_sequent(const KripkeModel& m, const std::string& world, const Sequent& s) {
  return eval_sequent(m, m.index(world), s);
}

std::vector<bool> reflexive_mask(const KripkeModel& m, const FormulaSet& sigma) {
  std::vector<bool> out(m.size(), true);
  Evaluator ev(m);
  for (const auto& f : sigma) {
    if (!f.is_box()) continue;
    const std::vector<bool> boxed = ev(f);
    const std::vector<bool>& body = ev(f.body());
    for (std::size_t w = 0; w < m.size(); ++w)
      if (boxed[w] && !body[w]) out[w] = false;
  }
  return out;
}

std::set<std::string> reflexive_worlds(const KripkeModel& m, const FormulaSet& sigma) {
  std::set<std::string> out;
  const auto mask = reflexive_mask(m, sigma);
  for (std::size_t w = 0; w < m.size(); ++w)
    if (mask[w]) out.insert(m.id(w));
  return out;
}

bool check_c1(const KripkeModel& m, const FormulaSet& sigma, const Sequent& s) {
  const auto mask = reflexive_mask(m, sigma);
  for (std::size_t w = 0; w < m.size(); ++w)
    if (mask[w] && !eval_sequent(m, w, s)) return false;
  return true;
}

bool check_c0(const KripkeModel& m, const Sequent& s) {
  FormulaSet all = s.antecedent;
  all.insert(s.succedent.begin(), s.succedent.end());
  FormulaSet sigma;
  for (const auto& f : subformula_closure(all))
    if (f.is_box()) sigma.insert(f);
  return check_c1(m, sigma, s);
}

// {{{ Enumeration

namespace {

std::size_t pair_bit(std::size_t n, std::size_t i, std::size_t j) {
  return i * (n - 1) + (j < i ? j : j - 1);
}

// Assigns relation bits from the most significant down, 0 before 1, so the
// frames come out in increasing numeric order. Partial assignments that
// already break transitivity are pruned.
class FrameEnumerator {
 public:
  explicit FrameEnumerator(std::size_t n) : n_(n), state_(n * n, kUnset) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) pairs_.emplace_back(pair_bit(n, i, j), std::make_pair(i, j));
    std::sort(pairs_.begin(), pairs_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  }

  std::vector<SmallFrame> run() {
    recurse(0);
    return std::move(out_);
  }

 private:
  static constexpr int kUnset = -1;

  int& at(std::size_t i, std::size_t j) { return state_[i * n_ + j]; }

  // Whether deciding (i,j) completes a pattern a->b->c with a->c decided
  // absent, or a 2-cycle.
  bool broken_by(std::size_t i, std::size_t j) {
    if (at(i, j) == 1) {
      if (at(j, i) == 1) return true;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k == i || k == j) continue;
        if (at(j, k) == 1 && at(i, k) == 0) return true;
        if (at(k, i) == 1 && at(k, j) == 0) return true;
      }
      return false;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == i || k == j) continue;
      if (at(i, k) == 1 && at(k, j) == 1) return true;
    }
    return false;
  }

  void recurse(std::size_t depth) {
    if (depth == pairs_.size()) {
      SmallFrame f;
      f.worlds = n_;
      f.successors.assign(n_, 0);
      for (const auto& [bit, pr] : pairs_) {
        if (at(pr.first, pr.second) == 1) {
          f.relation |= std::uint64_t{1} << bit;
          f.successors[pr.first] |= std::uint64_t{1} << pr.second;
        }
      }
      out_.push_back(std::move(f));
      return;
    }
    const auto [i, j] = pairs_[depth].second;
    for (int v : {0, 1}) {
      at(i, j) = v;
      if (!broken_by(i, j)) recurse(depth + 1);
    }
    at(i, j) = kUnset;
  }

  std::size_t n_;
  std::vector<int> state_;
  std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>> pairs_;
  std::vector<SmallFrame> out_;
};

KripkeModel materialize(const SmallFrame& frame, const std::vector<std::string>& vars,
                        std::uint64_t valuation) {
  KripkeModel m;
  for (std::size_t w = 0; w < frame.worlds; ++w) m.add_world("w" + std::to_string(w));
  for (std::size_t w = 0; w < frame.worlds; ++w)
    for (std::size_t v = 0; v < frame.worlds; ++v)
      if (frame.successors[w] >> v & 1) m.add_edge(w, v);
  for (std::size_t w = 0; w < frame.worlds; ++w)
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (valuation >> (w * vars.size() + v) & 1) m.set_true(w, vars[v]);
  return m;
}

void check_bounds(std::size_t worlds, std::size_t nvars) {
  if (worlds == 0 || worlds > 8) throw std::invalid_argument("world bound must be in 1..8");
  if (worlds * nvars >= 63)
    throw std::invalid_argument("too many worlds x variables for enumeration");
}

}  // namespace

std::vector<SmallFrame> gl_frames(std::size_t n) {
  check_bounds(n, 0);
  if (n == 1) return {SmallFrame{1, 0, {0}}};
  return FrameEnumerator(n).run();
}

void for_each_gl_model(std::size_t max_worlds, const std::set<std::string>& vars,
                       const std::function<bool(const KripkeModel&)>& visit) {
  check_bounds(max_worlds, vars.size());
  const std::vector<std::string> names(vars.begin(), vars.end());
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const std::uint64_t valuations = std::uint64_t{1} << (n * names.size());
    for (const auto& frame : gl_frames(n))
      for (std::uint64_t val = 0; val < valuations; ++val)
        if (!visit(materialize(frame, names, val))) return;
  }
}

std::optional<ModelWorld> refute_by_enumeration(const Formula& f, std::size_t max_worlds) {
  const auto var_set = variables(f);
  check_bounds(max_worlds, var_set.size());
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  // Subformulas children-first; each gets a world bitmask.
  const FormulaSet sf = subformulas(f);
  std::vector<Formula> order(sf.begin(), sf.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Formula& a, const Formula& b) { return a.size() < b.size(); });
  std::unordered_map<Formula, std::size_t> slot;
  for (std::size_t i = 0; i < order.size(); ++i) slot.emplace(order[i], i);

  struct Step {
    Connective kind;
    std::size_t a = 0, b = 0;
  };
  std::vector<Step> steps;
  for (const auto& g : order) {
    switch (g.kind()) {
      case Connective::Var: {
        const auto v = static_cast<std::size_t>(
            std::find(vars.begin(), vars.end(), g.name()) - vars.begin());
        steps.push_back({Connective::Var, v});
        break;
      }
      case Connective::Bot:
        steps.push_back({Connective::Bot});
        break;
      case Connective::Imp:
        steps.push_back({Connective::Imp, slot.at(g.left()), slot.at(g.right())});
        break;
      case Connective::Box:
        steps.push_back({Connective::Box, slot.at(g.body())});
        break;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> reflections;  // (□α, α)
  for (const auto& g : order)
    if (g.is_box()) reflections.emplace_back(slot.at(g), slot.at(g.body()));
  const std::size_t target = slot.at(f);

  std::vector<std::uint64_t> mask(order.size());
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const std::uint64_t valuations = std::uint64_t{1} << (n * vars.size());
    for (const auto& frame : gl_frames(n)) {
      for (std::uint64_t val = 0; val < valuations; ++val) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const Step& s = steps[i];
          std::uint64_t m = 0;
          switch (s.kind) {
            case Connective::Var:
              for (std::size_t w = 0; w < n; ++w)
                if (val >> (w * vars.size() + s.a) & 1) m |= std::uint64_t{1} << w;
              break;
            case Connective::Bot:
              break;
            case Connective::Imp:
              m = (~mask[s.a] | mask[s.b]) & all;
              break;
            case Connective::Box:
              for (std::size_t w = 0; w < n; ++w)
                if ((frame.successors[w] & ~mask[s.a]) == 0) m |= std::uint64_t{1} << w;
              break;
          }
          mask[i] = m;
        }
        std::uint64_t reflexive = all;
        for (const auto& [boxed, body] : reflections) reflexive &= ~mask[boxed] | mask[body];
        const std::uint64_t bad = reflexive & ~mask[target] & all;
        if (bad != 0)
          return ModelWorld{materialize(frame, vars, val),
                            static_cast<std::size_t>(std::countr_zero(bad))};
      }
    }
  }
  return std::nullopt;
}

// }}}

// {{{ I/O

nlohmann::json to_json(const KripkeModel& m) {
  nlohmann::json worlds = nlohmann::json::array();
  nlohmann::json relation = nlohmann::json::array();
  nlohmann::json valuation = nlohmann::json::object();
  for (std::size_t w = 0; w < m.size(); ++w) {
    worlds.push_back(m.id(w));
    valuation[m.id(w)] = m.true_vars(w);
  }
  for (const auto& [a, b] : m.edges()) relation.push_back({m.id(a), m.id(b)});
  return {{"worlds", worlds}, {"relation", relation}, {"valuation", valuation}};
}

KripkeModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("worlds") || !j.at("worlds").is_array())
    throw std::invalid_argument("model needs a \"worlds\" array");
  KripkeModel m;
  for (const auto& w : j.at("worlds")) {
    if (!w.is_string()) throw std::invalid_argument("world ids must be strings");
    m.add_world(w.get<std::string>());
  }
  auto lookup = [&](const nlohmann::json& id) {
    if (!id.is_string()) throw std::invalid_argument("world ids must be strings");
    const auto w = m.find(id.get<std::string>());
    if (!w) throw std::invalid_argument("unknown world '" + id.get<std::string>() + "'");
    return *w;
  };
  if (j.contains("relation")) {
    for (const auto& e : j.at("relation")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("relation entries must be [from, to] pairs");
      m.add_edge(lookup(e[0]), lookup(e[1]));
    }
  }
  if (j.contains("valuation")) {
    if (!j.at("valuation").is_object()) throw std::invalid_argument("valuation must be an object");
    for (const auto& [id, vars] : j.at("valuation").items()) {
      const auto w = lookup(nlohmann::json(id));
      if (!vars.is_array()) throw std::invalid_argument("valuation entries must be arrays");
      for (const auto& v : vars) {
        if (!v.is_string()) throw std::invalid_argument("variable names must be strings");
        m.set_true(w, v.get<std::string>());
      }
    }
  }
  return m;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const KripkeModel& m, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  for (std::size_t w = 0; w < m.size(); ++w) {
    std::string vars;
    for (const auto& v : m.true_vars(w)) vars += (vars.empty() ? "" : ", ") + v;
    os << "  n" << w << " [label=\"" << dot_escape(m.id(w)) << "\\n{" << dot_escape(vars)
       << "}\"];\n";
  }
  for (const auto& [a, b] : m.edges()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

// }}}

}  // namespace gls
