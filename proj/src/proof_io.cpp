#include "gls/proof_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gls {

using nlohmann::json;

json to_json(const Sequent& s) {
  json ant = json::array();
  json suc = json::array();
  for (const auto& f : s.antecedent) ant.push_back(f.text());
  for (const auto& f : s.succedent) suc.push_back(f.text());
  return {{"level", std::string(level_name(s.level))}, {"ant", ant}, {"suc", suc}};
}

Sequent sequent_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("sequent must be an object");
  Sequent s;
  const std::string level = j.at("level").get<std::string>();
  if (level == "first") {
    s.level = Level::First;
  } else if (level == "second") {
    s.level = Level::Second;
  } else {
    throw std::invalid_argument("unknown sequent level '" + level + "'");
  }
  for (const auto& t : j.at("ant")) s.antecedent.insert(parse(t.get<std::string>()));
  for (const auto& t : j.at("suc")) s.succedent.insert(parse(t.get<std::string>()));
  return s;
}

json to_json(const ProofTree& tree) {
  json premises = json::array();
  for (const auto& p : tree.premises) premises.push_back(to_json(*p));
  json out = {{"conclusion", to_json(tree.conclusion)},
              {"rule", std::string(rule_name(tree.rule.kind))}};
  if (tree.rule.principal) out["principal"] = tree.rule.principal->text();
  out["premises"] = std::move(premises);
  return out;
}

ProofPtr proof_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("proof node must be an object");
  const std::string name = j.at("rule").get<std::string>();
  const auto kind = rule_from_name(name);
  if (!kind) throw std::invalid_argument("unknown rule '" + name + "'");
  Rule rule{*kind, std::nullopt};
  if (j.contains("principal") && !j.at("principal").is_null())
    rule.principal = parse(j.at("principal").get<std::string>());
  std::vector<ProofPtr> premises;
  if (j.contains("premises"))
    for (const auto& p : j.at("premises")) premises.push_back(proof_from_json(p));
  return make_proof(sequent_from_json(j.at("conclusion")), std::move(rule), std::move(premises));
}

// {{{ Inference-line text

namespace {

std::size_t display_width(const std::string& s) {
  // Count UTF-8 lead bytes.
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

struct Block {
  std::vector<std::string> lines;
  std::size_t width = 0;
};

std::string pad_to(std::string s, std::size_t width) {
  const std::size_t w = display_width(s);
  if (w < width) s.append(width - w, ' ');
  return s;
}

Block beside(const std::vector<Block>& blocks, std::size_t gap) {
  Block out;
  std::size_t height = 0;
  for (const auto& b : blocks) height = std::max(height, b.lines.size());
  out.lines.assign(height, std::string());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    const std::size_t offset = height - b.lines.size();
    for (std::size_t row = 0; row < height; ++row) {
      std::string cell = row >= offset ? b.lines[row - offset] : std::string();
      out.lines[row] += pad_to(std::move(cell), b.width);
      if (i + 1 < blocks.size()) out.lines[row].append(gap, ' ');
    }
    out.width += b.width + (i + 1 < blocks.size() ? gap : 0);
  }
  return out;
}

Block render_block(const ProofTree& node) {
  std::vector<Block> children;
  for (const auto& p : node.premises) children.push_back(render_block(*p));
  Block above = children.empty() ? Block{} : beside(children, 4);

  const std::string conclusion = print(node.conclusion);
  const std::size_t concl_width = display_width(conclusion);
  const std::size_t bar_width = std::max({above.width, concl_width, std::size_t{1}});
  std::string label = " (" + std::string(rule_name(node.rule.kind));
  if (node.rule.principal && node.rule.kind != RuleKind::InitId)
    label += ": " + node.rule.principal->text();
  label += ")";

  Block out;
  out.lines = std::move(above.lines);
  std::string bar;
  for (std::size_t i = 0; i < bar_width; ++i) bar += "─";
  out.lines.push_back(bar + label);
  out.lines.push_back(std::string((bar_width - concl_width) / 2, ' ') + conclusion);
  out.width = bar_width + display_width(label);
  return out;
}

}  // namespace

std::string render_text(const ProofTree& tree) {
  std::string out;
  for (const auto& line : render_block(tree).lines) {
    std::string trimmed = line;
    trimmed.erase(trimmed.find_last_not_of(' ') + 1);
    out += trimmed;
    out += '\n';
  }
  return out;
}

// }}}

namespace {

std::string latex_wrapped(const Formula& f) {
  return f.is_imp() ? "(" + latex(f) + ")" : latex(f);
}

std::string latex_set(const FormulaSet& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += latex(f);
  }
  return out;
}

void latex_rec(const ProofTree& node, std::string& out, int indent) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += "\\infer[\\mbox{(" + std::string(rule_name(node.rule.kind)) + ")}]{" +
         latex(node.conclusion) + "}{";
  if (node.premises.empty()) {
    out += "}";
    return;
  }
  out += "\n";
  for (std::size_t i = 0; i < node.premises.size(); ++i) {
    if (i > 0) {
      out += "\n";
      out.append(static_cast<std::size_t>(indent + 1) * 2, ' ');
      out += "&\n";
    }
    latex_rec(*node.premises[i], out, indent + 1);
  }
  out += "\n";
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += "}";
}

}  // namespace

std::string latex(const Formula& f) {
  switch (f.kind()) {
    case Connective::Var:
      return f.name();
    case Connective::Bot:
      return "\\bot";
    case Connective::Box:
      return "\\Box " + latex_wrapped(f.body());
    case Connective::Imp:
      return latex_wrapped(f.left()) + " \\to " + latex(f.right());
  }
  return {};
}

std::string latex(const Sequent& s) {
  const std::string arrow = s.level == Level::First ? "\\Rightarrow" : "\\Rrightarrow";
  return latex_set(s.antecedent) + " " + arrow + " " + latex_set(s.succedent);
}

std::string render_latex(const ProofTree& tree) {
  std::string out = "\\[\n";
  latex_rec(tree, out, 1);
  out += "\n\\]\n";
  return out;
}

std::string to_dot(const ProofTree& tree) {
  std::ostringstream os;
  os << "digraph proof {\n  node [shape=box];\n";
  std::map<const ProofTree*, std::size_t> ids;
  std::vector<const ProofTree*> stack{&tree};
  ids.emplace(&tree, 0);
  while (!stack.empty()) {
    const ProofTree* node = stack.back();
    stack.pop_back();
    const std::size_t id = ids.at(node);
    std::string label = print(node->conclusion);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  p" << id << " [label=\"" << escaped << "\\n(" << rule_name(node->rule.kind)
       << ")\"];\n";
    for (const auto& premise : node->premises) {
      auto [it, fresh] = ids.emplace(premise.get(), ids.size());
      if (fresh) stack.push_back(premise.get());
      os << "  p" << id << " -> p" << it->second << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace gls
