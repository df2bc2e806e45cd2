#include "gls/formula.hpp"

#include <cassert>
#include <cctype>
#include <functional>
#include <utility>

namespace gls {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Formula> children;
  std::string text;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::string wrap_if_imp(const Formula& f) {
  if (f.is_imp()) return "(" + f.text() + ")";
  return f.text();
}

}  // namespace

Formula Formula::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Var;
  node->text = name;
  node->name = std::move(name);
  node->hash = std::hash<std::string>{}(node->text);
  return Formula(std::move(node));
}

Formula Formula::bot() {
  static const Formula kBot = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Bot;
    node->text = "_|_";
    node->hash = std::hash<std::string>{}(node->text);
    return Formula(std::move(node));
  }();
  return kBot;
}

Formula Formula::imp(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Imp;
  node->text = wrap_if_imp(antecedent) + " -> " + consequent.text();
  node->size = 1 + antecedent.size() + consequent.size();
  node->hash = std::hash<std::string>{}(node->text);
  node->children.push_back(std::move(antecedent));
  node->children.push_back(std::move(consequent));
  return Formula(std::move(node));
}

Formula Formula::box(Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Box;
  node->text = "[]" + wrap_if_imp(body);
  node->size = 1 + body.size();
  node->hash = std::hash<std::string>{}(node->text);
  node->children.push_back(std::move(body));
  return Formula(std::move(node));
}

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }

const Formula& Formula::left() const {
  assert(is_imp());
  return node_->children[0];
}

const Formula& Formula::right() const {
  assert(is_imp());
  return node_->children[1];
}

const Formula& Formula::body() const {
  assert(is_box());
  return node_->children[0];
}

const std::string& Formula::text() const { return node_->text; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

Formula neg(const Formula& f) { return Formula::imp(f, Formula::bot()); }
Formula top() { return neg(Formula::bot()); }
Formula conj(const Formula& a, const Formula& b) { return neg(Formula::imp(a, neg(b))); }
Formula disj(const Formula& a, const Formula& b) { return Formula::imp(neg(a), b); }
Formula iff(const Formula& a, const Formula& b) {
  return conj(Formula::imp(a, b), Formula::imp(b, a));
}
Formula diamond(const Formula& f) { return neg(Formula::box(neg(f))); }

Formula conj_all(const std::vector<Formula>& conjuncts) {
  if (conjuncts.empty()) return top();
  Formula acc = conjuncts.front();
  for (std::size_t i = 1; i < conjuncts.size(); ++i) acc = conj(acc, conjuncts[i]);
  return acc;
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Connective::Imp:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      break;
    case Connective::Box:
      collect_subformulas(f.body(), out);
      break;
    default:
      break;
  }
}

}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

FormulaSet subformula_closure(const FormulaSet& fs) {
  FormulaSet out;
  for (const auto& f : fs) collect_subformulas(f, out);
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  for (const auto& g : subformulas(f))
    if (g.is_var()) out.insert(g.name());
  return out;
}

std::string print(const Formula& f) { return f.text(); }

std::string print(const FormulaSet& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " +
                         message),
      position_(position),
      detail_(message) {}

// {{{ Parser

namespace {

enum class Tok { Box, Diamond, Not, Imp, Iff, And, Or, LParen, RParen, Bot, Top, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Spelling {
  std::string_view text;
  Tok kind;
};

// Longest spellings first where prefixes overlap ("<->" before "<>").
constexpr Spelling kSpellings[] = {
    {"<->", Tok::Iff}, {"_|_", Tok::Bot}, {"[]", Tok::Box},  {"<>", Tok::Diamond},
    {"->", Tok::Imp},  {"~", Tok::Not},   {"&", Tok::And},   {"|", Tok::Or},
    {"(", Tok::LParen}, {")", Tok::RParen},
    {"□", Tok::Box}, {"◇", Tok::Diamond}, {"¬", Tok::Not},
    {"→", Tok::Imp}, {"↔", Tok::Iff},     {"∧", Tok::And},
    {"∨", Tok::Or},  {"⊥", Tok::Bot},     {"⊤", Tok::Top},
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i + 1;
      while (j < src.size()) {
        const unsigned char d = static_cast<unsigned char>(src[j]);
        if (!std::isalnum(d) && d != '_') break;
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& s : kSpellings) {
      if (src.substr(i, s.text.size()) == s.text) {
        out.push_back({s.kind, std::string(s.text), i});
        i += s.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError("unexpected character", i);
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Formula parse_all() {
    Formula f = parse_imp();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::imp(lhs, parse_imp());
    }
    if (peek().kind == Tok::Iff) {
      next();
      return iff(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (peek().kind == Tok::Or) {
      next();
      acc = disj(acc, parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (peek().kind == Tok::And) {
      next();
      acc = conj(acc, parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Box:
        next();
        return Formula::box(parse_unary());
      case Tok::Diamond:
        next();
        return diamond(parse_unary());
      case Tok::Not:
        next();
        return neg(parse_unary());
      default:
        return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Ident:
        return Formula::var(t.text);
      case Tok::Bot:
        return Formula::bot();
      case Tok::Top:
        return top();
      case Tok::LParen: {
        Formula inner = parse_imp();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        next();
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

// }}}

}  // namespace gls
