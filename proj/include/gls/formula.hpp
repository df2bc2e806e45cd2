// Modal propositional formulas over variables, falsum, implication and box.
//
// A Formula is an immutable handle onto a shared node. Every node caches its
// canonical rendering, and that rendering is injective on structure, so
// equality, ordering and hashing are all defined through it. The order is
// plain lexicographic order of canonical text; every ordered container of
// formulas in this library iterates in that order.

#ifndef GLS_FORMULA_HPP
#define GLS_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gls {

enum class Connective { Var, Bot, Imp, Box };

class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula imp(Formula antecedent, Formula consequent);
  static Formula box(Formula body);

  Connective kind() const;
  bool is_var() const { return kind() == Connective::Var; }
  bool is_bot() const { return kind() == Connective::Bot; }
  bool is_imp() const { return kind() == Connective::Imp; }
  bool is_box() const { return kind() == Connective::Box; }

  /// Variable name; empty for non-variables.
  const std::string& name() const;
  /// Children. Precondition: is_imp() for left/right, is_box() for body.
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const;

  /// Canonical ASCII rendering: "[]" binds tighter than "->", which
  /// associates to the right. Only the four core constructors appear.
  const std::string& text() const;
  /// Node count.
  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.text() <=> b.text();
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

// Derived connectives. They expand into the core constructors immediately.
Formula neg(const Formula& f);                        // f -> _|_
Formula top();                                        // _|_ -> _|_
Formula conj(const Formula& a, const Formula& b);     // ~(a -> ~b)
Formula disj(const Formula& a, const Formula& b);     // ~a -> b
Formula iff(const Formula& a, const Formula& b);      // (a -> b) & (b -> a)
Formula diamond(const Formula& f);                    // ~[]~f
/// Left-nested conjunction; empty input yields top().
Formula conj_all(const std::vector<Formula>& conjuncts);

/// Smallest set containing f and closed under immediate subformulas.
FormulaSet subformulas(const Formula& f);
/// Union of subformulas() over every member.
FormulaSet subformula_closure(const FormulaSet& fs);
std::set<std::string> variables(const Formula& f);

std::string print(const Formula& f);
/// Comma-separated canonical texts in set order.
std::string print(const FormulaSet& fs);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the error was detected.
  std::size_t position() const { return position_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Parses the surface syntax
///
///   formula := imp
///   imp     := or (("->" | "<->") imp)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "[]" unary | "<>" unary | "~" unary | atom
///   atom    := ident | "_|_" | "(" formula ")"
///
/// with Unicode aliases □ ◇ ¬ → ↔ ∧ ∨ ⊥ ⊤. Throws ParseError.
Formula parse(std::string_view text);

}  // namespace gls

template <>
struct std::hash<gls::Formula> {
  std::size_t operator()(const gls::Formula& f) const noexcept { return f.hash(); }
};

#endif  // GLS_FORMULA_HPP
