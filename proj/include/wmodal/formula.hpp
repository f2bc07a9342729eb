#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wmodal {

enum class Connective : std::uint8_t { Atom, Bottom, And, Or, Imp, Box, Dia };

namespace detail {
struct Node;
}

/// Immutable, hash-consed modal formula.
///
/// Structurally equal formulas share one node, so equality and hashing are
/// pointer operations. Derived connectives (top, negation, biconditional) are
/// expanded on construction and never appear in the tree.
class Formula {
 public:
  /// Default-constructed formulas are bottom.
  Formula();

  static Formula atom(std::uint32_t index);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula negation(Formula a);
  static Formula iff(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula dia(Formula a);

  Connective kind() const;
  bool is(Connective c) const { return kind() == c; }
  bool is_modal() const { return is(Connective::Box) || is(Connective::Dia); }
  bool is_binary() const;

  /// Atom index (>= 1). Only meaningful for atoms.
  std::uint32_t atom_index() const;
  /// Left operand of a binary connective, or the operand of a modality.
  Formula left() const;
  /// Right operand of a binary connective.
  Formula right() const;
  Formula operand() const { return left(); }

  /// Number of nodes in the tree.
  std::size_t size() const;
  /// Number of binary connectives and modalities.
  std::size_t complexity() const;
  std::size_t modal_depth() const;

  std::size_t hash() const;
  const detail::Node* node() const { return node_; }

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }
  friend bool operator!=(Formula a, Formula b) { return a.node_ != b.node_; }

 private:
  explicit Formula(const detail::Node* n) : node_(n) {}
  const detail::Node* node_;
};

/// Canonical total order: complexity first, then structure. Independent of
/// construction order, so it is stable across runs.
std::strong_ordering canonical_compare(Formula a, Formula b);

struct CanonicalLess {
  bool operator()(Formula a, Formula b) const {
    return canonical_compare(a, b) < 0;
  }
};

using FormulaSet = std::set<Formula, CanonicalLess>;

/// {bottom} together with every atom occurring in `f`.
FormulaSet vars(Formula f);
FormulaSet vars(const std::vector<Formula>& fs);

/// Smallest set containing `f` and closed under immediate subformulas.
FormulaSet subformula_closure(Formula f);

/// Position-annotated syntax error.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// Maps bare identifiers to atom indices. `p<k>` always denotes index k;
/// other identifiers receive the smallest free index in first-occurrence
/// order, skipping every index reserved by an explicit `p<k>`.
class SymbolTable {
 public:
  /// Reserves indices of all explicit `p<k>` tokens in `text`.
  void reserve_explicit(std::string_view text);
  void reserve(std::uint32_t index);
  std::uint32_t index_of(const std::string& name);
  std::optional<std::string> name_of(std::uint32_t index) const;
  bool empty() const { return by_name_.empty(); }

 private:
  std::map<std::string, std::uint32_t> by_name_;
  std::map<std::uint32_t, std::string> by_index_;
  std::set<std::uint32_t> reserved_;
};

Formula parse(std::string_view text);
Formula parse(std::string_view text, SymbolTable& symbols);

struct RenderOptions {
  /// Print `A -> bot` as `~A` and `bot -> bot` as `top`.
  bool pretty = false;
  /// Print atoms by their identifier when the table knows one.
  const SymbolTable* symbols = nullptr;
};

/// Minimal-parenthesis ASCII rendering; parse(render(f)) == f.
std::string render(Formula f, const RenderOptions& options = {});

}  // namespace wmodal

template <>
struct std::hash<wmodal::Formula> {
  std::size_t operator()(wmodal::Formula f) const noexcept { return f.hash(); }
};
