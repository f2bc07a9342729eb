#include "wmodal/formula.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace wmodal {

namespace detail {

struct Node {
  Connective kind;
  std::uint32_t atom;
  const Node* left;
  const Node* right;
  std::size_t size;
  std::size_t complexity;
  std::size_t modal_depth;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

struct NodeHash {
  std::size_t operator()(const Node* n) const { return n->hash; }
};

struct NodeEq {
  bool operator()(const Node* a, const Node* b) const {
    return a->kind == b->kind && a->atom == b->atom && a->left == b->left &&
           a->right == b->right;
  }
};

class InternTable {
 public:
  const Node* get(Connective kind, std::uint32_t atom, const Node* l,
                  const Node* r) {
    Node probe{kind, atom, l, r, 1, 0, 0, 0};
    probe.hash = mix(mix(mix(static_cast<std::size_t>(kind), atom),
                         l ? l->hash : 0x51u),
                     r ? r->hash : 0x73u);
    if (l) {
      probe.size += l->size;
      probe.modal_depth = l->modal_depth;
    }
    if (r) {
      probe.size += r->size;
      probe.modal_depth = std::max(probe.modal_depth, r->modal_depth);
    }
    switch (kind) {
      case Connective::Atom:
      case Connective::Bottom:
        break;
      case Connective::Box:
      case Connective::Dia:
        probe.complexity = 1 + l->complexity;
        probe.modal_depth += 1;
        break;
      default:
        probe.complexity = 1 + l->complexity + r->complexity;
        break;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(&probe);
    if (it != index_.end()) return *it;
    nodes_.push_back(probe);
    const Node* stored = &nodes_.back();
    index_.insert(stored);
    return stored;
  }

 private:
  std::mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_set<const Node*, NodeHash, NodeEq> index_;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace
}  // namespace detail

using detail::Node;

Formula::Formula() : Formula(bottom()) {}

Formula Formula::atom(std::uint32_t index) {
  if (index == 0) throw std::invalid_argument("atom indices start at 1");
  return Formula(detail::table().get(Connective::Atom, index, nullptr, nullptr));
}

Formula Formula::bottom() {
  static const Node* n =
      detail::table().get(Connective::Bottom, 0, nullptr, nullptr);
  return Formula(n);
}

Formula Formula::top() { return implies(bottom(), bottom()); }

Formula Formula::conj(Formula a, Formula b) {
  return Formula(detail::table().get(Connective::And, 0, a.node_, b.node_));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(detail::table().get(Connective::Or, 0, a.node_, b.node_));
}

Formula Formula::implies(Formula a, Formula b) {
  return Formula(detail::table().get(Connective::Imp, 0, a.node_, b.node_));
}

Formula Formula::negation(Formula a) { return implies(a, bottom()); }

Formula Formula::iff(Formula a, Formula b) {
  return conj(implies(a, b), implies(b, a));
}

Formula Formula::box(Formula a) {
  return Formula(detail::table().get(Connective::Box, 0, a.node_, nullptr));
}

Formula Formula::dia(Formula a) {
  return Formula(detail::table().get(Connective::Dia, 0, a.node_, nullptr));
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  auto k = kind();
  return k == Connective::And || k == Connective::Or || k == Connective::Imp;
}

std::uint32_t Formula::atom_index() const { return node_->atom; }
Formula Formula::left() const { return Formula(node_->left); }
Formula Formula::right() const { return Formula(node_->right); }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::complexity() const { return node_->complexity; }
std::size_t Formula::modal_depth() const { return node_->modal_depth; }
std::size_t Formula::hash() const { return node_->hash; }

namespace {

std::strong_ordering structural_compare(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a->kind <=> b->kind; c != 0) return c;
  if (auto c = a->atom <=> b->atom; c != 0) return c;
  if (a->left && b->left) {
    if (auto c = a->left->complexity <=> b->left->complexity; c != 0) return c;
    if (auto c = structural_compare(a->left, b->left); c != 0) return c;
  }
  if (a->right && b->right) {
    if (auto c = a->right->complexity <=> b->right->complexity; c != 0)
      return c;
    return structural_compare(a->right, b->right);
  }
  return std::strong_ordering::equal;
}

void collect_vars(Formula f, FormulaSet& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out.insert(f);
      return;
    case Connective::Bottom:
      return;
    case Connective::Box:
    case Connective::Dia:
      collect_vars(f.operand(), out);
      return;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
  }
}

void collect_closure(Formula f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f.is_modal()) {
    collect_closure(f.operand(), out);
  } else if (f.is_binary()) {
    collect_closure(f.left(), out);
    collect_closure(f.right(), out);
  }
}

}  // namespace

std::strong_ordering canonical_compare(Formula a, Formula b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.complexity() <=> b.complexity(); c != 0) return c;
  return structural_compare(a.node(), b.node());
}

FormulaSet vars(Formula f) {
  FormulaSet out{Formula::bottom()};
  collect_vars(f, out);
  return out;
}

FormulaSet vars(const std::vector<Formula>& fs) {
  FormulaSet out{Formula::bottom()};
  for (Formula f : fs) collect_vars(f, out);
  return out;
}

FormulaSet subformula_closure(Formula f) {
  FormulaSet out;
  collect_closure(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Symbols

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at offset " + std::to_string(position) + ": " +
                         message),
      position_(position),
      message_(message) {}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// `p` followed only by digits, with no leading zero.
std::optional<std::uint32_t> explicit_atom(std::string_view word) {
  if (word.size() < 2 || word[0] != 'p' || word[1] == '0') return std::nullopt;
  std::uint64_t value = 0;
  for (char c : word.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 0xffffffffULL) return std::nullopt;
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

void SymbolTable::reserve_explicit(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      if (auto k = explicit_atom(text.substr(i, j - i))) reserve(*k);
      i = j;
    } else {
      ++i;
    }
  }
}

void SymbolTable::reserve(std::uint32_t index) { reserved_.insert(index); }

std::uint32_t SymbolTable::index_of(const std::string& name) {
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  std::uint32_t k = 1;
  while (reserved_.count(k) || by_index_.count(k)) ++k;
  by_name_.emplace(name, k);
  by_index_.emplace(k, name);
  return k;
}

std::optional<std::string> SymbolTable::name_of(std::uint32_t index) const {
  if (auto it = by_index_.find(index); it != by_index_.end()) return it->second;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  End, LParen, RParen, Imp, Iff, Or, And, Box, Dia, Not, Bot, Top, Atom, Ident
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  std::uint32_t atom = 0;
};

struct Alias {
  std::string_view utf8;
  Tok tok;
};

constexpr Alias kAliases[] = {
    {"⊥", Tok::Bot}, {"⊤", Tok::Top}, {"¬", Tok::Not},
    {"∧", Tok::And}, {"∨", Tok::Or},  {"→", Tok::Imp},
    {"↔", Tok::Iff}, {"□", Tok::Box}, {"◇", Tok::Dia},
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& a : kAliases) {
      if (starts(a.utf8)) {
        out.push_back({a.tok, i, std::string(a.utf8)});
        i += a.utf8.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (starts("<->")) {
      out.push_back({Tok::Iff, i, "<->"});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Imp, i, "->"});
      i += 2;
    } else if (starts("[]")) {
      out.push_back({Tok::Box, i, "[]"});
      i += 2;
    } else if (starts("<>")) {
      out.push_back({Tok::Dia, i, "<>"});
      i += 2;
    } else if (c == '(') {
      out.push_back({Tok::LParen, i++, "("});
    } else if (c == ')') {
      out.push_back({Tok::RParen, i++, ")"});
    } else if (c == '|') {
      out.push_back({Tok::Or, i++, "|"});
    } else if (c == '&') {
      out.push_back({Tok::And, i++, "&"});
    } else if (c == '~') {
      out.push_back({Tok::Not, i++, "~"});
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      if (word == "bot") {
        out.push_back({Tok::Bot, i, word});
      } else if (word == "top") {
        out.push_back({Tok::Top, i, word});
      } else if (auto k = explicit_atom(word)) {
        out.push_back({Tok::Atom, i, word, *k});
      } else {
        out.push_back({Tok::Ident, i, word});
      }
      i = j;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, SymbolTable& symbols)
      : toks_(std::move(toks)), symbols_(symbols) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().kind != Tok::End)
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }

  Formula formula() { return imp(); }

  Formula imp() {
    Formula lhs = disjunction();
    if (accept(Tok::Imp)) return Formula::implies(lhs, imp());
    if (accept(Tok::Iff)) return Formula::iff(lhs, disjunction());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Box)) return Formula::box(unary());
    if (accept(Tok::Dia)) return Formula::dia(unary());
    if (accept(Tok::Not)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Bot:
        return Formula::bottom();
      case Tok::Top:
        return Formula::top();
      case Tok::Atom:
        return Formula::atom(t.atom);
      case Tok::Ident:
        return Formula::atom(symbols_.index_of(t.text));
      case Tok::LParen: {
        Formula f = formula();
        if (!accept(Tok::RParen))
          throw ParseError(peek().pos, "expected ')'");
        return f;
      }
      case Tok::End:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SymbolTable& symbols_;
};

}  // namespace

Formula parse(std::string_view text) {
  SymbolTable symbols;
  return parse(text, symbols);
}

Formula parse(std::string_view text, SymbolTable& symbols) {
  symbols.reserve_explicit(text);
  return Parser(tokenize(text), symbols).parse_all();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Binding strength: imp < or < and < unary/atomic.
int level(Formula f, bool pretty) {
  switch (f.kind()) {
    case Connective::Imp:
      if (pretty && (f.right() == Formula::bottom())) return 4;
      return 1;
    case Connective::Or:
      return 2;
    case Connective::And:
      return 3;
    default:
      return 4;
  }
}

void print(Formula f, const RenderOptions& opt, std::string& out);

void print_at(Formula f, int min_level, const RenderOptions& opt,
              std::string& out) {
  bool parens = level(f, opt.pretty) < min_level;
  if (parens) out += '(';
  print(f, opt, out);
  if (parens) out += ')';
}

void print(Formula f, const RenderOptions& opt, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      if (opt.symbols) {
        if (auto name = opt.symbols->name_of(f.atom_index())) {
          out += *name;
          return;
        }
      }
      out += 'p';
      out += std::to_string(f.atom_index());
      return;
    case Connective::Bottom:
      out += "bot";
      return;
    case Connective::Box:
      out += "[]";
      print_at(f.operand(), 4, opt, out);
      return;
    case Connective::Dia:
      out += "<>";
      print_at(f.operand(), 4, opt, out);
      return;
    case Connective::And:
      print_at(f.left(), 3, opt, out);
      out += " & ";
      print_at(f.right(), 4, opt, out);
      return;
    case Connective::Or:
      print_at(f.left(), 2, opt, out);
      out += " | ";
      print_at(f.right(), 3, opt, out);
      return;
    case Connective::Imp:
      if (opt.pretty && f.right() == Formula::bottom()) {
        if (f.left() == Formula::bottom()) {
          out += "top";
          return;
        }
        out += '~';
        print_at(f.left(), 4, opt, out);
        return;
      }
      print_at(f.left(), 2, opt, out);
      out += " -> ";
      print_at(f.right(), 1, opt, out);
      return;
  }
}

}  // namespace

std::string render(Formula f, const RenderOptions& options) {
  std::string out;
  print(f, options, out);
  return out;
}

}  // namespace wmodal
