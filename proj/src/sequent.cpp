#include "wmodal/sequent.hpp"

#include <algorithm>
#include <stdexcept>

namespace wmodal {

void canonical_sort(std::vector<Formula>& fs) {
  std::sort(fs.begin(), fs.end(), CanonicalLess{});
}

Sequent::Sequent(std::vector<Formula> antecedent,
                 std::vector<Formula> succedent, Mode mode)
    : antecedent_(std::move(antecedent)),
      succedent_(std::move(succedent)),
      mode_(mode) {
  if (mode_ == Mode::Constructive && succedent_.size() > 1)
    throw std::invalid_argument(
        "constructive sequents have at most one succedent formula");
  canonical_sort(antecedent_);
  canonical_sort(succedent_);
}

Formula interpret(const Sequent& s) {
  const auto& gamma = s.antecedent();
  const auto& delta = s.succedent();
  Formula rhs = Formula::bottom();
  if (!delta.empty()) {
    rhs = delta.front();
    for (std::size_t i = 1; i < delta.size(); ++i)
      rhs = Formula::disj(rhs, delta[i]);
  }
  if (gamma.empty()) return rhs;
  Formula lhs = gamma.front();
  for (std::size_t i = 1; i < gamma.size(); ++i)
    lhs = Formula::conj(lhs, gamma[i]);
  return Formula::implies(lhs, rhs);
}

SequentKey key_of(const Sequent& s) {
  SequentKey k{s.antecedent(), s.succedent()};
  k.antecedent.erase(std::unique(k.antecedent.begin(), k.antecedent.end()),
                     k.antecedent.end());
  k.succedent.erase(std::unique(k.succedent.begin(), k.succedent.end()),
                    k.succedent.end());
  return k;
}

namespace {

std::vector<Formula> parse_list(std::string_view text, std::size_t offset,
                                SymbolTable& symbols) {
  std::vector<Formula> out;
  std::size_t start = 0;
  int depth = 0;
  auto flush = [&](std::size_t end) {
    std::string_view part = text.substr(start, end - start);
    if (part.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      if (end < text.size() || !out.empty())
        throw ParseError(offset + end, "empty formula in list");
      return;
    }
    try {
      out.push_back(parse(part, symbols));
    } catch (const ParseError& e) {
      throw ParseError(offset + start + e.position(), e.message());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text, Mode mode,
                      SymbolTable& symbols) {
  symbols.reserve_explicit(text);
  std::size_t turnstile = text.find("|-");
  std::size_t width = 2;
  if (turnstile == std::string_view::npos) {
    turnstile = text.find("⊢");
    width = std::string_view("⊢").size();
  }
  std::vector<Formula> ante;
  std::vector<Formula> succ;
  if (turnstile == std::string_view::npos) {
    succ = parse_list(text, 0, symbols);
  } else {
    ante = parse_list(text.substr(0, turnstile), 0, symbols);
    succ = parse_list(text.substr(turnstile + width), turnstile + width,
                      symbols);
  }
  if (mode == Mode::Constructive && succ.size() > 1)
    throw ParseError(turnstile == std::string_view::npos ? 0 : turnstile,
                     "constructive sequents have at most one succedent "
                     "formula");
  return Sequent(std::move(ante), std::move(succ), mode);
}

Sequent parse_sequent(std::string_view text, Mode mode) {
  SymbolTable symbols;
  return parse_sequent(text, mode, symbols);
}

std::string render(const Sequent& s, const RenderOptions& options) {
  std::string out;
  auto list = [&](const std::vector<Formula>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += ", ";
      out += render(fs[i], options);
    }
  };
  list(s.antecedent());
  out += s.antecedent().empty() ? "|-" : " |-";
  if (!s.succedent().empty()) out += ' ';
  list(s.succedent());
  return out;
}

}  // namespace wmodal
